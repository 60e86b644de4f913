"""Global numerical tolerances. These are fixed, not configurable."""

# validation of states, bases and probability vectors
VALIDATION_TOL = 1e-10
# eigen/SVD reconstruction
RECONSTRUCTION_TOL = 1e-9
# comparison of derived quantities (entropy identities, bound relations)
DERIVED_TOL = 1e-8
# Hermiticity accepted by hermitian_spectrum
HERMITIAN_INPUT_TOL = 1e-8
# entries of a probability vector may dip this far below zero before clamping
PROB_NEGATIVE_TOL = 1e-12
# ensemble branches below this probability are placeholders
BRANCH_FLOOR = 1e-12
# ensemble reconstruction of the memory marginal
ENSEMBLE_TOL = 1e-9
# relative entropy support test
SUPPORT_EIGEN_TOL = 1e-12
SUPPORT_WEIGHT_TOL = 1e-10
# frames
FRAME_TOL = 1e-9
# witness margin needed before declaring entanglement
WITNESS_TOL = 1e-6

# largest total Hilbert space dimension handled
MAX_TOTAL_DIM = 64
