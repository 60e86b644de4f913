from src.qcore.exceptions import (ConsistencyError, DimensionError, EURError, GuardError,
                                  RangeError, RegistryError, UnsupportedError, ValidationError)
from src.qcore.linalg import (hermitian_spectrum, ket_to_density, largest_singular_value,
                              partial_trace, product_state, tensor)
from src.qcore.objects import (ProbVector, ProjectiveBasis, QuantumState, basis_from_columns,
                               state_violations, trusted_state, validate_basis, validate_probs,
                               validate_state)

__all__ = [
    'ConsistencyError', 'DimensionError', 'EURError', 'GuardError', 'RangeError', 'RegistryError',
    'UnsupportedError', 'ValidationError',
    'hermitian_spectrum', 'ket_to_density', 'largest_singular_value', 'partial_trace', 'product_state',
    'tensor',
    'ProbVector', 'ProjectiveBasis', 'QuantumState', 'basis_from_columns', 'state_violations',
    'trusted_state', 'validate_basis', 'validate_probs', 'validate_state',
]
