from src.entropy.ensembles import (ConditionalEnsemble, EntropyReport, average_memory_entropy,
                                   conditional_ensemble, conditional_sum, entropic_sum, entropy_report,
                                   holevo_terms, measured_conditional_entropy, measurement_probs,
                                   memory_state, post_measurement_state)
from src.entropy.functionals import (conditional_entropy, empirical_entropy, mutual_information,
                                     relative_entropy, shannon, spectrum, von_neumann)

__all__ = [
    'ConditionalEnsemble', 'EntropyReport', 'average_memory_entropy', 'conditional_ensemble',
    'conditional_sum', 'entropic_sum', 'entropy_report', 'holevo_terms', 'measured_conditional_entropy',
    'measurement_probs', 'memory_state', 'post_measurement_state',
    'conditional_entropy', 'empirical_entropy', 'mutual_information', 'relative_entropy', 'shannon',
    'spectrum', 'von_neumann',
]
