from src.multi.chain import (ChainCoefficients, MeasurementChain, chain_coefficients, coefficient_terms,
                             multi_bound, multi_bound_no_memory, multi_bound_opt)
from src.multi.witness import (ENTANGLED, INCONCLUSIVE, WitnessVerdict, product_overlap_max,
                               separable_frame, witness)

__all__ = [
    'ChainCoefficients', 'MeasurementChain', 'chain_coefficients', 'coefficient_terms', 'multi_bound',
    'multi_bound_no_memory', 'multi_bound_opt',
    'ENTANGLED', 'INCONCLUSIVE', 'WitnessVerdict', 'product_overlap_max', 'separable_frame', 'witness',
]
