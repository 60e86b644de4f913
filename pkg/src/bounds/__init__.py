from src.bounds.classical import b_cp, b_maj_ds, b_mu, b_xj, classical_parts
from src.bounds.measures import q1, q2, q_lambda
from src.bounds.overlaps import (MajorizationFrame, OverlapData, direct_sum_frame, frame_from_sequence,
                                 overlaps, trivial_frame)
from src.bounds.report import (DEFAULT_LAMBDAS, BoundReport, PluginBound, bound_adabi, bound_c, bound_cc,
                               default_registry, evaluate_plugins, hybrid_bound, make_registry)

__all__ = [
    'b_cp', 'b_maj_ds', 'b_mu', 'b_xj', 'classical_parts', 'q1', 'q2', 'q_lambda',
    'MajorizationFrame', 'OverlapData', 'direct_sum_frame', 'frame_from_sequence', 'overlaps', 'trivial_frame',
    'DEFAULT_LAMBDAS', 'BoundReport', 'PluginBound', 'bound_adabi', 'bound_c', 'bound_cc',
    'default_registry', 'evaluate_plugins', 'hybrid_bound', 'make_registry',
]
