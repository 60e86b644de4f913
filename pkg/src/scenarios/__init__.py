from src.qcore import RangeError
from src.scenarios.fixtures import (Scenario, bell, bell_basis, bell_ket, entangled_witness_chain,
                                    equal_overlap_chain, fourier_basis, horodecki_matrix, horodecki_state,
                                    mub_qubit, pair_bases, qubit_pair, rho1, rho2, standard_basis, werner)
from src.scenarios.generators import (child_generators, random_basis, random_ket, random_separable_state,
                                      random_state)

SCENARIOS = {
    'fig1': lambda theta=0.0, **_: rho1(theta),
    'fig2': lambda theta=0.0, **_: rho2(theta),
    'fig3': lambda p=0.5, **_: horodecki_state(p),
    'fig4': lambda p=0.5, theta=0.7853981633974483, **_: werner(p, theta),
    'bell': lambda d=2, **_: bell(int(d)),
    'horodecki': lambda p=0.5, **_: horodecki_state(p),
    'werner': lambda p=0.5, theta=0.7853981633974483, **_: werner(p, theta),
}


def build_scenario(name: str, **params) -> Scenario:
    """Scenario by command-line name."""
    try:
        factory = SCENARIOS[name]
    except KeyError:
        raise RangeError(f"unknown scenario {name!r}; known: {', '.join(sorted(SCENARIOS))}",
                         detail='scenario name') from None
    return factory(**params)


__all__ = [
    'SCENARIOS', 'Scenario', 'build_scenario', 'bell', 'bell_basis', 'bell_ket', 'entangled_witness_chain',
    'equal_overlap_chain', 'fourier_basis', 'horodecki_matrix', 'horodecki_state', 'mub_qubit', 'pair_bases',
    'qubit_pair', 'rho1', 'rho2', 'standard_basis', 'werner',
    'child_generators', 'random_basis', 'random_ket', 'random_separable_state', 'random_state',
]
