"""Figure data: bound comparisons along one-parameter families and the Werner surface."""
from typing import Dict, Optional

import numpy as np
import pandas as pd

from src.bounds import b_maj_ds, b_mu, b_xj, direct_sum_frame, overlaps, q1, q2
from src.entropy import average_memory_entropy, entropic_sum, entropy_report, von_neumann
from src.logger import logging
from src.qcore import RangeError, partial_trace
from src.scenarios import Scenario, equal_overlap_chain, horodecki_state, rho1, rho2, werner

SINGLE_STATE_COLUMNS = ['theta', 'entropic_sum', 'b_mu', 'b_mu_plus_HA', 'b_maj_ds', 'b_xj_plus_HA']
FIG3_COLUMNS = ['p', 'B1', 'B2', 'B3', 'B4']
FIG4_COLUMNS = ['p', 'theta', 'q2_minus_q1']


def single_state_row(scenario: Scenario) -> Dict[str, float]:
    """Bounds without memory for a one-qubit scenario."""
    m1, m2 = scenario.bases
    o = overlaps(m1, m2)
    frame = direct_sum_frame(m1, m2)
    h_a = von_neumann(scenario.state)
    mu = b_mu(o)
    return {
        'theta': scenario.params['theta'],
        'entropic_sum': entropic_sum(scenario.state, scenario.bases),
        'b_mu': mu,
        'b_mu_plus_HA': mu + h_a,
        'b_maj_ds': b_maj_ds(frame),
        'b_xj_plus_HA': b_xj(o, frame) + h_a,
    }


def fig3_row(p: float) -> Dict[str, float]:
    """B1..B4 of the 2 x 4 state with memory on the qubit side.

    B3 uses the pair (M1, M2), B4 the pair (M3, M4) with identical overlaps.
    """
    scenario = horodecki_state(p)
    state, measured = scenario.state, scenario.measured
    h_measured = von_neumann(partial_trace(state, [measured]))
    h_memory = von_neumann(partial_trace(state, [1 - measured]))
    h_joint = von_neumann(state)
    m1, m2, m3, m4 = equal_overlap_chain()
    s1, s2, s3, s4 = (average_memory_entropy(state, m, measured) for m in (m1, m2, m3, m4))
    return {
        'p': p,
        'B1': h_measured,
        'B2': h_joint - h_memory,
        'B3': h_measured - 2 * h_memory + s1 + s2,
        'B4': h_measured - 2 * h_memory + s3 + s4,
    }


def fig4_row(p: float, theta: float) -> Dict[str, float]:
    scenario = werner(p, theta)
    m1, m2 = scenario.bases
    report = entropy_report(scenario.state, scenario.measured)
    return {'p': p, 'theta': theta,
            'q2_minus_q1': q2(scenario.state, m1, m2, scenario.measured) - q1(report)}


def run_sweep(name: str, steps: Optional[int] = None, grid: Optional[int] = None) -> pd.DataFrame:
    """Rows in ascending parameter order for fig1, fig2, fig3 or fig4."""
    if name in ('fig1', 'fig2'):
        steps = 50 if steps is None else int(steps)
        _require_positive('steps', steps)
        factory = rho1 if name == 'fig1' else rho2
        thetas = np.linspace(0.0, np.pi / 2, steps)
        rows = [single_state_row(factory(float(t))) for t in thetas]
        columns = SINGLE_STATE_COLUMNS
    elif name == 'fig3':
        steps = 9 if steps is None else int(steps)
        _require_positive('steps', steps)
        rows = [fig3_row(k / (steps + 1)) for k in range(1, steps + 1)]
        columns = FIG3_COLUMNS
    elif name == 'fig4':
        grid = 10 if grid is None else int(grid)
        _require_positive('grid', grid)
        rows = [fig4_row(float(p), float(t))
                for p in np.linspace(0.05, 0.95, grid) for t in np.linspace(0.1, 6.2, grid)]
        columns = FIG4_COLUMNS
    else:
        raise RangeError(f"unknown sweep scenario {name!r}; expected fig1, fig2, fig3 or fig4",
                         detail='scenario name')
    logging.info('sweep %s produced %d rows', name, len(rows))
    return pd.DataFrame(rows, columns=columns)


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise RangeError(f"{name} must be >= 1, got {value}", amount=float(1 - value), detail=f'{name} >= 1')
