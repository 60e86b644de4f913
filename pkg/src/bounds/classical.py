"""State-independent lower bounds on H(M1) + H(M2) built from overlaps and frames."""
from typing import Dict

import numpy as np

from src.bounds.overlaps import MajorizationFrame, OverlapData
from src.entropy import shannon
from src.qcore import DimensionError


def b_mu(o: OverlapData) -> float:
    """log2(1/c_1)."""
    return float(-np.log2(o.c1))


def b_cp(o: OverlapData) -> float:
    c1, c2 = o.c1, o.c2
    return float(-np.log2(c1) + 0.5 * (1.0 - np.sqrt(c1)) * np.log2(c1 / c2))


def b_xj(o: OverlapData, frame: MajorizationFrame) -> float:
    """B_CP plus the frame-weighted terms over c_2 ... c_d.

    The weight of log2(c_k/c_{k+1}) is half of 2 minus the (2k)-th partial sum of (1) (+) omega,
    i.e. (1 - Omega_{2k-1}) / 2. For k = 1 this is the (1 - sqrt(c_1)) / 2 weight of B_CP.
    """
    d = o.dim
    if len(frame) != 2 * d - 1:
        raise DimensionError(f"b_xj needs a frame of length {2 * d - 1} for d={d}, got {len(frame)}")
    c = o.sorted
    value = b_cp(o)
    for k in range(2, d):
        weight = 0.5 * (1.0 - frame.omega(2 * k - 1))
        value += weight * np.log2(c[k - 1] / c[k])
    return float(value)


def b_maj_ds(frame: MajorizationFrame) -> float:
    """H(omega): Schur concavity applied to p (+) q majorized by (1) (+) omega."""
    return shannon(frame.omega_vector)


def classical_parts(o: OverlapData, frame: MajorizationFrame) -> Dict[str, float]:
    return {'B_MU': b_mu(o), 'B_CP': b_cp(o), 'B_XJ': b_xj(o, frame)}
