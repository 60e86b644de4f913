"""Overlap matrices and direct-sum majorization frames of basis pairs."""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Sequence

import numpy as np

from src.logger import logging
from src.qcore import DimensionError, GuardError, ProjectiveBasis, ValidationError
from src.qcore.tolerances import FRAME_TOL, RECONSTRUCTION_TOL, VALIDATION_TOL

MAX_ENUMERATION_DIM = 6
FRAME_KINDS = ('direct_sum', 'trivial', 'separable', 'custom')


@dataclass(frozen=True, eq=False)
class OverlapData:
    """c_jk = |<u1_j|u2_k>|^2 plus the amplitude matrix U_jk = <u1_j|u2_k>."""
    matrix: np.ndarray = field(repr=False)
    sorted: np.ndarray
    amplitudes: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def c1(self) -> float:
        return float(self.sorted[0])

    @property
    def c2(self) -> float:
        return float(self.sorted[1])


def overlaps(m1: ProjectiveBasis, m2: ProjectiveBasis) -> OverlapData:
    if m1.dim != m2.dim:
        raise DimensionError(f"bases have different dimensions: {m1.dim} and {m2.dim}")
    amplitudes = m1.vectors.conj().T @ m2.vectors
    matrix = np.abs(amplitudes) ** 2
    gap = max(float(np.max(np.abs(matrix.sum(axis=0) - 1))), float(np.max(np.abs(matrix.sum(axis=1) - 1))))
    if gap > RECONSTRUCTION_TOL:
        raise ValidationError(f"overlap matrix is not doubly stochastic (gap {gap:.3e})", amount=gap,
                              detail='row/column sums', invariant='unistochastic')
    ordered = np.sort(matrix.ravel())[::-1]
    return OverlapData(matrix, ordered, amplitudes)


@dataclass(frozen=True, eq=False)
class MajorizationFrame:
    """Nondecreasing cumulative vector (Omega_1, ..., 1).

    ``heuristic`` marks frames that are numerical lower estimates of a supremum.
    """
    cumulative: np.ndarray
    kind: str = 'custom'
    heuristic: bool = False
    meta: Dict[str, object] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        c = np.asarray(self.cumulative, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValidationError("frame must be a nonempty vector", amount=float('nan'),
                                  detail='shape', invariant='frame')
        if self.kind not in FRAME_KINDS:
            raise ValidationError(f"unknown frame kind {self.kind!r}", detail='kind', invariant='frame')
        steps = np.diff(np.concatenate([[0.0], c]))
        if np.min(steps) < -VALIDATION_TOL:
            raise ValidationError("frame cumulative vector must be nondecreasing from 0",
                                  amount=float(-np.min(steps)), detail='omega entry below zero',
                                  invariant='frame')
        if abs(c[-1] - 1.0) > FRAME_TOL or np.max(c) > 1.0 + FRAME_TOL:
            raise ValidationError(f"frame must end at 1, got {c[-1]:.12g}", amount=float(abs(c[-1] - 1.0)),
                                  detail='last entry', invariant='frame')
        object.__setattr__(self, 'cumulative', np.clip(c, 0.0, 1.0))

    def __len__(self) -> int:
        return int(self.cumulative.shape[0])

    @property
    def omega_vector(self) -> np.ndarray:
        return np.clip(np.diff(np.concatenate([[0.0], self.cumulative])), 0.0, None)

    def omega(self, k: int) -> float:
        """Omega_k, 1-indexed."""
        return float(self.cumulative[k - 1])


def trivial_frame(d: int) -> MajorizationFrame:
    """Omega_k = 1 for every k."""
    return MajorizationFrame(np.ones(int(d)), kind='trivial')


def _combos(d: int, r: int) -> np.ndarray:
    return np.array(list(combinations(range(d), r)), dtype=int)


def direct_sum_frame(m1: ProjectiveBasis, m2: ProjectiveBasis) -> MajorizationFrame:
    """Frame with p (+) q majorized by (1) (+) omega for every state.

    Omega_k is the largest top singular value of an r x s submatrix of U with r + s = k + 1,
    found by exhaustive enumeration; the vector has length 2d - 1.
    """
    o = overlaps(m1, m2)
    d = o.dim
    if d > MAX_ENUMERATION_DIM:
        raise GuardError(f"direct-sum frame enumeration is limited to d <= {MAX_ENUMERATION_DIM}, got {d}")
    u = o.amplitudes
    best = np.zeros(2 * d - 1)
    for r in range(1, d + 1):
        rows = _combos(d, r)
        for s in range(1, d + 1):
            cols = _combos(d, s)
            blocks = u[rows[:, None, :, None], cols[None, :, None, :]]
            sigma = np.linalg.svd(blocks, compute_uv=False)[..., 0]
            k = r + s - 1
            best[k - 1] = max(best[k - 1], float(np.max(sigma)))
    cumulative = np.minimum(np.maximum.accumulate(best), 1.0)
    cumulative[-1] = 1.0
    logging.debug('direct-sum frame for d=%d: %s', d, cumulative)
    return MajorizationFrame(cumulative, kind='direct_sum')


def frame_from_sequence(values: Sequence[float], kind: str = 'custom') -> MajorizationFrame:
    return MajorizationFrame(np.asarray(values, dtype=float), kind=kind)
