"""Entropic bounds for chains of N >= 2 measurements, with and without quantum memory."""
from dataclasses import dataclass, field
from itertools import permutations
from typing import Optional, Sequence, Tuple

import numpy as np

from src.bounds import MajorizationFrame, trivial_frame
from src.entropy import conditional_entropy, measurement_probs, von_neumann
from src.logger import logging
from src.qcore import (DimensionError, GuardError, ProbVector, ProjectiveBasis, QuantumState, RangeError,
                       partial_trace)

MAX_CHAIN_PERMUTATION = 7
TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class MeasurementChain:
    bases: Tuple[ProjectiveBasis, ...]

    def __post_init__(self):
        bases = tuple(self.bases)
        if len(bases) < 2:
            raise RangeError(f"a measurement chain needs at least 2 bases, got {len(bases)}",
                             amount=float(2 - len(bases)), detail='N >= 2')
        dims = {b.dim for b in bases}
        if len(dims) != 1:
            raise DimensionError(f"all bases of a chain must share one dimension, got {sorted(dims)}")
        object.__setattr__(self, 'bases', bases)

    def __len__(self) -> int:
        return len(self.bases)

    @property
    def dim(self) -> int:
        return self.bases[0].dim

    def reordered(self, order: Sequence[int]) -> 'MeasurementChain':
        return MeasurementChain(tuple(self.bases[i] for i in order))


@dataclass(frozen=True, eq=False)
class ChainCoefficients:
    """b(i_N) over the outcomes of the last basis, and their stable descending sort."""
    raw: np.ndarray
    sorted: np.ndarray
    order: np.ndarray
    probs: ProbVector = field(repr=False)


def _overlap_matrix(m1: ProjectiveBasis, m2: ProjectiveBasis) -> np.ndarray:
    return np.abs(m1.vectors.conj().T @ m2.vectors) ** 2


def chain_coefficients(chain: MeasurementChain, measured_state: QuantumState) -> ChainCoefficients:
    """b(i_N) = sum over i_2..i_{N-1} of max_{i_1} c(1,2) times the remaining pairwise overlaps.

    The maximum over i_1 is a column maximum of the first overlap matrix; the intermediate
    indices are contracted one matrix product at a time.
    """
    if measured_state.dim != chain.dim:
        raise DimensionError(f"chain dimension {chain.dim} does not match measured state dimension "
                             f"{measured_state.dim}")
    bases = chain.bases
    b = np.max(_overlap_matrix(bases[0], bases[1]), axis=0)
    for m in range(1, len(bases) - 1):
        b = b @ _overlap_matrix(bases[m], bases[m + 1])
    order = np.argsort(-b, kind='stable')
    probs = measurement_probs(measured_state, bases[-1])
    return ChainCoefficients(raw=b, sorted=b[order], order=order, probs=probs.reordered(order))


def _resolve_frame(frame: Optional[MajorizationFrame], d: int) -> MajorizationFrame:
    frame = trivial_frame(d) if frame is None else frame
    if len(frame) < d - 1:
        raise DimensionError(f"frame of length {len(frame)} is too short for d={d} (needs {d - 1})")
    return frame


def coefficient_terms(coefficients: ChainCoefficients, frame: MajorizationFrame) -> float:
    """-log2 b_1 + sum_k (1 - Omega_k) log2(b_k / b_{k+1})."""
    b = coefficients.sorted
    d = b.shape[0]
    frame = _resolve_frame(frame, d)
    value = -np.log2(b[0])
    for k in range(1, d):
        value += (1.0 - frame.omega(k)) * np.log2(b[k - 1] / b[k])
    return float(value)


def multi_bound(state: QuantumState, chain: MeasurementChain,
                frame: Optional[MajorizationFrame] = None, measured: int = 0) -> float:
    """(N-1) H(A|B) - log2 b_1 + sum_k (1 - Omega_k) log2(b_k / b_{k+1}); trivial frame by default."""
    if len(state.dims) != 2:
        raise DimensionError(f"expected a bipartite state, got dims {list(state.dims)}")
    measured_state = partial_trace(state, [measured])
    coefficients = chain_coefficients(chain, measured_state)
    h_cond = conditional_entropy(state, memory=1 - measured)
    return (len(chain) - 1) * h_cond + coefficient_terms(coefficients, _resolve_frame(frame, chain.dim))


def multi_bound_no_memory(measured_state: QuantumState, chain: MeasurementChain,
                          frame: Optional[MajorizationFrame] = None) -> float:
    """(N-1) H(A) - log2 b_1 + sum_k (1 - Omega_k) log2(b_k / b_{k+1})."""
    coefficients = chain_coefficients(chain, measured_state)
    return ((len(chain) - 1) * von_neumann(measured_state)
            + coefficient_terms(coefficients, _resolve_frame(frame, chain.dim)))


def multi_bound_opt(state: QuantumState, chain: MeasurementChain,
                    frame: Optional[MajorizationFrame] = None,
                    measured: int = 0) -> Tuple[float, Tuple[int, ...]]:
    """Best multi_bound over every ordering of the chain.

    Orderings are visited lexicographically and only a strictly larger value (by 1e-12)
    replaces the incumbent, so ties resolve to the smallest permutation.
    """
    n = len(chain)
    if n > MAX_CHAIN_PERMUTATION:
        raise GuardError(f"permutation search is limited to N <= {MAX_CHAIN_PERMUTATION}, got {n}")
    best, best_order = -np.inf, tuple(range(n))
    for order in permutations(range(n)):
        value = multi_bound(state, chain.reordered(order), frame, measured)
        if value > best + TIE_TOL:
            best, best_order = value, order
    logging.debug('best chain ordering %s with bound %.6f', best_order, best)
    return float(best), tuple(int(i) for i in best_order)
