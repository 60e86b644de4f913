"""Separable majorization frames and the entanglement witness built on them."""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Sequence

import numpy as np

from src.bounds import MajorizationFrame
from src.entropy import entropic_sum
from src.logger import logging
from src.multi.chain import MeasurementChain, multi_bound_no_memory
from src.qcore import QuantumState, RangeError, UnsupportedError
from src.qcore.tolerances import WITNESS_TOL

DEFAULT_MAX_ALTERNATIONS = 500
DEFAULT_CONVERGENCE = 1e-10

ENTANGLED = 'ENTANGLED'
INCONCLUSIVE = 'INCONCLUSIVE'


def _top_eigvec(operators: np.ndarray):
    """Leading eigenpair of a stack of Hermitian matrices."""
    values, vectors = np.linalg.eigh(operators)
    return values[..., -1], vectors[..., :, -1]


def _random_kets(rng: np.random.Generator, count: int, d: int) -> np.ndarray:
    kets = rng.standard_normal((count, d)) + 1j * rng.standard_normal((count, d))
    return kets / np.linalg.norm(kets, axis=1, keepdims=True)


def product_overlap_max(blocks: np.ndarray, rng: np.random.Generator, budget: int,
                        max_alternations: int = DEFAULT_MAX_ALTERNATIONS,
                        convergence: float = DEFAULT_CONVERGENCE) -> float:
    """Largest sum_i |<a b|u_i>|^2 over product kets, by alternating eigen-iteration.

    ``blocks[i]`` is u_i reshaped to a dx x dy matrix, so <a b|u_i> = a^dagger U_i conj(b).
    All ``budget`` restarts run as one batch.
    """
    dy = blocks.shape[2]
    b = _random_kets(rng, budget, dy)
    value = np.full(budget, -np.inf)
    for _ in range(max_alternations):
        w = np.einsum('ixy,ry->rix', blocks, b.conj())
        _, a = _top_eigvec(np.einsum('rix,riz->rxz', w, w.conj()))
        z = np.einsum('ixy,rx->riy', blocks, a.conj())
        current, b = _top_eigvec(np.einsum('riy,riz->ryz', z, z.conj()))
        improvement = float(np.max(current - value))
        value = np.maximum(value, current)
        if improvement < convergence:
            break
    return float(np.max(value))


def separable_frame(chain: MeasurementChain, split: Sequence[int], budget: int = 200, seed: int = 0,
                    max_alternations: int = DEFAULT_MAX_ALTERNATIONS,
                    convergence: float = DEFAULT_CONVERGENCE) -> MajorizationFrame:
    """Estimate of the frame obeyed by every separable state of a dx x dy measured system.

    Omega_k is the best weight a product state puts on k outcomes of one basis of the chain.
    The search is multi-start and may underestimate the supremum, so the frame is flagged
    heuristic. Restart seeds derive from (seed, basis index, subset index).
    """
    if int(budget) < 1:
        raise RangeError(f"frame budget must be >= 1, got {budget}", amount=float(1 - int(budget)),
                         detail='budget >= 1')
    split = [int(x) for x in split]
    d = chain.dim
    if len(split) != 2 or min(split) < 2 or split[0] * split[1] != d:
        raise UnsupportedError(f"split {split} is not a bipartition of the measured dimension {d}")
    dx, dy = split

    omega = np.zeros(d)
    for m, basis in enumerate(chain.bases):
        blocks_all = basis.vectors.T.reshape(d, dx, dy)
        subset_idx = 0
        for k in range(1, d):
            for subset in combinations(range(d), k):
                rng = np.random.default_rng([int(seed), m, subset_idx])
                subset_idx += 1
                value = product_overlap_max(blocks_all[list(subset)], rng, int(budget),
                                            max_alternations, convergence)
                omega[k - 1] = max(omega[k - 1], value)
    omega[d - 1] = 1.0

    cumulative = np.empty(d)
    previous = 0.0
    for k in range(d):
        previous = min(max(omega[k], previous), 1.0)
        cumulative[k] = previous
    cumulative[-1] = 1.0
    logging.info('separable frame for split %s: %s', split, np.array2string(cumulative, precision=6))
    return MajorizationFrame(cumulative, kind='separable', heuristic=True,
                             meta={'split': split, 'budget': int(budget), 'seed': int(seed)})


@dataclass(frozen=True)
class WitnessVerdict:
    lhs: float
    rhs: float
    margin: float
    verdict: str
    frame: Sequence[float] = field(default_factory=tuple)

    def as_dict(self) -> Dict[str, object]:
        return {'lhs': self.lhs, 'rhs': self.rhs, 'margin': self.margin, 'verdict': self.verdict,
                'frame': list(self.frame)}


def witness(measured_state: QuantumState, chain: MeasurementChain, frame: MajorizationFrame) -> WitnessVerdict:
    """Compare sum_m H(M_m) with the bound every separable state obeys.

    ENTANGLED only when the separable bound exceeds the entropic sum by more than 1e-6.
    """
    if frame.kind != 'separable':
        raise UnsupportedError(f"witness needs a separable frame, got a {frame.kind!r} frame")
    if len(measured_state.dims) != 2:
        raise UnsupportedError(f"witness needs a bipartite measured state, got dims {list(measured_state.dims)}")
    lhs = entropic_sum(measured_state, chain.bases)
    rhs = multi_bound_no_memory(measured_state, chain, frame)
    margin = rhs - lhs
    verdict = ENTANGLED if margin > WITNESS_TOL else INCONCLUSIVE
    logging.info('witness: lhs %.9f rhs %.9f margin %.3e -> %s', lhs, rhs, margin, verdict)
    return WitnessVerdict(lhs=lhs, rhs=rhs, margin=margin, verdict=verdict,
                          frame=tuple(float(x) for x in frame.cumulative))
