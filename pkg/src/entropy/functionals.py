"""Entropy functionals in bits."""
from typing import Sequence, Union

import numpy as np
from scipy.special import entr

from src.logger import logging
from src.qcore import (DimensionError, ProbVector, QuantumState, RangeError, hermitian_spectrum,
                       partial_trace, validate_probs)
from src.qcore.tolerances import SUPPORT_EIGEN_TOL, SUPPORT_WEIGHT_TOL

LN2 = np.log(2.0)

Probabilities = Union[ProbVector, Sequence[float], np.ndarray]


def _entries(p: Probabilities) -> np.ndarray:
    if isinstance(p, ProbVector):
        return p.entries
    return validate_probs(p).entries


def shannon(p: Probabilities) -> float:
    """-sum p_i log2 p_i with 0 log 0 = 0."""
    return float(np.sum(entr(_entries(p))) / LN2)


def spectrum(state: QuantumState) -> np.ndarray:
    """Eigenvalues of a validated state, descending and clamped to [0, 1]."""
    values, _ = hermitian_spectrum(state.matrix)
    return np.clip(values, 0.0, 1.0)


def von_neumann(state: QuantumState) -> float:
    return float(np.sum(entr(spectrum(state))) / LN2)


def relative_entropy(rho: QuantumState, sigma: QuantumState) -> float:
    """Tr rho (log2 rho - log2 sigma), or +inf when supp(rho) is not inside supp(sigma)."""
    if rho.matrix.shape != sigma.matrix.shape or tuple(rho.dims) != tuple(sigma.dims):
        raise DimensionError(f"relative_entropy needs matching dims, got {list(rho.dims)} and {list(sigma.dims)}")
    values, vectors = hermitian_spectrum(sigma.matrix)
    # weight of rho along each eigenvector of sigma
    weights = np.real(np.einsum('ik,ij,jk->k', vectors.conj(), rho.matrix, vectors))
    null = values < SUPPORT_EIGEN_TOL
    if np.any(weights[null] > SUPPORT_WEIGHT_TOL):
        logging.debug('support of rho escapes sigma: weight %.3e', float(np.max(weights[null])))
        return float('inf')
    cross = float(np.sum(weights[~null] * np.log2(values[~null])))
    return -von_neumann(rho) - cross


def mutual_information(state: QuantumState) -> float:
    """I(A:B) = H(A) + H(B) - H(AB) of a bipartite state."""
    _require_bipartite(state)
    return (von_neumann(partial_trace(state, [0])) + von_neumann(partial_trace(state, [1]))
            - von_neumann(state))


def conditional_entropy(state: QuantumState, memory: int = 1) -> float:
    """H(X|memory) = H(AB) - H(memory)."""
    _require_bipartite(state)
    if memory not in (0, 1):
        raise DimensionError(f"memory subsystem must be 0 or 1, got {memory}")
    return von_neumann(state) - von_neumann(partial_trace(state, [memory]))


def empirical_entropy(p: Probabilities, n: int, seed=None) -> float:
    """Plug-in Shannon estimate from ``n`` seeded draws of ``p``."""
    if int(n) < 1:
        raise RangeError(f"sample count must be >= 1, got {n}", amount=float(1 - int(n)),
                         detail='n >= 1')
    entries = _entries(p)
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(int(n), entries / np.sum(entries))
    return float(np.sum(entr(counts / float(n))) / LN2)


def _require_bipartite(state: QuantumState) -> None:
    if len(state.dims) != 2:
        raise DimensionError(f"expected a bipartite state, got dims {list(state.dims)}")
