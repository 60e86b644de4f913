"""Seeded random instances: Ginibre states, Haar-style bases and separable mixtures.

Every generator draws from a numpy ``Generator`` (PCG64 seeded through SeedSequence).
"""
from typing import Optional, Sequence

import numpy as np

from src.qcore import (ProjectiveBasis, QuantumState, RangeError, basis_from_columns, product_state,
                       ket_to_density, validate_state)


def ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_state(dims: Sequence[int], rng: np.random.Generator) -> QuantumState:
    """G G^dagger / Tr(G G^dagger) for a square complex Gaussian G."""
    dims = [int(d) for d in dims]
    side = int(np.prod(dims))
    g = ginibre(rng, side, side)
    rho = g @ g.conj().T
    return validate_state(rho / np.trace(rho).real, dims)


def random_basis(d: int, rng: np.random.Generator, label: str = 'random') -> ProjectiveBasis:
    """Columns of Q from a QR factorization, phases fixed so that diag(R) is positive."""
    q, r = np.linalg.qr(ginibre(rng, d, d))
    phases = np.diag(r) / np.abs(np.diag(r))
    return basis_from_columns(q * phases, label)


def random_ket(d: int, rng: np.random.Generator) -> np.ndarray:
    ket = ginibre(rng, d, 1).ravel()
    return ket / np.linalg.norm(ket)


def random_separable_state(d_a: int, d_b: int, rng: np.random.Generator,
                           terms: Optional[int] = None) -> QuantumState:
    """Convex mixture of at most four pure product states with Dirichlet weights."""
    terms = int(rng.integers(1, 5)) if terms is None else int(terms)
    if terms < 1:
        raise RangeError(f"terms must be >= 1, got {terms}", amount=float(1 - terms), detail='terms >= 1')
    weights = rng.dirichlet(np.ones(terms))
    matrix = np.zeros((d_a * d_b, d_a * d_b), dtype=complex)
    for w in weights:
        term = product_state(ket_to_density(random_ket(d_a, rng)), ket_to_density(random_ket(d_b, rng)))
        matrix += w * term.matrix
    return validate_state(matrix, [d_a, d_b])


def child_generators(seed: int, count: int):
    """Independent generators for ``count`` instances; instance k does not depend on the others."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(int(seed)).spawn(int(count))]
