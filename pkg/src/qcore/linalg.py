"""Dense linear algebra on density matrices: Kronecker products, partial traces, spectra."""
from typing import Sequence, Tuple, Union

import numpy as np

from src.logger import logging
from src.qcore.exceptions import DimensionError, FiniteError, HermiticityError
from src.qcore.objects import QuantumState, trusted_state, validate_state
from src.qcore.tolerances import HERMITIAN_INPUT_TOL, RECONSTRUCTION_TOL

MatrixLike = Union[np.ndarray, QuantumState]


def _as_matrix(m: MatrixLike) -> np.ndarray:
    if isinstance(m, QuantumState):
        return m.matrix
    m = np.asarray(m, dtype=complex)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if not np.all(np.isfinite(m)):
        raise FiniteError("matrix has NaN or Inf entries", amount=float('inf'), detail='non-finite entry')
    return m


def tensor(a: MatrixLike, b: MatrixLike) -> MatrixLike:
    """Kronecker product ``a (x) b`` with block ordering a_ij * b.

    Two states give a state whose dims are the concatenation of both profiles.
    """
    if isinstance(a, QuantumState) and isinstance(b, QuantumState):
        return trusted_state(np.kron(a.matrix, b.matrix), a.dims + b.dims)
    return np.kron(_as_matrix(a), _as_matrix(b))


def product_state(*states: QuantumState) -> QuantumState:
    if not states:
        raise DimensionError("product_state needs at least one factor")
    result = states[0]
    for state in states[1:]:
        result = tensor(result, state)
    return result


def ket_to_density(vector: Sequence[complex], dims: Sequence[int] = None) -> QuantumState:
    """|psi><psi| for a (not necessarily normalized) nonzero ket."""
    psi = np.asarray(vector, dtype=complex).ravel()
    norm = np.linalg.norm(psi)
    if norm == 0 or not np.isfinite(norm):
        raise FiniteError("ket must be finite and nonzero", amount=float(norm), detail='zero or non-finite norm')
    psi = psi / norm
    dims = list(dims) if dims is not None else [psi.shape[0]]
    return validate_state(np.outer(psi, psi.conj()), dims)


def partial_trace(state: QuantumState, keep: Sequence[int]) -> QuantumState:
    """Reduced state on the subsystems listed in ``keep`` (order of ``state.dims`` is kept)."""
    keep = sorted(set(int(k) for k in keep))
    n = len(state.dims)
    if not keep:
        raise DimensionError("partial_trace needs at least one subsystem to keep")
    if keep[0] < 0 or keep[-1] >= n:
        raise DimensionError(f"subsystems {keep} out of range for dims {list(state.dims)}")
    if len(keep) == n:
        return state

    dims = list(state.dims)
    tensor_form = state.matrix.reshape(dims + dims)
    # trace out from the highest index down so axis numbers stay valid
    for axis in sorted(set(range(n)) - set(keep), reverse=True):
        current = tensor_form.ndim // 2
        tensor_form = np.trace(tensor_form, axis1=axis, axis2=axis + current)
    kept_dims = [dims[k] for k in keep]
    side = int(np.prod(kept_dims))
    return trusted_state(tensor_form.reshape(side, side), kept_dims)


def hermitian_spectrum(m: MatrixLike) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues in descending order and the matching eigenvector columns."""
    matrix = _as_matrix(m)
    if matrix.shape[0] != matrix.shape[1]:
        raise DimensionError(f"hermitian_spectrum needs a square matrix, got {matrix.shape}")
    gap = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if gap > HERMITIAN_INPUT_TOL:
        raise HermiticityError(f"matrix is not Hermitian (deviation {gap:.3e})", amount=gap,
                               detail='max |M - M^dagger| entry')
    values, vectors = np.linalg.eigh(0.5 * (matrix + matrix.conj().T))
    values, vectors = values[::-1], vectors[:, ::-1]
    residual = float(np.max(np.abs((vectors * values) @ vectors.conj().T - matrix)))
    if residual > RECONSTRUCTION_TOL:
        logging.warning('eigen reconstruction residual %.3e above %.0e', residual, RECONSTRUCTION_TOL)
    return values, vectors


def largest_singular_value(m: MatrixLike) -> float:
    matrix = _as_matrix(m)
    if matrix.size == 0:
        return 0.0
    return float(np.linalg.svd(matrix, compute_uv=False)[0])
