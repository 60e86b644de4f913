"""Validated quantum objects: states, projective bases and probability vectors."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from src.logger import logging
from src.qcore.exceptions import DimensionError, error_for
from src.qcore.tolerances import MAX_TOTAL_DIM, PROB_NEGATIVE_TOL, VALIDATION_TOL


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Density matrix on a composite space with subsystem dimensions ``dims``.

    Build through :func:`validate_state`; the dataclass constructor trusts its input.
    """
    dims: Tuple[int, ...]
    matrix: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    def subsystem_dim(self, index: int) -> int:
        if not 0 <= index < len(self.dims):
            raise DimensionError(f"subsystem {index} out of range for dims {list(self.dims)}")
        return self.dims[index]

    def reduced(self, keep: Sequence[int]) -> 'QuantumState':
        from src.qcore.linalg import partial_trace
        return partial_trace(self, keep)


@dataclass(frozen=True, eq=False)
class ProjectiveBasis:
    """Orthonormal basis; column ``i`` of ``vectors`` is |u_i>."""
    vectors: np.ndarray = field(repr=False)
    label: str = ''

    @property
    def dim(self) -> int:
        return int(self.vectors.shape[0])

    def vector(self, i: int) -> np.ndarray:
        return self.vectors[:, i]

    def projector(self, i: int) -> np.ndarray:
        u = self.vectors[:, i]
        return np.outer(u, u.conj())

    def with_label(self, label: str) -> 'ProjectiveBasis':
        return ProjectiveBasis(self.vectors, label)


@dataclass(frozen=True, eq=False)
class ProbVector:
    """Outcome distribution; entries are clamped at zero."""
    entries: np.ndarray

    def __len__(self) -> int:
        return int(self.entries.shape[0])

    def __getitem__(self, i):
        return self.entries[i]

    def reordered(self, order: Sequence[int]) -> 'ProbVector':
        return ProbVector(_frozen(self.entries[np.asarray(order)]))


def trusted_state(matrix: np.ndarray, dims: Sequence[int]) -> QuantumState:
    """Wrap an internally derived density matrix, symmetrizing away round-off."""
    matrix = np.asarray(matrix, dtype=complex)
    matrix = 0.5 * (matrix + matrix.conj().T)
    return QuantumState(tuple(int(d) for d in dims), _frozen(matrix))


def state_violations(matrix: Any, dims: Sequence[int]) -> List[Dict[str, Any]]:
    """Every invariant a candidate density matrix breaks, worst first per check order."""
    m = np.asarray(matrix, dtype=complex)
    dims = [int(d) for d in dims]
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"density matrix must be square, got shape {m.shape}")
    if not dims or any(d < 2 for d in dims):
        raise DimensionError(f"subsystem dimensions must be >= 2, got {dims}")
    if int(np.prod(dims)) != m.shape[0]:
        raise DimensionError(f"dims {dims} do not match matrix side {m.shape[0]}")
    if m.shape[0] > MAX_TOTAL_DIM:
        raise DimensionError(f"total dimension {m.shape[0]} exceeds {MAX_TOTAL_DIM}")

    if not np.all(np.isfinite(m)):
        return [{'invariant': 'finite_entries', 'amount': float('inf'), 'detail': 'NaN or Inf entry'}]

    violations = []
    herm = float(np.max(np.abs(m - m.conj().T)))
    if herm > VALIDATION_TOL:
        violations.append({'invariant': 'hermiticity', 'amount': herm,
                           'detail': 'max |M - M^dagger| entry'})
    trace_gap = float(abs(np.trace(m) - 1.0))
    if trace_gap > VALIDATION_TOL:
        violations.append({'invariant': 'unit_trace', 'amount': trace_gap,
                           'detail': f'trace {np.trace(m).real:.12g}'})
    min_eig = float(np.min(np.linalg.eigvalsh(0.5 * (m + m.conj().T))))
    if min_eig < -VALIDATION_TOL:
        violations.append({'invariant': 'positive_semidefinite', 'amount': -min_eig,
                           'detail': f'minimum eigenvalue {min_eig:.6e}'})
    return violations


def validate_state(matrix: Any, dims: Sequence[int]) -> QuantumState:
    """Check a raw matrix against the density-matrix invariants and wrap it."""
    violations = state_violations(matrix, dims)
    if violations:
        logging.debug('state rejected: %s', violations)
        raise error_for(violations, 'invalid quantum state')
    return trusted_state(matrix, dims)


def basis_violations(columns: np.ndarray) -> List[Dict[str, Any]]:
    if not np.all(np.isfinite(columns)):
        return [{'invariant': 'finite_entries', 'amount': float('inf'), 'detail': 'NaN or Inf entry'}]
    gram = columns.conj().T @ columns
    gap = float(np.max(np.abs(gram - np.eye(columns.shape[1]))))
    if gap > VALIDATION_TOL:
        return [{'invariant': 'orthonormality', 'amount': gap, 'detail': 'max |Gram - I| entry'}]
    return []


def validate_basis(vectors: Any, label: str = '') -> ProjectiveBasis:
    """Check and wrap a basis given as a sequence of d vectors of length d.

    Vectors are taken in the order printed (row ``i`` of a 2-D input is |u_i>).
    """
    rows = np.asarray(vectors, dtype=complex)
    if rows.ndim != 2 or rows.shape[0] != rows.shape[1]:
        raise DimensionError(f"a nondegenerate basis needs d vectors of length d, got shape {rows.shape}")
    if rows.shape[0] < 2:
        raise DimensionError("basis dimension must be >= 2")
    columns = rows.T
    violations = basis_violations(columns)
    if violations:
        raise error_for(violations, f"invalid basis {label}".strip())
    return ProjectiveBasis(_frozen(columns), label)


def basis_from_columns(columns: np.ndarray, label: str = '') -> ProjectiveBasis:
    """Wrap a unitary whose columns are the basis vectors."""
    return validate_basis(np.asarray(columns).T, label)


def validate_probs(entries: Any) -> ProbVector:
    """Check nonnegativity (to 1e-12) and normalization (to 1e-10)."""
    p = np.real_if_close(np.asarray(entries, dtype=complex if np.iscomplexobj(entries) else float))
    p = np.asarray(p, dtype=float).ravel()
    if p.size == 0 or not np.all(np.isfinite(p)):
        raise error_for([{'invariant': 'probability_vector', 'amount': float('inf'),
                          'detail': 'empty or non-finite entries'}], 'invalid probability vector')
    most_negative = float(np.min(p))
    if most_negative < -PROB_NEGATIVE_TOL:
        raise error_for([{'invariant': 'probability_vector', 'amount': -most_negative,
                          'detail': 'negative entry'}], 'invalid probability vector')
    gap = float(abs(np.sum(p) - 1.0))
    if gap > VALIDATION_TOL:
        raise error_for([{'invariant': 'probability_vector', 'amount': gap,
                          'detail': f'sum {np.sum(p):.12g}'}], 'invalid probability vector')
    return ProbVector(_frozen(np.clip(p, 0.0, None)))
