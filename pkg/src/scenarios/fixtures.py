"""Named states and measurement bases used by the figure sweeps and the regression tests."""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from src.bounds import overlaps
from src.logger import logging
from src.multi import MeasurementChain
from src.qcore import (ConsistencyError, ProjectiveBasis, QuantumState, RangeError, basis_from_columns,
                       ket_to_density, validate_basis, validate_state)

SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class Scenario:
    """A state, the bases measured on it and which subsystem (if any) is the quantum memory."""
    name: str
    state: QuantumState
    bases: Tuple[ProjectiveBasis, ...]
    params: Dict[str, float] = field(default_factory=dict)
    memory_side: Optional[str] = None

    @property
    def measured(self) -> Optional[int]:
        """Index of the measured subsystem; None for states without memory."""
        if self.memory_side is None:
            return None
        return 0 if self.memory_side == 'B' else 1


def _check_range(name: str, value: float, low: float, high: float) -> float:
    value = float(value)
    if not low <= value <= high:
        raise RangeError(f"{name}={value} outside [{low:g}, {high:g}]",
                         amount=max(low - value, value - high), detail=f'{name} in [{low:g}, {high:g}]')
    return value


def standard_basis(d: int, label: str = 'standard') -> ProjectiveBasis:
    return validate_basis(np.eye(d), label)


def fourier_basis(d: int, label: str = 'fourier') -> ProjectiveBasis:
    j, k = np.meshgrid(np.arange(d), np.arange(d), indexing='ij')
    return basis_from_columns(np.exp(2j * np.pi * j * k / d) / np.sqrt(d), label)


def qubit_pair() -> Tuple[ProjectiveBasis, ProjectiveBasis]:
    """Standard basis and the rotated basis {(1/2, -sqrt3/2), (sqrt3/2, 1/2)}; c_1 = 3/4."""
    s3 = np.sqrt(3.0) / 2.0
    return standard_basis(2, 'M1'), validate_basis([[0.5, -s3], [s3, 0.5]], 'M2')


def mub_qubit() -> Tuple[ProjectiveBasis, ProjectiveBasis]:
    return standard_basis(2, 'Z'), validate_basis(np.array([[1, 1], [1, -1]]) / SQRT2, 'X')


def rho1(theta: float) -> Scenario:
    """(1/2)|psi><psi| + I/4 with |psi> = (cos t, sin t); spectrum (3/4, 1/4) for every t."""
    theta = _check_range('theta', theta, 0.0, np.pi / 2)
    c, s = np.cos(theta), np.sin(theta)
    matrix = 0.5 * np.array([[c * c + 0.5, c * s], [c * s, s * s + 0.5]])
    return Scenario('fig1', validate_state(matrix, [2]), qubit_pair(), {'theta': theta})


def rho2(theta: float) -> Scenario:
    """diag(cos^2 t, sin^2 t), trace-normalized."""
    theta = _check_range('theta', theta, 0.0, np.pi / 2)
    matrix = np.diag([np.cos(theta) ** 2, np.sin(theta) ** 2])
    return Scenario('fig2', validate_state(matrix, [2]), qubit_pair(), {'theta': theta})


def pair_bases() -> Tuple[ProjectiveBasis, ProjectiveBasis]:
    """The two four-outcome bases measured on the 4-dimensional side of the 2 x 4 state."""
    r2 = 1.0 / SQRT2
    m1 = validate_basis([[r2, -r2, 0, 0], [r2, r2, 0, 0], [0, 0, r2, r2], [0, 0, r2, -r2]], 'M1')
    r6 = 1.0 / np.sqrt(6.0)
    m2 = validate_basis([
        [r6 * SQRT2, r6 * SQRT2, r6 * SQRT2, 0],
        [r6 * np.sqrt(3.0), 0, -r6 * np.sqrt(3.0), 0],
        [r6, -2 * r6, r6, 0],
        [0, 0, 0, 1],
    ], 'M2')
    return m1, m2


def equal_overlap_chain() -> Tuple[ProjectiveBasis, ProjectiveBasis, ProjectiveBasis, ProjectiveBasis]:
    """(M1, M2, M3, M4) with M3 = M2 and M4 = U M2, where U maps M1 onto M2.

    (M3, M4) has exactly the overlap matrix of (M1, M2).
    """
    m1, m2 = pair_bases()
    u = m2.vectors @ m1.vectors.conj().T
    m3 = m2.with_label('M3')
    m4 = basis_from_columns(u @ m2.vectors, 'M4')

    gap = float(np.max(np.abs(overlaps(m3, m4).matrix - overlaps(m1, m2).matrix)))
    if gap > 1e-10:
        raise ConsistencyError(f"(M3, M4) overlaps differ from (M1, M2) by {gap:.3e}", discrepancy=gap)
    diagonal = np.abs(np.sum(m1.vectors.conj() * m4.vectors, axis=0)) ** 2
    if not np.any(diagonal < 1 - 1e-6):
        raise ConsistencyError("M4 coincides with M1", discrepancy=0.0)
    return m1, m2, m3, m4


def horodecki_matrix(p: float) -> np.ndarray:
    """The 8 x 8 two-by-four state, entangled for 0 < p < 1, in (A: 2) x (B: 4) ordering."""
    m = np.zeros((8, 8))
    for i in range(3):
        m[i, i] = m[i + 5, i + 5] = p
        m[i, i + 5] = m[i + 5, i] = p
    m[3, 3] = p
    m[4, 4] = m[7, 7] = (1 + p) / 2
    m[4, 7] = m[7, 4] = np.sqrt(1 - p * p) / 2
    return m / (1 + 7 * p)


def horodecki_state(p: float) -> Scenario:
    p = float(p)
    if not 0.0 < p < 1.0:
        raise RangeError(f"p={p} outside (0, 1)", amount=max(-p, p - 1.0), detail='p in (0, 1)')
    state = validate_state(horodecki_matrix(p), [2, 4])
    return Scenario('fig3', state, pair_bases(), {'p': p}, memory_side='A')


def bell_ket(d: int = 2) -> np.ndarray:
    return np.eye(d).reshape(-1) / np.sqrt(d)


def werner(p: float, theta: float = np.pi / 4) -> Scenario:
    """(1 - p) I/4 + p |B1><B1| with the Hadamard-type basis and the rotation by ``theta``.

    p = 0 and p = 1 are accepted as the limiting members of the family.
    """
    p = _check_range('p', p, 0.0, 1.0)
    theta = _check_range('theta', theta, 0.0, 2 * np.pi)
    phi = bell_ket(2)
    matrix = (1 - p) * np.eye(4) / 4 + p * np.outer(phi, phi)
    r2 = 1.0 / SQRT2
    m1 = validate_basis([[r2, -r2], [r2, r2]], 'M1')
    c, s = np.cos(theta), np.sin(theta)
    m2 = validate_basis([[c, -s], [s, c]], 'M2')
    return Scenario('werner', validate_state(matrix, [2, 2]), (m1, m2), {'p': p, 'theta': theta},
                    memory_side='B')


def bell(d: int = 2) -> Scenario:
    """Maximally entangled state (1/sqrt d) sum_i |ii> measured in the standard and Fourier bases."""
    d = int(d)
    if d < 2:
        raise RangeError(f"d={d} must be >= 2", amount=float(2 - d), detail='d >= 2')
    state = ket_to_density(bell_ket(d), [d, d])
    return Scenario('bell', state, (standard_basis(d), fourier_basis(d)), {'d': float(d)}, memory_side='B')


def bell_basis() -> ProjectiveBasis:
    """Phi+, Phi-, Psi+, Psi- on two qubits."""
    r2 = 1.0 / SQRT2
    return validate_basis([[r2, 0, 0, r2], [r2, 0, 0, -r2], [0, r2, r2, 0], [0, r2, -r2, 0]], 'bell')


def entangled_witness_chain() -> MeasurementChain:
    """Bell basis followed by a basis of maximally entangled vectors sharing only Phi+ with it.

    The other three vectors are a real orthogonal mix (I - 2J/3) of iPhi-, iPsi+, Psi-, which
    keeps every vector maximally entangled and spreads the overlaps to 1/9 and 4/9.
    """
    bell_vectors = bell_basis().vectors
    magic = np.stack([1j * bell_vectors[:, 1], 1j * bell_vectors[:, 2], bell_vectors[:, 3]], axis=1)
    rotation = np.eye(3) - 2.0 / 3.0 * np.ones((3, 3))
    mixed = magic @ rotation
    columns = np.column_stack([bell_vectors[:, 0], mixed])
    logging.debug('entangled witness chain built')
    return MeasurementChain((bell_basis(), basis_from_columns(columns, 'rotated-magic')))
