"""Measurement-induced distributions and conditional ensembles of bipartite states.

``measured`` is the index of the measured subsystem (0 or 1); the other subsystem is the
quantum memory. Index 0 reproduces the usual A-measured / B-memory convention.
"""
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from src.entropy.functionals import shannon, von_neumann
from src.logger import logging
from src.qcore import (ConsistencyError, DimensionError, ProbVector, ProjectiveBasis, QuantumState,
                       ValidationError, partial_trace, trusted_state, validate_probs)
from src.qcore.tolerances import BRANCH_FLOOR, DERIVED_TOL, ENSEMBLE_TOL


@dataclass(frozen=True, eq=False)
class ConditionalEnsemble:
    """Outcome probabilities of a basis on the measured side and the normalized memory states.

    Branches with probability below 1e-12 hold the maximally mixed state and are flagged
    in ``placeholder``; they never enter Holevo sums.
    """
    probs: ProbVector
    states: Tuple[QuantumState, ...]
    placeholder: Tuple[bool, ...]
    basis_label: str = ''

    def mixture(self) -> np.ndarray:
        d = self.states[0].dim
        total = np.zeros((d, d), dtype=complex)
        for p, state, flag in zip(self.probs.entries, self.states, self.placeholder):
            if not flag:
                total += p * state.matrix
        return total


@dataclass(frozen=True, eq=False)
class EntropyReport:
    """Entropies of a bipartite state, with A the measured side and B the memory."""
    H_A: float
    H_B: float
    H_AB: float
    H_A_given_B: float
    I_AB: float

    def as_dict(self) -> Dict[str, float]:
        return {'H_A': self.H_A, 'H_B': self.H_B, 'H_AB': self.H_AB,
                'H_A_given_B': self.H_A_given_B, 'I_AB': self.I_AB}


def _check_measured(state: QuantumState, basis: ProjectiveBasis, measured: int) -> int:
    if len(state.dims) != 2:
        raise DimensionError(f"expected a bipartite state, got dims {list(state.dims)}")
    if measured not in (0, 1):
        raise DimensionError(f"measured subsystem must be 0 or 1, got {measured}")
    if basis.dim != state.dims[measured]:
        raise DimensionError(f"basis dimension {basis.dim} does not match subsystem {measured} "
                             f"of dims {list(state.dims)}")
    return 1 - measured


def memory_state(state: QuantumState, measured: int = 0) -> QuantumState:
    return partial_trace(state, [1 - measured])


def measurement_probs(state: QuantumState, basis: ProjectiveBasis,
                      measured: Optional[int] = None) -> ProbVector:
    """Outcome distribution <u_i|rho_X|u_i> on the measured subsystem X.

    ``measured=None`` measures the whole state when the basis spans it and subsystem 0
    otherwise.
    """
    if measured is None:
        target = state if basis.dim == state.dim else partial_trace(state, [0])
    else:
        if not 0 <= measured < len(state.dims):
            raise DimensionError(f"subsystem {measured} out of range for dims {list(state.dims)}")
        target = state if len(state.dims) == 1 else partial_trace(state, [measured])
    if basis.dim != target.dim:
        raise DimensionError(f"basis dimension {basis.dim} does not match measured dimension {target.dim}")
    u = basis.vectors
    p = np.real(np.einsum('ai,ab,bi->i', u.conj(), target.matrix, u))
    return validate_probs(p)


def _branch_blocks(state: QuantumState, basis: ProjectiveBasis, measured: int) -> np.ndarray:
    """Unnormalized memory blocks Tr_X[(|u_i><u_i| (x) I) rho] stacked along axis 0."""
    dA, dB = state.dims
    t = state.matrix.reshape(dA, dB, dA, dB)
    u = basis.vectors
    if measured == 0:
        return np.einsum('ai,ajbk,bi->ijk', u.conj(), t, u)
    return np.einsum('ji,ajbk,ki->iab', u.conj(), t, u)


def post_measurement_state(state: QuantumState, basis: ProjectiveBasis, measured: int = 0) -> QuantumState:
    """Classical-quantum state sum_i (P_i (x) I) rho (P_i (x) I)."""
    _check_measured(state, basis, measured)
    blocks = _branch_blocks(state, basis, measured)
    out = np.zeros_like(state.matrix)
    for i, block in enumerate(blocks):
        projector = basis.projector(i)
        out += np.kron(projector, block) if measured == 0 else np.kron(block, projector)
    return trusted_state(out, state.dims)


def conditional_ensemble(state: QuantumState, basis: ProjectiveBasis, measured: int = 0) -> ConditionalEnsemble:
    memory = _check_measured(state, basis, measured)
    d_memory = state.dims[memory]
    blocks = _branch_blocks(state, basis, measured)
    probs = validate_probs(np.real(np.einsum('ijj->i', blocks)))

    states, flags = [], []
    for p, block in zip(probs.entries, blocks):
        if p < BRANCH_FLOOR:
            states.append(trusted_state(np.eye(d_memory) / d_memory, [d_memory]))
            flags.append(True)
        else:
            states.append(trusted_state(block / p, [d_memory]))
            flags.append(False)
    return ConditionalEnsemble(probs, tuple(states), tuple(flags), basis.label)


def holevo_terms(ensemble: ConditionalEnsemble, memory: QuantumState) -> Tuple[float, float]:
    """(S_m, chi_m): average memory entropy over outcomes and the Holevo quantity."""
    gap = float(np.max(np.abs(ensemble.mixture() - memory.matrix)))
    if gap > ENSEMBLE_TOL:
        raise ValidationError(f"ensemble does not average to the memory state (gap {gap:.3e})",
                              amount=gap, detail='max |sum p_i rho_i - rho_B| entry',
                              invariant='ensemble_consistency')
    s_m = float(sum(p * von_neumann(st) for p, st, flag
                    in zip(ensemble.probs.entries, ensemble.states, ensemble.placeholder) if not flag))
    chi = von_neumann(memory) - s_m
    return s_m, chi


def average_memory_entropy(state: QuantumState, basis: ProjectiveBasis, measured: int = 0) -> float:
    """S_m of ``basis`` on the measured side."""
    ensemble = conditional_ensemble(state, basis, measured)
    return holevo_terms(ensemble, memory_state(state, measured))[0]


def entropy_report(state: QuantumState, measured: int = 0) -> EntropyReport:
    if len(state.dims) != 2:
        raise DimensionError(f"expected a bipartite state, got dims {list(state.dims)}")
    if measured not in (0, 1):
        raise DimensionError(f"measured subsystem must be 0 or 1, got {measured}")
    h_a = von_neumann(partial_trace(state, [measured]))
    h_b = von_neumann(partial_trace(state, [1 - measured]))
    h_ab = von_neumann(state)
    return EntropyReport(H_A=h_a, H_B=h_b, H_AB=h_ab, H_A_given_B=h_ab - h_b, I_AB=h_a + h_b - h_ab)


def measured_conditional_entropy(state: QuantumState, basis: ProjectiveBasis, measured: int = 0) -> float:
    """H(M|memory), evaluated twice: through the post-measurement state and through
    H(M) + S_m - H(memory). The two must agree to 1e-8.
    """
    _check_measured(state, basis, measured)
    memory = memory_state(state, measured)
    h_memory = von_neumann(memory)
    via_state = von_neumann(post_measurement_state(state, basis, measured)) - h_memory

    ensemble = conditional_ensemble(state, basis, measured)
    s_m, _ = holevo_terms(ensemble, memory)
    via_holevo = shannon(ensemble.probs) + s_m - h_memory

    gap = abs(via_state - via_holevo)
    if gap > DERIVED_TOL:
        logging.error('H(M|B) routes disagree by %.3e for basis %s', gap, basis.label)
        raise ConsistencyError(f"H(M|B) evaluation routes disagree by {gap:.3e}", discrepancy=gap)
    return via_state


def entropic_sum(state: QuantumState, bases: Sequence[ProjectiveBasis], measured: Optional[int] = None) -> float:
    """sum_m H(M_m) on the measured subsystem."""
    return float(sum(shannon(measurement_probs(state, b, measured)) for b in bases))


def conditional_sum(state: QuantumState, bases: Sequence[ProjectiveBasis], measured: int = 0) -> float:
    """sum_m H(M_m|memory)."""
    return float(sum(measured_conditional_entropy(state, b, measured) for b in bases))
