"""Quantum measures: how much memory correlations shift the classical bound."""
from src.entropy import EntropyReport, average_memory_entropy, memory_state, von_neumann
from src.qcore import ProjectiveBasis, QuantumState, RangeError


def q1(report: EntropyReport) -> float:
    """-I(A:B)."""
    return -report.I_AB


def q2(state: QuantumState, m1: ProjectiveBasis, m2: ProjectiveBasis, measured: int = 0) -> float:
    """-2 H(B) + S_1 + S_2 with B the memory."""
    h_memory = von_neumann(memory_state(state, measured))
    return (-2.0 * h_memory + average_memory_entropy(state, m1, measured)
            + average_memory_entropy(state, m2, measured))


def q_lambda(lam: float, q1_value: float, q2_value: float) -> float:
    if not 0.0 <= lam <= 1.0:
        raise RangeError(f"lambda must lie in [0, 1], got {lam}",
                         amount=float(max(-lam, lam - 1.0)), detail='lambda in [0, 1]')
    return lam * q1_value + (1.0 - lam) * q2_value
