"""Composite bounds with quantum memory and the full bound report of a basis pair."""
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple

from src.bounds.classical import b_maj_ds, classical_parts
from src.bounds.measures import q1, q2, q_lambda
from src.bounds.overlaps import direct_sum_frame, overlaps
from src.entropy import conditional_sum, entropic_sum, entropy_report
from src.logger import logging
from src.qcore import ProjectiveBasis, QuantumState, RegistryError, partial_trace
from src.qcore.tolerances import DERIVED_TOL

DEFAULT_LAMBDAS = (0.0, 0.25, 0.5, 0.75, 1.0)

PluginFn = Callable[[QuantumState, ProjectiveBasis, ProjectiveBasis], Tuple[float, bool]]


@dataclass(frozen=True)
class PluginBound:
    """Named classical bound ``fn(rho_A, m1, m2) -> (value, includes_mixing_part)``.

    When ``includes_mixing_part`` is true the bound holds in the form value + H(A), and
    H(A) is added before the entry competes in bound_C.
    """
    name: str
    fn: PluginFn


def _majorization_plugin(state: QuantumState, m1: ProjectiveBasis, m2: ProjectiveBasis) -> Tuple[float, bool]:
    return b_maj_ds(direct_sum_frame(m1, m2)), False


def make_registry(entries: Iterable[PluginBound]) -> Tuple[PluginBound, ...]:
    registry = tuple(entries)
    names = [entry.name for entry in registry]
    if len(set(names)) != len(names):
        raise RegistryError(f"duplicate plug-in names in registry: {names}")
    return registry


def default_registry() -> Tuple[PluginBound, ...]:
    return make_registry([PluginBound('B_MAJ_DS', _majorization_plugin)])


def evaluate_plugins(registry: Sequence[PluginBound], measured_state: QuantumState,
                     m1: ProjectiveBasis, m2: ProjectiveBasis, h_a: float) -> Dict[str, float]:
    """Each entry's bound on H(M1) + H(M2), mixing part included where declared."""
    if not registry:
        raise RegistryError("bound_C needs at least one registered classical bound")
    values = {}
    for entry in registry:
        value, includes_mixing = entry.fn(measured_state, m1, m2)
        values[entry.name] = float(value) + (h_a if includes_mixing else 0.0)
    return values


def bound_cc(state: QuantumState, m1: ProjectiveBasis, m2: ProjectiveBasis, measured: int = 0) -> float:
    """B_XJ + H(A) + max(Q1, Q2)."""
    report = hybrid_bound(state, m1, m2, lambdas=(), measured=measured)
    return report.bound_CC


def bound_adabi(state: QuantumState, m1: ProjectiveBasis, m2: ProjectiveBasis, measured: int = 0) -> float:
    """B_XJ + H(A|B) + max(0, Q2 - Q1)."""
    report = hybrid_bound(state, m1, m2, lambdas=(), measured=measured)
    return report.bound_adabi


def bound_c(state: QuantumState, m1: ProjectiveBasis, m2: ProjectiveBasis,
            registry: Optional[Sequence[PluginBound]] = None, measured: int = 0) -> float:
    """max over the registry plus Q2."""
    registry = default_registry() if registry is None else registry
    measured_state = partial_trace(state, [measured])
    h_a = entropy_report(state, measured).H_A
    plugins = evaluate_plugins(registry, measured_state, m1, m2, h_a)
    return max(plugins.values()) + q2(state, m1, m2, measured)


@dataclass
class BoundReport:
    entropic_sum: float
    conditional_sum: float
    H_A: float
    H_B: float
    H_AB: float
    H_A_given_B: float
    I_AB: float
    B_MU: float
    B_CP: float
    B_XJ: float
    B_MAJ_DS: float
    Q1: float
    Q2: float
    bound_CC: float
    bound_C: float
    bound_adabi: float
    hybrid: float
    Q_lambda: Dict[float, float] = field(default_factory=dict)
    bound_Q_lambda: Dict[float, float] = field(default_factory=dict)
    plugins: Dict[str, float] = field(default_factory=dict)
    family: Dict[str, float] = field(default_factory=dict)

    @property
    def relation_satisfied(self) -> bool:
        return self.conditional_sum >= self.hybrid - DERIVED_TOL

    def as_dict(self) -> Dict[str, object]:
        """Flat mapping used by the report writer."""
        out = {name: getattr(self, name) for name in (
            'entropic_sum', 'conditional_sum', 'H_A', 'H_B', 'H_AB', 'H_A_given_B', 'I_AB',
            'B_MU', 'B_CP', 'B_XJ', 'B_MAJ_DS', 'Q1', 'Q2', 'bound_CC', 'bound_C', 'bound_adabi', 'hybrid')}
        for lam, value in self.Q_lambda.items():
            out[f'Q_lambda[{lam:g}]'] = value
        for lam, value in self.bound_Q_lambda.items():
            out[f'bound_Q_lambda[{lam:g}]'] = value
        for name, value in self.plugins.items():
            out[f'plugin[{name}]'] = value
        out.update(self.family)
        out['relation_satisfied'] = self.relation_satisfied
        return out


def hybrid_bound(state: QuantumState, m1: ProjectiveBasis, m2: ProjectiveBasis,
                 registry: Optional[Sequence[PluginBound]] = None,
                 lambdas: Sequence[float] = DEFAULT_LAMBDAS, measured: int = 0) -> BoundReport:
    """Every bound of the pair (m1, m2) measured on subsystem ``measured`` of ``state``.

    hybrid = max(bound_C, bound_CC).
    """
    registry = default_registry() if registry is None else registry
    entropies = entropy_report(state, measured)
    measured_state = partial_trace(state, [measured])

    frame = direct_sum_frame(m1, m2)
    parts = classical_parts(overlaps(m1, m2), frame)
    maj = b_maj_ds(frame)
    q1_value = q1(entropies)
    q2_value = q2(state, m1, m2, measured)

    cc = parts['B_XJ'] + entropies.H_A + max(q1_value, q2_value)
    adabi = parts['B_XJ'] + entropies.H_A_given_B + max(0.0, q2_value - q1_value)
    plugins = evaluate_plugins(registry, measured_state, m1, m2, entropies.H_A)
    c = max(plugins.values()) + q2_value

    family = {}
    for name, value in parts.items():
        family[f'{name}_plus_H_A_given_B'] = value + entropies.H_A_given_B
        family[f'{name}_plus_H_A_plus_Q1'] = value + entropies.H_A + q1_value
        family[f'{name}_plus_H_A_plus_Q2'] = value + entropies.H_A + q2_value

    q_lams = {float(lam): q_lambda(float(lam), q1_value, q2_value) for lam in lambdas}
    report = BoundReport(
        entropic_sum=entropic_sum(state, (m1, m2), measured),
        conditional_sum=conditional_sum(state, (m1, m2), measured),
        H_A=entropies.H_A, H_B=entropies.H_B, H_AB=entropies.H_AB,
        H_A_given_B=entropies.H_A_given_B, I_AB=entropies.I_AB,
        B_MU=parts['B_MU'], B_CP=parts['B_CP'], B_XJ=parts['B_XJ'], B_MAJ_DS=maj,
        Q1=q1_value, Q2=q2_value, bound_CC=cc, bound_C=c, bound_adabi=adabi, hybrid=max(c, cc),
        Q_lambda=q_lams,
        bound_Q_lambda={lam: parts['B_XJ'] + entropies.H_A + value for lam, value in q_lams.items()},
        plugins=plugins, family=family)
    logging.debug('bound report: hybrid %.6f, conditional sum %.6f', report.hybrid, report.conditional_sum)
    return report
