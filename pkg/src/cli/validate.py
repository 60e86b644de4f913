"""Randomized property checks over seeded instances, with replay of single instances."""
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from src.bounds import direct_sum_frame, hybrid_bound, q1, q2
from src.bounds.overlaps import MAX_ENUMERATION_DIM
from src.cli.files import basis_document, dump_json, state_document
from src.entropy import (conditional_ensemble, entropy_report, holevo_terms,
                         measured_conditional_entropy, measurement_probs, memory_state, shannon, von_neumann)
from src.logger import logging
from src.multi import MeasurementChain, multi_bound_opt
from src.multi.chain import MAX_CHAIN_PERMUTATION
from src.qcore import ConsistencyError, ProjectiveBasis, QuantumState, RangeError, partial_trace
from src.qcore.tolerances import DERIVED_TOL
from src.scenarios import child_generators, random_basis, random_state

HOLEVO_TOL = 1e-9
MEASURE_TOL = 1e-9
ORDER_TOL = 1e-12


@dataclass
class Instance:
    index: int
    state: QuantumState
    bases: List[ProjectiveBasis]


@dataclass
class CheckResult:
    counts: Dict[str, int] = field(default_factory=dict)
    violations: List[Dict[str, Any]] = field(default_factory=list)
    max_gap: Dict[str, float] = field(default_factory=dict)

    def record(self, instance: int, check: str, shortfall: float) -> None:
        """``shortfall`` > 0 means the property failed by that amount."""
        self.counts[check] = self.counts.get(check, 0) + 1
        self.max_gap[check] = max(self.max_gap.get(check, -np.inf), float(shortfall))
        if shortfall > 0:
            self.violations.append({'instance': instance, 'check': check, 'amount': float(shortfall)})


def check_instance(instance: Instance, result: CheckResult) -> None:
    """Every property the toolkit guarantees, on one state and its bases (memory is subsystem 1)."""
    state, bases, k = instance.state, instance.bases, instance.index
    memory = memory_state(state, 0)
    h_memory = von_neumann(memory)

    try:
        conditional = [measured_conditional_entropy(state, b) for b in bases]
    except ConsistencyError as e:
        result.record(k, 'dual_route', e.discrepancy)
        return
    result.record(k, 'dual_route', 0.0 - DERIVED_TOL)

    # H(M|B) = H(M) + S_m - H(B), summed over the chain
    rhs = 0.0
    for b in bases:
        s_m, chi = holevo_terms(conditional_ensemble(state, b), memory)
        rhs += shannon(measurement_probs(state, b, 0)) + s_m - h_memory
        result.record(k, 'holevo_range', max(-chi, chi - h_memory) - HOLEVO_TOL)
    result.record(k, 'holevo_decomposition', abs(sum(conditional) - rhs) - DERIVED_TOL)

    report = entropy_report(state)
    result.record(k, 'data_processing', report.H_A_given_B - report.H_A - HOLEVO_TOL)
    for b in bases:
        h_m = shannon(measurement_probs(state, b, 0))
        result.record(k, 'measurement_entropy', report.H_A - h_m - HOLEVO_TOL)

    m1, m2 = bases[0], bases[1]
    result.record(k, 'q1_nonpositive', q1(report) - MEASURE_TOL)
    result.record(k, 'q2_nonpositive', q2(state, m1, m2) - MEASURE_TOL)

    if m1.dim <= MAX_ENUMERATION_DIM:
        _check_pair(k, state, m1, m2, conditional[0] + conditional[1], result)

    if len(bases) <= MAX_CHAIN_PERMUTATION:
        best, _ = multi_bound_opt(state, MeasurementChain(tuple(bases)))
        result.record(k, 'multi_bound', best - sum(conditional) - DERIVED_TOL)


def _check_pair(k: int, state: QuantumState, m1: ProjectiveBasis, m2: ProjectiveBasis,
                conditional_pair: float, result: CheckResult) -> None:
    report = hybrid_bound(state, m1, m2, lambdas=(0.0, 0.5, 1.0))
    result.record(k, 'hybrid_relation', report.hybrid - conditional_pair - DERIVED_TOL)
    for name, value in report.family.items():
        result.record(k, f'relation:{name}', value - conditional_pair - DERIVED_TOL)
    result.record(k, 'ordering_xj_cp', report.B_CP - report.B_XJ - ORDER_TOL)
    result.record(k, 'ordering_cp_mu', report.B_MU - report.B_CP - ORDER_TOL)
    lo, hi = min(report.Q1, report.Q2), max(report.Q1, report.Q2)
    for value in report.Q_lambda.values():
        result.record(k, 'q_lambda_between', max(lo - value, value - hi) - DERIVED_TOL)

    frame = direct_sum_frame(m1, m2)
    measured_state = partial_trace(state, [0])
    p = measurement_probs(measured_state, m1).entries
    q = measurement_probs(measured_state, m2).entries
    sums = np.cumsum(np.sort(np.concatenate([p, q]))[::-1])
    limit = np.cumsum(np.concatenate([[1.0], frame.omega_vector]))
    n = min(len(sums), len(limit))
    result.record(k, 'direct_sum_majorization', float(np.max(sums[:n] - limit[:n])) - DERIVED_TOL)


def random_instances(n: int, dims: Sequence[int], measurements: int, seed: int) -> List[Instance]:
    if int(n) < 1:
        raise RangeError(f"--random must be >= 1, got {n}", amount=float(1 - int(n)), detail='N >= 1')
    if int(measurements) < 2:
        raise RangeError(f"--measurements must be >= 2, got {measurements}",
                         amount=float(2 - int(measurements)), detail='M >= 2')
    instances = []
    for k, rng in enumerate(child_generators(seed, n)):
        state = random_state(dims, rng)
        bases = [random_basis(int(dims[0]), rng, label=f'M{m + 1}') for m in range(int(measurements))]
        instances.append(Instance(k, state, bases))
    return instances


def dump_instance(instance: Instance, directory: str) -> List[str]:
    """StateFile/BasisFile JSON for replay."""
    paths = [os.path.join(directory, 'state.json')]
    dump_json(state_document(instance.state), paths[0], exact=True)
    for m, basis in enumerate(instance.bases):
        path = os.path.join(directory, f'basis_{m + 1}.json')
        dump_json(basis_document(basis), path, exact=True)
        paths.append(path)
    return paths


def run_validation(instances: Sequence[Instance], params: Dict[str, Any],
                   dump_dir: Optional[str] = None) -> Dict[str, Any]:
    result = CheckResult()
    for instance in instances:
        check_instance(instance, result)
    summary: Dict[str, Any] = dict(params)
    summary.update({
        'instances': len(instances),
        'checks': int(sum(result.counts.values())),
        'violations': len(result.violations),
        'per_check': {name: {'count': result.counts[name],
                             'violations': sum(1 for v in result.violations if v['check'] == name),
                             'worst_shortfall': result.max_gap[name]}
                      for name in sorted(result.counts)},
    })
    if result.violations:
        worst = max(result.violations, key=lambda v: v['amount'])
        summary['worst'] = worst
        logging.warning('%d violations; worst %s on instance %d by %.3e', len(result.violations),
                        worst['check'], worst['instance'], worst['amount'])
        if dump_dir:
            by_index = {instance.index: instance for instance in instances}
            summary['dumped'] = dump_instance(by_index[worst['instance']], dump_dir)
    else:
        logging.info('validation passed: %d checks on %d instances', summary['checks'], len(instances))
    return summary
