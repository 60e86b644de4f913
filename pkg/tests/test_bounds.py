# classical bounds + frames + hybrid report, pinned values and randomized relations

import os
import unittest

os.environ.setdefault('EUR_LOG_TO_FILE', '0')

import numpy as np

from src.bounds import (BoundReport, PluginBound, b_cp, b_maj_ds, b_mu, b_xj, bound_adabi, bound_c, bound_cc,
                        direct_sum_frame, frame_from_sequence, hybrid_bound, make_registry, overlaps, q1, q2,
                        q_lambda, trivial_frame)
from src.entropy import average_memory_entropy, conditional_sum, entropy_report, measurement_probs, shannon
from src.qcore import DimensionError, GuardError, RangeError, RegistryError, ValidationError, hermitian_spectrum
from src.scenarios import (bell, child_generators, fourier_basis, mub_qubit, qubit_pair, random_basis,
                           random_state, standard_basis, werner)


class TestOverlapsAndFrames(unittest.TestCase):

    def test_qubit_pair_overlaps(self):
        o = overlaps(*qubit_pair())
        self.assertAlmostEqual(o.c1, 0.75)
        self.assertAlmostEqual(b_mu(o), np.log2(4.0 / 3.0))
        self.assertAlmostEqual(b_mu(o), 0.415037, places=6)

    def test_direct_sum_frame_of_qubit_pair(self):
        frame = direct_sum_frame(*qubit_pair())
        self.assertEqual(len(frame), 3)
        self.assertAlmostEqual(frame.omega(1), np.sqrt(0.75))
        self.assertAlmostEqual(frame.omega(3), 1.0)
        self.assertAlmostEqual(b_maj_ds(frame), shannon([np.sqrt(0.75), 1 - np.sqrt(0.75)]))
        self.assertAlmostEqual(b_maj_ds(frame), 0.5684, places=3)

    def test_largest_single_pair_weight(self):
        # max over states of p_i + q_j is the top eigenvalue of P_i + Q_j, i.e. 1 + |<u_i|v_j>|
        m1, m2 = qubit_pair()
        best = 0.0
        for i in range(2):
            for j in range(2):
                u, v = m1.vectors[:, i], m2.vectors[:, j]
                projectors = np.outer(u, u.conj()) + np.outer(v, v.conj())
                best = max(best, float(hermitian_spectrum(projectors)[0][0]))
        frame = direct_sum_frame(m1, m2)
        self.assertAlmostEqual(best, 1.0 + frame.omega(1), places=10)
        self.assertAlmostEqual(best, 1.0 + np.sqrt(0.75), places=10)
        self.assertGreater(best, 1.0 + overlaps(m1, m2).c1)

    def test_mub_frame(self):
        frame = direct_sum_frame(*mub_qubit())
        self.assertAlmostEqual(frame.omega(1), np.sqrt(0.5))
        o = overlaps(*mub_qubit())
        self.assertAlmostEqual(b_mu(o), 1.0)
        self.assertAlmostEqual(b_cp(o), 1.0)
        self.assertAlmostEqual(b_xj(o, frame), 1.0)

    def test_frame_is_monotone_and_bounded(self):
        for rng in child_generators(8, 10):
            frame = direct_sum_frame(random_basis(3, rng), random_basis(3, rng))
            self.assertTrue(np.all(np.diff(frame.cumulative) >= -1e-12))
            self.assertAlmostEqual(frame.cumulative[-1], 1.0)
            self.assertGreaterEqual(frame.omega(1), 1.0 / np.sqrt(3) - 1e-12)

    def test_direct_sum_majorization_holds(self):
        for n, rng in enumerate(child_generators(9, 500)):
            d = 2 + n % 3
            m1, m2 = random_basis(d, rng), random_basis(d, rng)
            state = random_state([d], rng)
            frame = direct_sum_frame(m1, m2)
            self.assertAlmostEqual(frame.omega(1), np.sqrt(overlaps(m1, m2).c1), places=10)
            p, q = measurement_probs(state, m1).entries, measurement_probs(state, m2).entries
            sums = np.cumsum(np.sort(np.concatenate([p, q]))[::-1])
            limit = np.cumsum(np.concatenate([[1.0], frame.omega_vector]))
            self.assertEqual(len(limit), 2 * d)
            self.assertTrue(np.all(sums <= limit + 1e-8))

    def test_enumeration_guard(self):
        with self.assertRaises(GuardError):
            direct_sum_frame(standard_basis(7), fourier_basis(7))

    def test_frame_validation(self):
        with self.assertRaises(ValidationError):
            frame_from_sequence([0.8, 0.5, 1.0])
        with self.assertRaises(ValidationError):
            frame_from_sequence([0.5, 0.9])
        self.assertEqual(len(trivial_frame(4)), 4)

    def test_b_xj_requires_full_frame(self):
        o = overlaps(standard_basis(3), fourier_basis(3))
        with self.assertRaises(DimensionError):
            b_xj(o, trivial_frame(3))

    def test_classical_ordering(self):
        for rng in child_generators(10, 20):
            m1, m2 = random_basis(4, rng), random_basis(4, rng)
            o = overlaps(m1, m2)
            frame = direct_sum_frame(m1, m2)
            self.assertLessEqual(b_mu(o), b_cp(o) + 1e-12)
            self.assertLessEqual(b_cp(o), b_xj(o, frame) + 1e-12)


class TestMeasures(unittest.TestCase):

    def test_q_lambda_interpolates(self):
        self.assertAlmostEqual(q_lambda(0.0, -1.0, -0.2), -0.2)
        self.assertAlmostEqual(q_lambda(1.0, -1.0, -0.2), -1.0)
        self.assertAlmostEqual(q_lambda(0.5, -1.0, -0.2), -0.6)
        with self.assertRaises(RangeError):
            q_lambda(1.5, -1.0, -0.2)

    def test_bell_measures(self):
        scenario = bell(2)
        m1, m2 = scenario.bases
        report = entropy_report(scenario.state)
        self.assertAlmostEqual(q1(report), -2.0)
        self.assertAlmostEqual(q2(scenario.state, m1, m2), -2.0)

    def test_maximally_entangled_collapse(self):
        for d in (2, 3, 4, 5):
            scenario = bell(d)
            m1, m2 = scenario.bases
            self.assertAlmostEqual(average_memory_entropy(scenario.state, m1), 0.0, places=9)
            self.assertAlmostEqual(average_memory_entropy(scenario.state, m2), 0.0, places=9)
            report = entropy_report(scenario.state)
            self.assertAlmostEqual(report.H_A + q1(report), -np.log2(d), places=8)
            self.assertAlmostEqual(report.H_A + q2(scenario.state, m1, m2), -np.log2(d), places=8)

    def test_measures_nonpositive(self):
        for rng in child_generators(12, 30):
            state = random_state([2, 3], rng)
            m1, m2 = random_basis(2, rng), random_basis(2, rng)
            self.assertLessEqual(q1(entropy_report(state)), 1e-9)
            self.assertLessEqual(q2(state, m1, m2), 1e-9)


class TestHybridReport(unittest.TestCase):

    def test_bell_report(self):
        for d in (2, 3):
            scenario = bell(d)
            report = hybrid_bound(scenario.state, *scenario.bases)
            self.assertIsInstance(report, BoundReport)
            self.assertAlmostEqual(report.conditional_sum, 0.0, places=9)
            self.assertAlmostEqual(report.H_A + report.Q1, -np.log2(d), places=9)
            self.assertTrue(report.relation_satisfied)

    def test_werner_report(self):
        scenario = werner(0.5)
        report = hybrid_bound(scenario.state, *scenario.bases, measured=scenario.measured)
        self.assertAlmostEqual(report.H_AB, 1.548795, places=5)
        self.assertAlmostEqual(report.bound_CC, report.bound_adabi, places=12)
        self.assertAlmostEqual(report.hybrid, max(report.bound_C, report.bound_CC))
        self.assertIn('B_XJ_plus_H_A_given_B', report.family)

    def test_report_dict_keys(self):
        scenario = werner(0.3)
        out = hybrid_bound(scenario.state, *scenario.bases, lambdas=(0.25,)).as_dict()
        self.assertIn('Q_lambda[0.25]', out)
        self.assertIn('bound_Q_lambda[0.25]', out)
        self.assertIn('plugin[B_MAJ_DS]', out)
        self.assertIn('relation_satisfied', out)

    def test_wrappers_match_report(self):
        scenario = werner(0.7, 0.4)
        m1, m2 = scenario.bases
        report = hybrid_bound(scenario.state, m1, m2)
        self.assertAlmostEqual(bound_cc(scenario.state, m1, m2), report.bound_CC)
        self.assertAlmostEqual(bound_adabi(scenario.state, m1, m2), report.bound_adabi)
        self.assertAlmostEqual(bound_c(scenario.state, m1, m2), report.bound_C)

    def test_plugin_with_mixing_part(self):
        scenario = werner(0.6)
        m1, m2 = scenario.bases
        registry = make_registry([PluginBound('mu', lambda rho, a, b: (b_mu(overlaps(a, b)), True))])
        report = hybrid_bound(scenario.state, m1, m2, registry=registry)
        self.assertAlmostEqual(report.plugins['mu'], report.B_MU + report.H_A)

    def test_registry_errors(self):
        entry = PluginBound('x', lambda rho, a, b: (0.0, False))
        with self.assertRaises(RegistryError):
            make_registry([entry, entry])
        scenario = werner(0.5)
        with self.assertRaises(RegistryError):
            hybrid_bound(scenario.state, *scenario.bases, registry=())

    def test_relations_hold_on_random_qubit_pairs(self):
        for rng in child_generators(2024, 500):
            state = random_state([2, 2], rng)
            m1, m2 = random_basis(2, rng), random_basis(2, rng)
            report = hybrid_bound(state, m1, m2)
            total = conditional_sum(state, (m1, m2))
            self.assertGreaterEqual(total, report.hybrid - 1e-8)
            for value in report.family.values():
                self.assertGreaterEqual(total, value - 1e-8)

    def test_relations_hold_on_qutrit_pairs(self):
        for rng in child_generators(77, 40):
            state = random_state([3, 2], rng)
            m1, m2 = random_basis(3, rng), random_basis(3, rng)
            report = hybrid_bound(state, m1, m2)
            self.assertTrue(report.relation_satisfied)
            self.assertGreaterEqual(report.bound_CC, report.B_XJ + report.H_A_given_B - 1e-12)


if __name__ == '__main__':
    unittest.main()
