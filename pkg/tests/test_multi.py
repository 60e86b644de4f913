# measurement chains + separable frames + entanglement witness

import os
import unittest

os.environ.setdefault('EUR_LOG_TO_FILE', '0')

import numpy as np

from src.bounds import direct_sum_frame, frame_from_sequence, trivial_frame
from src.entropy import conditional_sum, entropic_sum
from src.multi import (ENTANGLED, INCONCLUSIVE, MeasurementChain, chain_coefficients, multi_bound,
                       multi_bound_no_memory, multi_bound_opt, separable_frame, witness)
from src.qcore import (DimensionError, GuardError, RangeError, UnsupportedError, partial_trace, trusted_state,
                       validate_basis)
from src.scenarios import (bell, bell_basis, child_generators, entangled_witness_chain, mub_qubit, random_basis,
                           random_separable_state, random_state, standard_basis)


def _y_basis():
    return validate_basis(np.array([[1, 1j], [1, -1j]]) / np.sqrt(2), 'Y')


class TestChain(unittest.TestCase):

    def test_chain_validation(self):
        z, x = mub_qubit()
        with self.assertRaises(RangeError):
            MeasurementChain((z,))
        with self.assertRaises(DimensionError):
            MeasurementChain((z, standard_basis(3)))
        self.assertEqual(len(MeasurementChain((z, x, z))), 3)

    def test_three_mubs_coefficients(self):
        z, x = mub_qubit()
        chain = MeasurementChain((z, x, _y_basis()))
        state = random_state([2], np.random.default_rng(1))
        coefficients = chain_coefficients(chain, state)
        np.testing.assert_allclose(coefficients.raw, [0.5, 0.5])
        self.assertAlmostEqual(float(np.sum(coefficients.probs.entries)), 1.0)

    def test_bell_two_basis_bound_is_tight(self):
        scenario = bell(2)
        chain = MeasurementChain(scenario.bases)
        self.assertAlmostEqual(multi_bound(scenario.state, chain), 0.0, places=9)
        self.assertAlmostEqual(conditional_sum(scenario.state, scenario.bases), 0.0, places=9)

    def test_bell_three_mubs(self):
        z, x = mub_qubit()
        bases = (z, x, _y_basis())
        scenario = bell(2)
        chain = MeasurementChain(bases)
        self.assertAlmostEqual(multi_bound(scenario.state, chain), -1.0, places=9)
        self.assertGreaterEqual(conditional_sum(scenario.state, bases), -1.0 - 1e-8)

    def test_frame_too_short(self):
        chain = MeasurementChain(tuple(random_basis(4, np.random.default_rng(2)) for _ in range(2)))
        state = random_state([4, 2], np.random.default_rng(3))
        with self.assertRaises(DimensionError):
            multi_bound(state, chain, frame=frame_from_sequence([1.0, 1.0]))

    def test_direct_sum_frame_raises_two_basis_chain(self):
        rng = np.random.default_rng(4)
        m1, m2 = random_basis(3, rng), random_basis(3, rng)
        state = random_state([3, 3], rng)
        chain = MeasurementChain((m1, m2))
        loose = multi_bound(state, chain)
        tight = multi_bound(state, chain, frame=direct_sum_frame(m1, m2))
        self.assertGreaterEqual(tight, loose - 1e-12)

    def test_opt_over_orderings(self):
        for rng in child_generators(31, 15):
            bases = tuple(random_basis(2, rng) for _ in range(3))
            state = random_state([2, 2], rng)
            best, ordering = multi_bound_opt(state, MeasurementChain(bases))
            self.assertEqual(sorted(ordering), [0, 1, 2])
            self.assertAlmostEqual(best, multi_bound(state, MeasurementChain(bases).reordered(ordering)))
            self.assertGreaterEqual(conditional_sum(state, bases), best - 1e-8)
            self.assertGreaterEqual(best, multi_bound(state, MeasurementChain(bases)) - 1e-12)

    def test_tie_keeps_first_ordering(self):
        scenario = bell(2)
        best, ordering = multi_bound_opt(scenario.state, MeasurementChain(scenario.bases))
        self.assertEqual(ordering, (0, 1))

    def test_permutation_guard(self):
        z, x = mub_qubit()
        chain = MeasurementChain((z, x) * 4)
        with self.assertRaises(GuardError):
            multi_bound_opt(bell(2).state, chain)

    def test_coefficient_ranges(self):
        for n, rng in enumerate(child_generators(52, 30)):
            length = 2 + n % 3
            chain = MeasurementChain(tuple(random_basis(3, rng) for _ in range(length)))
            coefficients = chain_coefficients(chain, random_state([3], rng))
            self.assertGreaterEqual(float(np.sum(coefficients.raw)), 1.0 - 1e-12)
            self.assertLessEqual(float(np.max(coefficients.raw)), 3.0 ** (length - 2) + 1e-12)
            self.assertTrue(np.all(np.diff(coefficients.sorted) <= 0))

    def test_smaller_frame_gives_larger_bound(self):
        loose = frame_from_sequence([0.6, 0.9, 1.0])
        tighter = frame_from_sequence([0.7, 0.95, 1.0])
        for rng in child_generators(53, 20):
            chain = MeasurementChain(tuple(random_basis(3, rng) for _ in range(3)))
            state = random_state([3, 2], rng)
            b = chain_coefficients(chain, partial_trace(state, [0])).sorted
            self.assertTrue(b[0] > b[1] > b[2])
            trivial = multi_bound(state, chain)
            self.assertAlmostEqual(multi_bound(state, chain, frame=loose) - trivial,
                                   0.4 * np.log2(b[0] / b[1]) + 0.1 * np.log2(b[1] / b[2]))
            self.assertGreater(multi_bound(state, chain, frame=loose),
                               multi_bound(state, chain, frame=tighter))
            self.assertGreater(multi_bound(state, chain, frame=tighter), trivial)

    def test_three_mub_chain_on_random_states(self):
        z, x = mub_qubit()
        bases = (z, x, _y_basis())
        chain = MeasurementChain(bases)
        for rng in child_generators(54, 100):
            state = random_state([2, 2], rng)
            best, _ = multi_bound_opt(state, chain)
            self.assertGreaterEqual(conditional_sum(state, bases), best - 1e-8)

    def test_no_memory_bound(self):
        for rng in child_generators(44, 20):
            bases = tuple(random_basis(3, rng) for _ in range(3))
            state = random_state([3], rng)
            bound = multi_bound_no_memory(state, MeasurementChain(bases), trivial_frame(3))
            self.assertGreaterEqual(entropic_sum(state, bases), bound - 1e-8)


class TestWitness(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.chain = entangled_witness_chain()
        cls.frame = separable_frame(cls.chain, [2, 2], budget=200, seed=7)

    def test_frame_is_flagged_heuristic(self):
        self.assertEqual(self.frame.kind, 'separable')
        self.assertTrue(self.frame.heuristic)
        self.assertAlmostEqual(self.frame.omega(1), 0.5, places=6)
        self.assertEqual(self.frame.meta['budget'], 200)

    def test_frame_is_deterministic(self):
        again = separable_frame(self.chain, [2, 2], budget=200, seed=7)
        np.testing.assert_array_equal(again.cumulative, self.frame.cumulative)

    def test_bell_state_is_detected(self):
        state = bell(2).state
        verdict = witness(state, self.chain, self.frame)
        self.assertEqual(verdict.verdict, ENTANGLED)
        self.assertAlmostEqual(verdict.lhs, 0.0, places=9)
        self.assertAlmostEqual(verdict.margin, np.log2(1.5), places=5)
        self.assertGreater(verdict.margin, 0.05)

    def test_no_false_positive_on_separable_states(self):
        for rng in child_generators(99, 200):
            state = random_separable_state(2, 2, rng)
            verdict = witness(state, self.chain, self.frame)
            self.assertEqual(verdict.verdict, INCONCLUSIVE, msg=f'margin {verdict.margin}')

    def test_repeated_bell_basis_cannot_certify(self):
        chain = MeasurementChain((bell_basis(), bell_basis()))
        frame = separable_frame(chain, [2, 2], budget=50, seed=3)
        np.testing.assert_allclose(frame.cumulative, [0.5, 1.0, 1.0, 1.0], atol=1e-6)
        verdict = witness(bell(2).state, chain, frame)
        self.assertAlmostEqual(verdict.lhs, 0.0, places=9)
        self.assertAlmostEqual(verdict.rhs, 0.0, places=9)
        self.assertEqual(verdict.verdict, INCONCLUSIVE)

    def test_product_bases_have_trivial_frame(self):
        hadamard = mub_qubit()[1].vectors
        chain = MeasurementChain((standard_basis(4),
                                  validate_basis(np.kron(hadamard, hadamard), 'HH')))
        frame = separable_frame(chain, [2, 2], budget=20, seed=1)
        self.assertAlmostEqual(frame.omega(1), 1.0, places=9)
        np.testing.assert_allclose(frame.cumulative, np.ones(4), atol=1e-9)

    def test_frame_is_seed_independent(self):
        other = separable_frame(self.chain, [2, 2], budget=200, seed=8)
        np.testing.assert_allclose(other.cumulative, self.frame.cumulative, atol=1e-6)

    def test_witness_rejects_other_frames(self):
        with self.assertRaises(UnsupportedError):
            witness(bell(2).state, self.chain, trivial_frame(4))
        with self.assertRaises(UnsupportedError):
            separable_frame(self.chain, [3, 2])
        with self.assertRaises(RangeError):
            separable_frame(self.chain, [2, 2], budget=0)

    def test_witness_needs_bipartite_state(self):
        flat = trusted_state(bell(2).state.matrix, [4])
        with self.assertRaises(UnsupportedError):
            witness(flat, self.chain, self.frame)


if __name__ == '__main__':
    unittest.main()
