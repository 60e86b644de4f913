# validation + partial trace + spectrum tests

import os
import unittest

os.environ.setdefault('EUR_LOG_TO_FILE', '0')

import numpy as np

from src.qcore import (DimensionError, ProjectiveBasis, ValidationError, hermitian_spectrum, ket_to_density,
                       largest_singular_value, partial_trace, product_state, tensor, validate_basis, validate_probs,
                       validate_state)
from src.qcore.exceptions import HermiticityError, OrthonormalityError, PositivityError, TraceError
from src.scenarios import random_state


class TestValidation(unittest.TestCase):

    def test_maximally_mixed_state_is_accepted(self):
        state = validate_state(np.eye(4) / 4, [2, 2])
        self.assertEqual(state.dims, (2, 2))
        self.assertEqual(state.dim, 4)
        self.assertFalse(state.matrix.flags.writeable)

    def test_trace_violation_reports_amount(self):
        with self.assertRaises(TraceError) as ctx:
            validate_state(np.eye(2), [2])
        self.assertEqual(ctx.exception.violation['invariant'], 'unit_trace')
        self.assertAlmostEqual(ctx.exception.amount, 1.0)

    def test_negative_eigenvalue_is_rejected(self):
        with self.assertRaises(PositivityError) as ctx:
            validate_state(np.diag([1.5, -0.5]), [2])
        self.assertAlmostEqual(ctx.exception.amount, 0.5)

    def test_non_hermitian_is_rejected(self):
        m = np.array([[0.5, 0.1], [0.0, 0.5]])
        with self.assertRaises(HermiticityError):
            validate_state(m, [2])

    def test_all_violations_are_collected(self):
        m = np.array([[1.0, 0.3], [0.0, 0.5]])
        with self.assertRaises(ValidationError) as ctx:
            validate_state(m, [2])
        invariants = {v['invariant'] for v in ctx.exception.violations}
        self.assertIn('hermiticity', invariants)
        self.assertIn('unit_trace', invariants)

    def test_nan_entry_is_rejected(self):
        m = np.eye(2) / 2
        m[0, 1] = np.nan
        with self.assertRaises(ValidationError) as ctx:
            validate_state(m, [2])
        self.assertEqual(ctx.exception.invariant, 'finite_entries')

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            validate_state(np.eye(4) / 4, [2, 3])
        with self.assertRaises(DimensionError):
            validate_state(np.eye(3) / 3, [3, 1])
        with self.assertRaises(DimensionError):
            validate_state(np.ones((2, 3)), [2])

    def test_tolerance_edge_is_accepted(self):
        m = np.eye(2) / 2
        m[0, 0] += 5e-11
        validate_state(m, [2])

    def test_basis_rows_are_vectors(self):
        basis = validate_basis([[1, 0], [0, 1j]], label='z')
        np.testing.assert_allclose(basis.vector(1), [0, 1j])
        np.testing.assert_allclose(basis.projector(1), [[0, 0], [0, 1]])
        self.assertEqual(basis.label, 'z')

    def test_non_orthonormal_basis(self):
        with self.assertRaises(OrthonormalityError):
            validate_basis([[1, 0], [1, 1]])
        with self.assertRaises(DimensionError):
            validate_basis([[1, 0, 0], [0, 1, 0]])

    def test_probability_vector(self):
        p = validate_probs([0.5, 0.5 + 1e-13, -1e-13])
        self.assertGreaterEqual(float(np.min(p.entries)), 0.0)
        with self.assertRaises(ValidationError):
            validate_probs([0.6, 0.6])
        with self.assertRaises(ValidationError):
            validate_probs([1.1, -0.1])


class TestLinalg(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(3)

    def test_partial_trace_of_product(self):
        a = random_state([2], self.rng)
        b = random_state([3], self.rng)
        joint = product_state(a, b)
        self.assertEqual(joint.dims, (2, 3))
        np.testing.assert_allclose(partial_trace(joint, [0]).matrix, a.matrix, atol=1e-12)
        np.testing.assert_allclose(partial_trace(joint, [1]).matrix, b.matrix, atol=1e-12)

    def test_partial_trace_three_parties(self):
        states = [random_state([d], self.rng) for d in (2, 3, 2)]
        joint = product_state(*states)
        middle = partial_trace(joint, [1])
        np.testing.assert_allclose(middle.matrix, states[1].matrix, atol=1e-12)
        outer = partial_trace(joint, [0, 2])
        np.testing.assert_allclose(outer.matrix, tensor(states[0].matrix, states[2].matrix), atol=1e-12)
        self.assertIs(partial_trace(joint, [0, 1, 2]), joint)

    def test_partial_trace_bad_keep(self):
        state = random_state([2, 2], self.rng)
        with self.assertRaises(DimensionError):
            partial_trace(state, [])
        with self.assertRaises(DimensionError):
            partial_trace(state, [2])

    def test_bell_marginal_is_maximally_mixed(self):
        bell = ket_to_density([1, 0, 0, 1], [2, 2])
        np.testing.assert_allclose(partial_trace(bell, [1]).matrix, np.eye(2) / 2, atol=1e-12)

    def test_spectrum_descending_and_reconstructs(self):
        state = random_state([3], self.rng)
        values, vectors = hermitian_spectrum(state)
        self.assertTrue(np.all(np.diff(values) <= 1e-15))
        np.testing.assert_allclose((vectors * values) @ vectors.conj().T, state.matrix, atol=1e-10)

    def test_spectrum_rejects_non_hermitian(self):
        with self.assertRaises(HermiticityError):
            hermitian_spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_largest_singular_value_dominates_probes(self):
        m = self.rng.standard_normal((3, 4)) + 1j * self.rng.standard_normal((3, 4))
        sigma = largest_singular_value(m)
        probes = self.rng.standard_normal((1000, 4)) + 1j * self.rng.standard_normal((1000, 4))
        probes /= np.linalg.norm(probes, axis=1, keepdims=True)
        values = np.linalg.norm(probes @ m.T, axis=1)
        self.assertLessEqual(float(np.max(values)), sigma + 1e-9)
        self.assertGreater(sigma, 0.0)

    def test_basis_dataclass_relabel(self):
        basis = validate_basis(np.eye(2))
        self.assertIsInstance(basis.with_label('x'), ProjectiveBasis)
        self.assertEqual(basis.with_label('x').label, 'x')


if __name__ == '__main__':
    unittest.main()
