"""
Unit tests for the deformed star product
"""

import unittest
import sys
sys.path.append('..')

from hypothesis import given, settings, strategies as st

from src.algebra import make_rng
from src.derivations import FAIL, PASS
from src.exceptions import ConfigurationError
from src.star_product import (
    DeformationTensor, commutator_table, series_order, star, star_commutator,
    verify_star_properties,
)
from src.superspace import SuperPolynomial, random_superpolynomial

P = SuperPolynomial


class TestDeformationTensor(unittest.TestCase):
    """Test construction of the deformation tensor."""

    def test_from_entries(self):
        A = DeformationTensor.from_entries({'A_1_1': 2, 'A_2_0': '1/2'})
        self.assertEqual(A.to_dict()['A_1_1'], '2')
        self.assertEqual(A.to_dict()['A_2_0'], '1/2')
        self.assertEqual(A.to_dict()['A_1_0'], '0')
        self.assertEqual(len(list(A.nonzero())), 2)

    def test_bad_entries(self):
        with self.assertRaises(ConfigurationError):
            DeformationTensor.from_entries({'A_3_0': 1})
        with self.assertRaises(ConfigurationError):
            DeformationTensor.from_entries([[1, 2, 3]])

    def test_spacelike(self):
        A = DeformationTensor.symbolic().spacelike()
        self.assertEqual([mu for _, mu, _ in A.nonzero()], [1, 2, 1, 2])
        self.assertTrue(DeformationTensor.zero().is_zero())

    def test_entries_are_odd(self):
        A = DeformationTensor.symbolic()
        self.assertEqual(A.entry(1, 0).parity(), 1)
        self.assertEqual(A.entry(1, 0) * A.entry(1, 0), 0)
        self.assertEqual(A.entry(1, 0) * A.entry(2, 1), -(A.entry(2, 1) * A.entry(1, 0)))


class TestStar(unittest.TestCase):
    """Test the defining commutators and the series."""

    def setUp(self):
        """Set up test fixtures."""
        self.A = DeformationTensor.symbolic()

    def test_defining_commutator(self):
        for a in (1, 2):
            for mu in (0, 1, 2):
                self.assertEqual(star_commutator(P.theta('++', a), P.x(mu), self.A),
                                 self.A.entry(a, mu))

    def test_other_thetas_commute_with_x(self):
        self.assertEqual(star_commutator(P.theta('--', 1), P.x(0), self.A), 0)
        self.assertEqual(star_commutator(P.theta('0', 2), P.x(2), self.A), 0)
        self.assertEqual(star_commutator(P.x(0), P.x(1), self.A), 0)

    def test_half_shift(self):
        f, g = P.theta('++', 1), P.x(0)
        self.assertEqual(star(f, g, self.A), f * g + self.A.entry(1, 0).scale('1/2'))

    def test_symmetric_reading_commutes(self):
        residual = star_commutator(P.theta('++', 1), P.x(0), self.A, symmetric=True)
        self.assertEqual(residual, 0)

    def test_scaled_entry(self):
        A = DeformationTensor.from_entries({'A_1_1': 2})
        self.assertEqual(star_commutator(P.theta('++', 1), P.x(1), A),
                         P.deformation(1, 1).scale(2))
        self.assertEqual(star_commutator(P.theta('++', 2), P.x(1), A), 0)

    def test_series_order(self):
        self.assertEqual(series_order(P.x(0), P.x(1), self.A), 0)
        self.assertEqual(series_order(P.theta('++', 1), P.x(0), self.A), 1)
        f = P.theta('++', 1) * P.theta('++', 2)
        self.assertEqual(series_order(f, P.x(0) * P.x(1), self.A), 2)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_associativity(self, seed):
        rng = make_rng(seed)
        f, g, h = (random_superpolynomial(rng, max_x_degree=2, max_harmonic_degree=1, max_terms=2)
                   for _ in range(3))
        self.assertEqual(star(star(f, g, self.A), h, self.A), star(f, star(g, h, self.A), self.A))

    def test_zero_tensor_is_pointwise(self):
        f = P.theta('++', 1) * P.x(0)
        g = P.x(0) * P.theta('++', 2)
        self.assertEqual(star(f, g, DeformationTensor.zero()), f * g)


class TestStarSuite(unittest.TestCase):
    """Test the star-product report."""

    def test_commutator_table(self):
        reports = commutator_table(DeformationTensor.symbolic())
        self.assertEqual(len(reports), 5)
        self.assertTrue(all(r.status == PASS for r in reports))

    def test_symmetric_table_fails(self):
        A = DeformationTensor.symbolic()
        residual = star_commutator(P.theta('++', 1), P.x(0), A, symmetric=True) - A.entry(1, 0)
        self.assertNotEqual(residual, 0)

    def test_suite_passes(self):
        report = verify_star_properties(samples=3, seed=5)
        self.assertEqual(report.status, PASS, [r.name for r in report.relations if not r.passed])
        self.assertIn('deformation', report.artifacts)
        self.assertNotIn(FAIL, [r.status for r in report.relations])

    def test_spacelike_suite(self):
        A = DeformationTensor.symbolic().spacelike()
        report = verify_star_properties(A, samples=2, seed=1)
        self.assertEqual(report.status, PASS)


if __name__ == '__main__':
    unittest.main()
