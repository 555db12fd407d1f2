"""
Unit tests for the harmonic superspace calculus
"""

import unittest
from fractions import Fraction
import sys
sys.path.append('..')

from hypothesis import given, settings, strategies as st

from src.algebra import I_UNIT, make_rng
from src.derivations import FAIL, INCONCLUSIVE, PASS
from src.exceptions import BasisError, ConfigurationError, GradingError
from src.superspace import (
    ANALYTIC, CENTRAL, FULL, ANALYTIC_MEASURE, OperatorTag, SuperPolynomial, algebra_checks,
    apply_operator, bispinor_derivative, measure_checks, run_check,
    berezin_integrate, grassmann_derivative, graded_bracket, harmonic_derivative, is_analytic,
    random_superpolynomial, tag, tilde_conjugate, to_analytic, to_central, top_component,
    verify_superspace,
)

P = SuperPolynomial


class TestSuperPolynomial(unittest.TestCase):
    """Test products, harmonic reduction and formatting."""

    def test_thetas_anticommute(self):
        a, b = P.theta('++', 1), P.theta('--', 2)
        self.assertEqual(a * b, -(b * a))
        self.assertEqual(a * a, 0)

    def test_harmonic_reduction(self):
        lhs = P.harmonic('+', 1) * P.harmonic('-', 2)
        rhs = P.harmonic('+', 2) * P.harmonic('-', 1) - 1
        self.assertEqual(lhs, rhs)

    def test_format(self):
        f = P.x(0) ** 2 * P.theta('++', 1) * P.harmonic('+', 1)
        self.assertEqual(str(f), "x0^2*th++1*u+1")
        self.assertEqual(str(P.zero()), "0")

    def test_mixed_parity(self):
        with self.assertRaises(GradingError):
            (P.x(0) + P.theta('0', 1)).parity()

    def test_basis_mismatch(self):
        with self.assertRaises(BasisError):
            P.x(0, CENTRAL) + P.x(0, ANALYTIC)

    def test_unsorted_monomial_sign(self):
        self.assertEqual(P.monomial(theta=(1, 0)), -P.monomial(theta=(0, 1)))
        self.assertEqual(P.monomial(theta=(2, 2)), 0)


class TestOperators(unittest.TestCase):
    """Test the derivatives and generators."""

    def test_tags(self):
        parsed = tag('D--_2')
        self.assertEqual((parsed.name, parsed.index), ('D--_a', 2))
        self.assertEqual(str(parsed), 'D--_2')
        self.assertEqual(parsed.parity, 1)
        self.assertEqual(tag('D0').parity, 0)
        for text in ('d++_1', 'X', 'D++_3'):
            with self.assertRaises(ConfigurationError):
                tag(text)
        with self.assertRaises(ConfigurationError):
            OperatorTag('D++_a')

    def test_grassmann_derivative_sign(self):
        f = P.theta('++', 1) * P.theta('--', 1)
        self.assertEqual(grassmann_derivative(f, ('--', 1)), -P.theta('++', 1))
        self.assertEqual(grassmann_derivative(f, 0), P.theta('--', 1))
        with self.assertRaises(ConfigurationError):
            grassmann_derivative(f, 6)

    def test_harmonic_derivatives(self):
        self.assertEqual(harmonic_derivative(P.harmonic('-', 1), 'd++'), P.harmonic('+', 1))
        self.assertEqual(harmonic_derivative(P.harmonic('+', 2), 'd--'), P.harmonic('-', 2))
        self.assertEqual(harmonic_derivative(P.harmonic('-', 2), 'd0'), -P.harmonic('-', 2))

    def test_susy_anticommutator(self):
        self.assertEqual(graded_bracket('Q0_1', 'Q0_1', P.x(0)), P.one())

    def test_harmonic_commutator(self):
        f = P.harmonic('+', 1) * P.harmonic('-', 1) * P.theta('++', 2) * P.x(1)
        self.assertEqual(graded_bracket('D++', 'D--', f), apply_operator(f, 'D0'))

    def test_tilde(self):
        u = P.harmonic('+', 1)
        self.assertEqual(tilde_conjugate(tilde_conjugate(u)), -u)
        self.assertEqual(tilde_conjugate(P.x(2).scale(I_UNIT)), P.x(2).scale(-I_UNIT))


class TestBasesAndMeasures(unittest.TestCase):
    """Test coordinate changes, analyticity and Berezin integration."""

    def test_analytic_shift(self):
        expected = P.x(0, ANALYTIC) + (P.theta('++', 1, ANALYTIC) * P.theta('--', 1, ANALYTIC)).scale(I_UNIT * 2)
        self.assertEqual(to_analytic(P.x(0)), expected)
        self.assertEqual(to_central(to_analytic(P.x(1) ** 2)), P.x(1) ** 2)

    def test_basis_required(self):
        with self.assertRaises(BasisError):
            to_analytic(P.x(0, None))
        with self.assertRaises(BasisError):
            is_analytic(P.theta('++', 1, None))

    def test_analyticity(self):
        self.assertTrue(is_analytic(P.theta('++', 1, ANALYTIC) * P.harmonic('+', 2, ANALYTIC)))
        self.assertFalse(is_analytic(P.theta('--', 1, ANALYTIC)))

    def test_full_measure_normalization(self):
        top = P.monomial(theta=range(6))
        self.assertEqual(berezin_integrate(top, FULL), P.constant(Fraction(-1, 8)))
        self.assertEqual(top_component(top), P.one())
        self.assertEqual(berezin_integrate(P.one(), FULL), 0)

    def test_measures_drop_all_thetas(self):
        f = P.monomial(theta=range(6)) + P.theta('++', 1) * P.x(0)
        for measure in (FULL, ANALYTIC_MEASURE):
            self.assertFalse(berezin_integrate(f, measure).contains_theta('++'))
        with self.assertRaises(ConfigurationError):
            berezin_integrate(f, 'chiral')

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_round_trip(self, seed):
        f = random_superpolynomial(make_rng(seed))
        self.assertEqual(to_central(to_analytic(f)), f)


class TestSuite(unittest.TestCase):
    """Test the randomized superspace suite."""

    def test_operator_relations_pass(self):
        report = verify_superspace(samples=4, seed=3)
        measure = {name for name, _ in measure_checks()}
        for relation in report.relations:
            if relation.name in measure:
                self.assertNotEqual(relation.status, FAIL, relation.name)
            else:
                self.assertEqual(relation.status, PASS, relation.name)
        self.assertEqual(report.seed, 3)

    def test_reproducible(self):
        first = verify_superspace(samples=3, seed=11).to_dict()
        second = verify_superspace(samples=3, seed=11, n_jobs=2).to_dict()
        self.assertEqual(first, second)

    def test_samples_bound(self):
        with self.assertRaises(ConfigurationError):
            verify_superspace(samples=0)


class TestAlgebraChecks(unittest.TestCase):
    """Test that every index choice of the derivative algebra is its own relation."""

    def test_off_diagonal_relations_listed(self):
        names = [name for name, _ in algebra_checks()]
        self.assertEqual(len(names), 30)
        self.assertEqual(len(set(names)), 30)
        for name in ("{D++_1, D--_2} = 2i d_12", "{D++_2, D--_1} = 2i d_21",
                     "{D0_1, D0_2} = -i d_12", "{D--_2, D0_1} = 0",
                     "[D0, D--_2] = -2 D--_2", "[D--, D0_1] = D--_1"):
            self.assertIn(name, names)

    def test_off_diagonal_value(self):
        self.assertEqual(graded_bracket('D++_1', 'D--_2', P.x(1)), P.constant(I_UNIT))
        self.assertEqual(graded_bracket('D0_2', 'D0_1', P.x(1)),
                         P.constant(Fraction(-1, 2)) * P.constant(I_UNIT))

    def test_each_relation_on_samples(self):
        samples = [random_superpolynomial(make_rng(seed)) for seed in range(3)]
        for name, check in algebra_checks():
            with self.subTest(relation=name):
                self.assertEqual(run_check(name, check, samples).status, PASS)

    def test_wrong_pair_factor_fails(self):
        def check(f):
            return graded_bracket('D++_1', 'D--_2', f) - bispinor_derivative(f, 1, 2).scale(-2 * I_UNIT)
        report = run_check("{D++_1, D--_2} = -2i d_12", check, [P.one(), P.x(1)])
        self.assertEqual(report.status, FAIL)
        self.assertEqual(report.generator, 'sample 1')


class TestMeasureChecks(unittest.TestCase):
    """Test the measure identities on x-dependent and x-independent input."""

    def setUp(self):
        self.checks = dict(measure_checks())
        four = P.theta('++', 1) * P.theta('--', 1) * P.theta('0', 1) * P.theta('0', 2)
        self.saturation_input = P.x(2) * four
        self.total_derivative_input = P.x(2) * P.theta('++', 1) * P.theta('--', 1) \
            * P.theta('--', 2) * P.theta('0', 1) * P.theta('0', 2)
        self.x_free = {
            "full measure = -1/8 top component": four,
            "full measure annihilates D++_a f": P.theta('++', 1) * P.theta('--', 1)
            * P.theta('--', 2) * P.theta('0', 1) * P.theta('0', 2),
        }

    def test_names(self):
        self.assertEqual(set(self.checks), set(self.x_free))

    def test_x_independent_input_passes(self):
        samples = [random_superpolynomial(make_rng(seed), max_x_degree=0) for seed in range(4)]
        for name, check in self.checks.items():
            with self.subTest(relation=name):
                self.assertEqual(run_check(name, check, samples, True).status, PASS)
                self.assertFalse(check(self.x_free[name]))

    def test_x_dependent_input_is_inconclusive(self):
        inputs = {
            "full measure = -1/8 top component": self.saturation_input,
            "full measure annihilates D++_a f": self.total_derivative_input,
        }
        for name, f in inputs.items():
            with self.subTest(relation=name):
                check = self.checks[name]
                residual = check(f)
                self.assertTrue(residual)
                self.assertFalse(residual.contains_theta('++'))
                report = run_check(name, check, [self.x_free[name], f], modulo_x_derivatives=True)
                self.assertEqual(report.status, INCONCLUSIVE)
                self.assertEqual(report.generator, 'sample 1')
                self.assertIn("1 of 2 samples", report.note)
                self.assertEqual(run_check(name, check, [f]).status, FAIL)

    def test_x_free_failure_still_fails(self):
        def check(f):
            return berezin_integrate(f, FULL)
        report = run_check("full measure vanishes", check, [P.monomial(theta=range(6))], True)
        self.assertEqual(report.status, FAIL)


if __name__ == '__main__':
    unittest.main()
