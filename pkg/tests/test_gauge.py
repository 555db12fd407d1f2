"""
Unit tests for the gauge-fixing checks
"""

import unittest
import sys
sys.path.append('..')

from src.algebra import ZERO, Element, apply_dpp, default_alphabet, param, trace
from src.derivations import FAIL, PASS
from src.exceptions import ConfigurationError
from src.gauge import (
    GaugeConfig, build_gauge_fixing, check_bundle_gradings, check_covariance,
    check_double_variation, check_exactness, check_lagrangian_exactness,
    decompose_total_derivative, verify_gauge_fixing,
)


class TestGaugeConfig(unittest.TestCase):
    """Test parameter validation."""

    def test_landau_forces_alpha(self):
        config = GaugeConfig.from_names('landau')
        self.assertEqual(config.alpha, ZERO)
        with self.assertRaises(ConfigurationError):
            GaugeConfig.from_names('landau', alpha=1)

    def test_mass_only_in_massive_gauge(self):
        with self.assertRaises(ConfigurationError):
            GaugeConfig.from_names('linear', m2=1)
        config = GaugeConfig.from_names('massive-cf')
        self.assertEqual(config.m2, param('m2'))

    def test_unknown_gauge(self):
        with self.assertRaises(ConfigurationError):
            GaugeConfig.from_names('axial')


class TestTotalDerivative(unittest.TestCase):
    """Test recognition of total Dpp derivatives."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()

    def test_derivative_is_recognized(self):
        word = trace(Element.word(self.alphabet, 'c_L', 'V_L', 'cbar_L'))
        target = apply_dpp(word).scale(3)
        decomposition = decompose_total_derivative(target)
        self.assertTrue(decomposition.solvable)
        self.assertEqual(apply_dpp(decomposition.witness), target)

    def test_underived_word_is_not(self):
        decomposition = decompose_total_derivative(Element.generator(self.alphabet, 'q'))
        self.assertFalse(decomposition.solvable)
        self.assertFalse(decomposition.inconclusive)

    def test_long_words_are_inconclusive(self):
        target = apply_dpp(Element.word(self.alphabet, 'q', 'q', 'q', 'q', 'q'))
        decomposition = decompose_total_derivative(target, max_length=4)
        self.assertTrue(decomposition.inconclusive)

    def test_zero(self):
        self.assertTrue(decompose_total_derivative(Element.zero(self.alphabet)).solvable)


class TestGaugeFixing(unittest.TestCase):
    """Test the gauge-fixing bundle in the linear gauge."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()
        self.config = GaugeConfig.from_names('linear', 'leibniz_consistent')

    def test_bundle_gradings(self):
        bundle = build_gauge_fixing(self.config, self.alphabet)
        self.assertEqual(check_bundle_gradings(bundle).status, PASS)
        self.assertIn('Phi', bundle.to_dict())

    def test_lagrangian_is_exact(self):
        reports = check_lagrangian_exactness(self.config, alphabet=self.alphabet)
        self.assertEqual(reports['brst'].status, PASS)
        self.assertEqual(reports['brst'].witness, "0")
        self.assertEqual(reports['anti_brst'].status, PASS)
        self.assertTrue(reports['anti_brst'].witness.startswith("Dpp("))

    def test_covariance(self):
        self.assertEqual(check_covariance('leibniz_consistent').status, PASS)
        self.assertEqual(check_covariance('verbatim').status, PASS)

    def test_full_report(self):
        report = verify_gauge_fixing(self.config, self.alphabet)
        self.assertEqual(report.suite, 'gauge-fixing')
        for relation in report.relations:
            self.assertEqual(relation.status, PASS, relation.name)
        self.assertIn('L_gh', report.artifacts)
        self.assertEqual(report.status, PASS)
        self.assertEqual(report.exit_code, 0)


class TestGaugeMatrix(unittest.TestCase):
    """Exactness and double variation for every gauge under both conventions."""

    GAUGES = ('landau', 'linear', 'cf', 'massive-cf')
    EXPECTED = {'leibniz_consistent': PASS, 'verbatim': FAIL}

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()

    def test_exactness(self):
        for gauge in self.GAUGES:
            for convention, status in self.EXPECTED.items():
                with self.subTest(gauge=gauge, convention=convention):
                    config = GaugeConfig.from_names(gauge, convention)
                    report = check_exactness(config, alphabet=self.alphabet)
                    self.assertEqual(report.status, status)

    def test_double_variation(self):
        for gauge in self.GAUGES:
            for convention, status in self.EXPECTED.items():
                with self.subTest(gauge=gauge, convention=convention):
                    config = GaugeConfig.from_names(gauge, convention)
                    report = check_double_variation(config, alphabet=self.alphabet)
                    self.assertEqual(report.status, status)
                    if status == FAIL:
                        self.assertEqual(report.generator, 'Lagrangian')
                        self.assertTrue(report.residual)


if __name__ == '__main__':
    unittest.main()
