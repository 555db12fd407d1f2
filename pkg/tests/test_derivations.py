"""
Unit tests for derivations, rule tables and verification suites
"""

import unittest
import sys
sys.path.append('..')

from src.algebra import (
    I_UNIT, Element, default_alphabet, grading_of, make_rng, param, parity_of, random_element,
    random_homogeneous,
)
from src.derivations import (
    FAIL, PASS, OperatorExpression as Op, brst_registry, brst_table_name, check_relation,
    commutator_of_derivations, gauge_variation, ghost_number_derivation, make_derivations,
    parse_rules,
)
from src.derivations.suites import suite_names, verify_suite
from src.exceptions import ConfigurationError, GradingError, UnknownSuiteError


class TestRuleTables(unittest.TestCase):
    """Test rule-table loading."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()

    def test_parse_rules(self):
        rules = parse_rules("# ghost\ns c_L = -c_L*c_L\n", self.alphabet)
        self.assertEqual(rules['s']['c_L'], Element.word(self.alphabet, 'c_L', 'c_L', coeff=-1))

    def test_unknown_generator_in_rules(self):
        with self.assertRaises(ConfigurationError):
            parse_rules("s phi = 0\n", self.alphabet)

    def test_table_names(self):
        self.assertEqual(brst_table_name('landau', 'leibniz'), 'linear_leibniz')
        self.assertEqual(brst_table_name('massive-cf', 'verbatim'), 'massive_cf_verbatim')
        self.assertEqual(brst_table_name('linear', 'verbatim', symmetric=True),
                         'linear_verbatim_symmetric')
        with self.assertRaises(ConfigurationError):
            brst_table_name('cf', 'verbatim', symmetric=True)

    def test_registry_contents(self):
        registry = brst_registry('linear', 'leibniz_consistent', self.alphabet)
        self.assertEqual(sorted(registry), ['d1', 'd2', 'dFP', 's', 'sbar'])
        self.assertEqual(registry['s'].parity, 1)
        self.assertEqual(registry['d1'].parity, 0)


class TestDerivations(unittest.TestCase):
    """Test graded Leibniz application and brackets."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()
        self.registry = brst_registry('curci_ferrari', 'leibniz_consistent', self.alphabet)
        self.g = lambda name: Element.generator(self.alphabet, name)

    def test_ghost_number_derivation(self):
        dfp = ghost_number_derivation(self.alphabet, 2)
        self.assertEqual(dfp.apply(self.g('c_L')), self.g('c_L').scale(2))
        self.assertEqual(dfp.apply(self.g('cbar_R')), self.g('cbar_R').scale(-2))
        self.assertEqual(dfp.apply(self.g('c_L') * self.g('cbar_L')), 0)

    def test_odd_derivation_sign(self):
        s = self.registry['s']
        c = self.g('c_L')
        # s(c c) = s(c) c - c s(c)
        expected = s.apply(c) * c - c * s.apply(c)
        self.assertEqual(s.apply(c * c), expected)

    def test_antighost_square(self):
        s = brst_registry('linear', 'leibniz_consistent', self.alphabet)['s']
        cbar, b = self.g('cbar_L'), self.g('b_L')
        self.assertEqual(s.apply(cbar * cbar), b * cbar - cbar * b)

    def test_commutator_of_derivations(self):
        d1, d2 = self.registry['d1'], self.registry['d2']
        self.assertEqual(commutator_of_derivations(d1, d2, 'c_L'), self.g('c_L'))

    def test_relation_grading_mismatch(self):
        with self.assertRaises(GradingError):
            check_relation(Op.single('s'), Op.single('d1'), self.registry)

    def test_zero_operator_prints(self):
        self.assertEqual(str(Op.zero()), "0")
        self.assertEqual(str(Op.single('dFP', -2)), "-2*dFP")


class TestSuites(unittest.TestCase):
    """Test the named suites against known outcomes."""

    def test_suite_names(self):
        self.assertIn('no-algebra', suite_names())
        self.assertIn('gauge-covariance', suite_names())
        with self.assertRaises(UnknownSuiteError):
            verify_suite('bogus')

    def test_leibniz_nilpotency_passes(self):
        for suite in ('landau', 'linear', 'curci-ferrari'):
            report = verify_suite(suite, 'leibniz_consistent')
            self.assertEqual(report.status, PASS, suite)
            self.assertEqual(report.exit_code, 0)

    def test_verbatim_matter_square(self):
        alphabet = default_alphabet()
        report = verify_suite('linear', 'verbatim', alphabet)
        relation = report.relation('[s,s] = 0')
        self.assertEqual(relation.status, FAIL)
        self.assertIn('q', relation.failing_generators())
        residual = dict(relation.failures)['q']
        expected = Element.word(alphabet, 'c_L', 'c_L', 'q', coeff=-6) \
            + Element.word(alphabet, 'q', 'c_R', 'c_R', coeff=6)
        self.assertEqual(residual, expected)
        self.assertNotIn('c_L', relation.failing_generators())

    def test_massive_square_is_mass_term(self):
        alphabet = default_alphabet()
        report = verify_suite('massive-cf', 'leibniz_consistent', alphabet)
        relation = report.relation('[s,s] = 0')
        self.assertEqual(relation.generator, 'cbar_L')
        self.assertEqual(relation.residual,
                         Element.generator(alphabet, 'c_L').scale(I_UNIT * param('m2') * -2))
        self.assertEqual(relation.note, "residual proportional to m2: yes; vanishes at m2 = 0: yes")

    def test_massless_limit_matches_curci_ferrari(self):
        massive = verify_suite('massive-cf', 'leibniz_consistent', m2=0)
        massless = verify_suite('curci-ferrari', 'leibniz_consistent')
        self.assertEqual([(r.name, r.status) for r in massive.relations],
                         [(r.name, r.status) for r in massless.relations])

    def test_massive_square_at_zero_mass(self):
        report = verify_suite('massive-cf', 'leibniz_consistent', m2=0)
        self.assertEqual(report.relation('[s,s] = 0').status, PASS)

    def test_massive_no_algebra(self):
        alphabet = default_alphabet()
        report = verify_suite('no-algebra-massive', 'leibniz_consistent', alphabet)
        relation = report.relation('[s,s] = -2*i*m2*d1')
        self.assertNotIn('cbar_L', relation.failing_generators())
        self.assertEqual(relation.generator, 'b_L')
        self.assertEqual(relation.residual,
                         Element.word(alphabet, 'c_L', 'c_L', coeff=I_UNIT * param('m2') * 4))

    def test_no_algebra_failures(self):
        alphabet = default_alphabet()
        report = verify_suite('no-algebra', 'leibniz_consistent', alphabet)
        cross = report.relation('[d1,d2] = -2*dFP')
        self.assertEqual(cross.failing_generators()[:1], ['c_L'])
        failures = dict(cross.failures)
        self.assertEqual(failures['c_L'], Element.generator(alphabet, 'c_L').scale(5))
        self.assertEqual(failures['cbar_L'], Element.generator(alphabet, 'cbar_L').scale(-5))
        sd1 = report.relation('[s,d1] = 0')
        self.assertEqual(dict(sd1.failures)['cbar_L'],
                         Element.word(alphabet, 'c_L', 'c_L', coeff=-2))
        self.assertEqual(report.relation('[d1,dFP] = -4*d1').status, PASS)
        self.assertEqual(report.relation('[d2,dFP] = 4*d2').status, PASS)
        self.assertEqual(report.exit_code, 1)

    def test_relation_order_is_stable(self):
        first = verify_suite('no-algebra', 'leibniz_consistent')
        second = verify_suite('no-algebra', 'leibniz_consistent', n_jobs=2)
        self.assertEqual([r.name for r in first.relations], [r.name for r in second.relations])
        self.assertEqual([r.status for r in first.relations], [r.status for r in second.relations])

    def test_verbatim_covariance(self):
        report = verify_suite('gauge-covariance', 'verbatim')
        self.assertEqual(report.status, PASS)


class TestDerivationLaws(unittest.TestCase):
    """Seeded property runs for the graded Leibniz extension."""

    N_SAMPLES = 1000
    LETTERS = ['V_L', 'V_R', 'c_L', 'c_R', 'cbar_L', 'cbar_R', 'b_L', 'b_R', 'q', 'qbar']

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()
        self.registry = brst_registry('curci_ferrari', 'leibniz_consistent', self.alphabet)
        self.names = sorted(self.registry)
        self.rng = make_rng(17)

    def test_leibniz_rule(self):
        for k in range(self.N_SAMPLES):
            d = self.registry[self.names[k % len(self.names)]]
            a = random_homogeneous(self.alphabet, self.rng, self.LETTERS, int(self.rng.integers(1, 3)))
            b = random_element(self.alphabet, self.rng, self.LETTERS, max_terms=2, max_length=2)
            sign = -1 if d.parity and parity_of(a) else 1
            expected = d.apply(a) * b + (a * d.apply(b)).scale(sign)
            self.assertEqual(d.apply(a * b), expected, f"{d.name} on product {k}")

    def test_ghost_number_shift(self):
        checked = 0
        for k in range(self.N_SAMPLES):
            d = self.registry[self.names[k % len(self.names)]]
            e = random_homogeneous(self.alphabet, self.rng, self.LETTERS, int(self.rng.integers(1, 4)))
            image = d.apply(e)
            if image.is_zero():
                continue
            checked += 1
            self.assertEqual(grading_of(image, waive_hcharge=True).ghost,
                             grading_of(e).ghost + d.grading.ghost, f"{d.name} on sample {k}")
            self.assertEqual(parity_of(image), parity_of(e) ^ d.parity)
        self.assertGreater(checked, self.N_SAMPLES // 4)

    def test_agreement_on_generators(self):
        text = (
            "s V_L = Dpp(c_L) + [V_L, c_L]\n"
            "s c_L = -1/2*[c_L, c_L]\n"
            "s c_R = -1/2*[c_R, c_R]\n"
            "s cbar_L = b_L - 1/2*cbar_L*c_L - 1/2*c_L*cbar_L\n"
            "s b_L = 1/2*b_L*c_L - 1/2*c_L*b_L + 1/4*cbar_L*c_L*c_L - 1/4*c_L*c_L*cbar_L\n"
            "s q = q*c_R - c_L*q\n"
        )
        rewritten = make_derivations(parse_rules(text, self.alphabet), self.alphabet)['s']
        s = self.registry['s']
        letters = ['V_L', 'c_L', 'c_R', 'cbar_L', 'b_L', 'q', 'Dpp(c_L)', 'Dpp(V_L)']
        for name in letters:
            self.assertEqual(rewritten.image(name), s.image(name), name)
        for k in range(self.N_SAMPLES):
            e = random_element(self.alphabet, self.rng, letters)
            self.assertEqual(rewritten.apply(e), s.apply(e), f"sample {k}")

    def test_disagreement_on_one_generator(self):
        s = self.registry['s']
        flipped = s.with_rules({'c_L': Element.word(self.alphabet, 'c_L', 'c_L')})
        e = Element.word(self.alphabet, 'q', 'c_L')
        self.assertNotEqual(flipped.apply(e), s.apply(e))
        self.assertEqual(flipped.apply(Element.generator(self.alphabet, 'q')),
                         s.apply(Element.generator(self.alphabet, 'q')))


class TestVerbatimResiduals(unittest.TestCase):
    """Exact residuals of the printed linear-gauge tables."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()
        self.report = verify_suite('linear', 'verbatim', self.alphabet)
        self.w = lambda *names, coeff=1: Element.word(self.alphabet, *names, coeff=coeff)

    def test_gauge_field_square(self):
        failures = dict(self.report.relation('[s,s] = 0').failures)
        for side in ('L', 'R'):
            v, c, dc = f'V_{side}', f'c_{side}', f'Dpp(c_{side})'
            expected = self.w(dc, c, coeff=6) + self.w(c, dc, coeff=6) \
                + self.w(v, c, c, coeff=6) + self.w(c, c, v, coeff=-6)
            self.assertEqual(failures[v], expected, v)

    def test_right_antighost_square(self):
        failures = dict(self.report.relation('[s,s] = 0').failures)
        expected = self.w('b_R', 'cbar_R', coeff=2) + self.w('cbar_R', 'b_R', coeff=-2) \
            + self.w('b_R', 'c_R', coeff=4) + self.w('c_R', 'b_R', coeff=-4)
        self.assertEqual(failures['cbar_R'], expected)
        self.assertNotIn('cbar_L', failures)


class TestNoAlgebraStatusMap(unittest.TestCase):
    """Status of every Nakanishi-Ojima relation in the Curci-Ferrari gauge."""

    EXPECTED = {
        '[s,s] = 0': PASS,
        '[sbar,sbar] = 0': PASS,
        '[s,sbar] = 0': PASS,
        '[d1,d2] = -2*dFP': FAIL,
        '[d1,dFP] = -4*d1': PASS,
        '[d2,dFP] = 4*d2': PASS,
        '[s,dFP] = -2*s': PASS,
        '[sbar,dFP] = 2*sbar': PASS,
        '[s,d1] = 0': FAIL,
        '[sbar,d1] = -2*s': FAIL,
        '[s,d2] = 2*sbar': FAIL,
        '[sbar,d2] = 0': FAIL,
    }

    def test_status_map(self):
        report = verify_suite('no-algebra', 'leibniz_consistent')
        for name, status in self.EXPECTED.items():
            with self.subTest(relation=name):
                self.assertEqual(report.relation(name).status, status)
        self.assertEqual(report.status, FAIL)

    def test_sbar_d2_residual(self):
        alphabet = default_alphabet()
        report = verify_suite('no-algebra', 'leibniz_consistent', alphabet)
        failures = dict(report.relation('[sbar,d2] = 0').failures)
        self.assertEqual(failures['c_L'], Element.word(alphabet, 'cbar_L', 'cbar_L', coeff=2))


class TestGaugeVariation(unittest.TestCase):
    """Test first-order gauge variations of the matter and gauge fields."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()
        self.w = lambda *names, coeff=1: Element.word(self.alphabet, *names, coeff=coeff)

    def test_verbatim(self):
        self.assertEqual(gauge_variation('q', 'verbatim', alphabet=self.alphabet),
                         self.w('Lam_L', 'q') - self.w('q', 'Lam_R'))
        self.assertEqual(gauge_variation('qbar', 'verbatim', alphabet=self.alphabet),
                         self.w('Lam_R', 'qbar') - self.w('qbar', 'Lam_L'))
        self.assertEqual(gauge_variation('V_L', 'verbatim', alphabet=self.alphabet),
                         -self.w('Dpp(Lam_L)') - self.w('V_L', 'Lam_L') + self.w('Lam_L', 'V_L'))

    def test_leibniz(self):
        self.assertEqual(gauge_variation('q', 'leibniz_consistent', alphabet=self.alphabet),
                         self.w('q', 'Lam_R') - self.w('Lam_L', 'q'))
        self.assertEqual(gauge_variation('V_R', 'leibniz_consistent', alphabet=self.alphabet),
                         self.w('Dpp(Lam_R)') + self.w('V_R', 'Lam_R') - self.w('Lam_R', 'V_R'))

    def test_zero_parameters(self):
        zero = Element.zero(self.alphabet)
        params = {'Lam_L': zero, 'Lam_R': zero}
        for convention in ('verbatim', 'leibniz_consistent'):
            for field in ('q', 'qbar', 'V_L', 'V_R'):
                with self.subTest(convention=convention, field=field):
                    self.assertTrue(gauge_variation(field, convention, params, self.alphabet).is_zero())

    def test_parameter_replacement_reaches_derivatives(self):
        params = {'Lam_L': Element.generator(self.alphabet, 'b_L')}
        result = gauge_variation('V_L', 'verbatim', params, self.alphabet)
        self.assertEqual(result, -self.w('Dpp(b_L)') - self.w('V_L', 'b_L') + self.w('b_L', 'V_L'))

    def test_rejects_unknown_names(self):
        with self.assertRaises(ConfigurationError):
            gauge_variation('c_L')
        with self.assertRaises(ConfigurationError):
            gauge_variation('q', params={'Lam': Element.zero(self.alphabet)}, alphabet=self.alphabet)


if __name__ == '__main__':
    unittest.main()
