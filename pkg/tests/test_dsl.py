"""
Unit tests for the expression language
"""

import unittest
from fractions import Fraction
import sys
sys.path.append('..')

from hypothesis import given, settings, strategies as st

from src.algebra import I_UNIT, Element, default_alphabet, make_rng, param, random_element, scalar
from src.derivations.suites import build_registry
from src.dsl import evaluate_text, parse_expression, parse_scalar, to_text, tokenize
from src.exceptions import ConfigurationError, DslSyntaxError, ResolutionError


class TestParser(unittest.TestCase):
    """Test tokenizing and parsing."""

    def test_tokens(self):
        kinds = [t.kind for t in tokenize("s(c_L) - 1/2*q")]
        self.assertEqual(kinds, ['ident', 'punct', 'ident', 'punct', 'punct',
                                 'number', 'punct', 'ident', 'end'])

    def test_syntax_error_position(self):
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_expression("c_L +")
        self.assertEqual(ctx.exception.position, 5)

    def test_bad_character(self):
        with self.assertRaises(DslSyntaxError) as ctx:
            parse_expression("c_L & q")
        self.assertEqual(ctx.exception.position, 4)

    def test_unbalanced_bracket(self):
        with self.assertRaises(DslSyntaxError):
            parse_expression("[c_L, q")

    def test_printed_tree_reparses(self):
        tree = parse_expression("-[c_L, s(q)] + 2*(V_L - tr(c_L*c_R))")
        self.assertEqual(to_text(parse_expression(to_text(tree))), to_text(tree))


class TestEvaluator(unittest.TestCase):
    """Test evaluation against the linear-gauge derivations."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()
        self.registry = build_registry('linear', 'leibniz_consistent', self.alphabet)

    def evaluate(self, text):
        return evaluate_text(text, self.alphabet, self.registry)

    def test_ghost_image(self):
        self.assertEqual(self.evaluate("s(c_L)"), Element.word(self.alphabet, 'c_L', 'c_L', coeff=-1))

    def test_nilpotent_on_ghost(self):
        self.assertEqual(self.evaluate("s(s(c_L))"), 0)
        self.assertEqual(self.evaluate("sbar(sbar(cbar_R))"), 0)

    def test_bracket_and_trace(self):
        c = Element.generator(self.alphabet, 'c_L')
        self.assertEqual(self.evaluate("[c_L, c_L]"), (c * c).scale(2))
        self.assertEqual(self.evaluate("tr(c_L*c_L)"), 0)

    def test_dpp(self):
        self.assertEqual(self.evaluate("Dpp(V_L)").generators(), ['Dpp(V_L)'])

    def test_unknown_identifier(self):
        with self.assertRaises(ResolutionError) as ctx:
            self.evaluate("c_l")
        self.assertIn('c_L', ctx.exception.near_matches)

    def test_unknown_derivation(self):
        with self.assertRaises(ResolutionError):
            self.evaluate("sb(c_L)")

    def test_scalars(self):
        expected = scalar(Fraction(1, 2)) - I_UNIT * param('alpha')
        self.assertEqual(parse_scalar("1/2 - i*alpha", self.alphabet), expected)
        with self.assertRaises(ConfigurationError):
            parse_scalar("2*c_L", self.alphabet)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_canonical_text_reads_back(self, seed):
        e = random_element(self.alphabet, make_rng(seed), parameters=('alpha', 'm2'))
        self.assertEqual(evaluate_text(str(e), self.alphabet), e)


if __name__ == '__main__':
    unittest.main()
