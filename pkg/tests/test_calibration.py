"""
Unit tests for coefficient calibration
"""

import unittest
from fractions import Fraction
import sys
sys.path.append('..')

from src.algebra import Element, default_alphabet
from src.derivations.calibration import (
    PROBLEMS, CalibrationRelation, ParametrizedRuleSet, calibrate, fp_scale_problem,
    ghost_square_problem,
)
from src.derivations.operators import OperatorExpression as Op
from src.derivations.tables import brst_registry
from src.exceptions import ConfigurationError, SearchSpaceError


class TestParametrizedRuleSet(unittest.TestCase):
    """Test templates with unknown coefficients."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()
        self.base = brst_registry('linear', 'leibniz_consistent', self.alphabet)

    def test_instantiate(self):
        rule_set = ParametrizedRuleSet(self.base)
        rule_set.add_term('s', 'c_L', Element.word(self.alphabet, 'c_L', 'c_L'), 'kappa')
        registry = rule_set.instantiate({'kappa': Fraction(3)})
        self.assertEqual(registry['s'].image('c_L'),
                         Element.word(self.alphabet, 'c_L', 'c_L', coeff=3))
        self.assertEqual(registry['s'].image('c_R'), self.base['s'].image('c_R'))

    def test_ghost_scale_shares_one_unknown(self):
        rule_set = ParametrizedRuleSet(self.base).add_ghost_scale('dFP', 'lambda')
        self.assertEqual(rule_set.unknowns(), ['lambda'])
        registry = rule_set.instantiate({'lambda': Fraction(1, 2)})
        cbar = Element.generator(self.alphabet, 'cbar_L')
        self.assertEqual(registry['dFP'].apply(cbar), cbar.scale(Fraction(-1, 2)))

    def test_unknown_derivation(self):
        with self.assertRaises(ConfigurationError):
            ParametrizedRuleSet(self.base).add_term('t', 'c_L', Element.zero(self.alphabet), 'x')


class TestCalibrate(unittest.TestCase):
    """Test the grid search and its failure diagnostics."""

    def setUp(self):
        """Set up test fixtures."""
        self.alphabet = default_alphabet()

    def test_ghost_square_is_unique(self):
        result = calibrate(*ghost_square_problem(self.alphabet))
        self.assertTrue(result.solved)
        self.assertEqual(result.solutions, [{'kappa': Fraction(-1)}])

    def test_fp_scale(self):
        result = calibrate(*fp_scale_problem(self.alphabet))
        self.assertEqual(result.solutions, [{'lambda': Fraction(2)}])

    def test_cross_relation_is_unsatisfiable(self):
        result = calibrate(*PROBLEMS['fp-scale-cross'](self.alphabet))
        self.assertFalse(result.solved)
        self.assertEqual(result.minimal_core, ['[d2,dFP] = 4*d2', '[d1,d2] = -2*dFP'])
        self.assertEqual(result.best_assignment, {'lambda': Fraction(2)})
        self.assertEqual(result.first_failure, ('[d1,d2] = -2*dFP', 'c_L'))
        data = result.to_dict()
        self.assertEqual(data['best_assignment'], {'lambda': '2'})
        self.assertEqual(data['solutions'], [])

    def test_parallel_matches_serial(self):
        serial = calibrate(*fp_scale_problem(self.alphabet))
        parallel = calibrate(*fp_scale_problem(self.alphabet), n_jobs=2)
        self.assertEqual(serial.solutions, parallel.solutions)

    def test_search_space_bound(self):
        rule_set, relations = ghost_square_problem(self.alphabet)
        with self.assertRaises(SearchSpaceError) as ctx:
            calibrate(rule_set, relations, max_unknowns=0)
        self.assertIn('split', str(ctx.exception))

    def test_tuple_relations(self):
        rule_set, _ = ghost_square_problem(self.alphabet)
        result = calibrate(rule_set, [(Op.compose('s', 's'), Op.zero(), ('V_L',))],
                           grid=(Fraction(1), Fraction(-1)))
        self.assertEqual(result.searched, 2)
        self.assertEqual(result.solutions, [{'kappa': Fraction(-1)}])

    def test_relation_name(self):
        relation = CalibrationRelation(Op.bracket('d1', 'd2'), Op.single('dFP', -2))
        self.assertEqual(relation.name, '[d1,d2] = -2*dFP')


if __name__ == '__main__':
    unittest.main()
