"""Derivation rule tables, operator expressions and relation checks."""

from .derivation import (
    Derivation, apply, commutator_of_derivations, formal_dpp, ghost_number_derivation,
)
from .operators import OperatorExpression, OperatorTerm
from .relations import FAIL, INCONCLUSIVE, PASS, RelationReport, check_relation, relation_name
from .tables import (
    brst_registry, brst_table_name, gauge_variation, gauge_variation_derivation,
    load_rule_file, make_derivations, normalize_convention, normalize_gauge, parse_rules,
    substitute_gauge_parameters, table_path,
)

__all__ = [
    'Derivation', 'apply', 'commutator_of_derivations', 'formal_dpp', 'ghost_number_derivation',
    'OperatorExpression', 'OperatorTerm',
    'FAIL', 'INCONCLUSIVE', 'PASS', 'RelationReport', 'check_relation', 'relation_name',
    'brst_registry', 'brst_table_name', 'gauge_variation', 'gauge_variation_derivation',
    'load_rule_file', 'make_derivations', 'normalize_convention', 'normalize_gauge',
    'parse_rules', 'substitute_gauge_parameters', 'table_path',
]
