from .ast import (
    ApplyDerivation, ApplyDpp, Bracket, Negate, Node, Number, Product, Sum, Symbol, Trace, to_text,
)
from .parser import DERIVATION_NAMES, Parser, parse_expression, tokenize
from .evaluator import Evaluator, evaluate_text, known_identifiers, parse_scalar

__all__ = [
    'ApplyDerivation', 'ApplyDpp', 'Bracket', 'Negate', 'Node', 'Number', 'Product', 'Sum',
    'Symbol', 'Trace', 'to_text',
    'DERIVATION_NAMES', 'Parser', 'parse_expression', 'tokenize',
    'Evaluator', 'evaluate_text', 'known_identifiers', 'parse_scalar',
]
