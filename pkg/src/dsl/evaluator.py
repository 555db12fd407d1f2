"""Evaluation of expression trees to Elements."""

import logging
from typing import Iterable, Mapping, Optional

from ..algebra.element import (
    EMPTY, Element, apply_dpp, graded_commutator, multiply, trace,
)
from ..algebra.grading import Alphabet
from ..algebra.scalars import PARAMETER_NAMES, Scalar, scalar
from ..exceptions import ConfigurationError, ResolutionError
from ..utils.helpers import near_matches
from .ast import (
    ApplyDerivation, ApplyDpp, Bracket, Negate, Node, Number, Product, Sum, Symbol, Trace,
)
from .parser import DERIVATION_NAMES, parse_expression

logger = logging.getLogger(__name__)

SCALAR_NAMES = ('i',) + PARAMETER_NAMES


def known_identifiers(alphabet: Alphabet) -> Iterable[str]:
    return list(alphabet.names()) + list(SCALAR_NAMES)


class Evaluator:
    """Evaluates trees over an alphabet and a registry of derivations.

    Registry values only need an `apply(Element) -> Element` method.
    """

    def __init__(self, alphabet: Alphabet, registry: Optional[Mapping] = None):
        self.alphabet = alphabet
        self.registry = dict(registry or {})
        self.logger = logger

    def evaluate(self, node: Node) -> Element:
        if isinstance(node, Number):
            return Element.constant(self.alphabet, node.value)
        if isinstance(node, Symbol):
            return self._symbol(node.name)
        if isinstance(node, Negate):
            return -self.evaluate(node.operand)
        if isinstance(node, Sum):
            left, right = self.evaluate(node.left), self.evaluate(node.right)
            return left + right if node.op == '+' else left - right
        if isinstance(node, Product):
            return multiply(self.evaluate(node.left), self.evaluate(node.right))
        if isinstance(node, Bracket):
            return graded_commutator(self.evaluate(node.left), self.evaluate(node.right))
        if isinstance(node, Trace):
            return trace(self.evaluate(node.operand))
        if isinstance(node, ApplyDpp):
            return apply_dpp(self.evaluate(node.operand))
        if isinstance(node, ApplyDerivation):
            if node.name not in self.registry:
                raise ResolutionError(node.name, near_matches(node.name, self.registry))
            return self.registry[node.name].apply(self.evaluate(node.operand))
        raise TypeError(f"not an expression node: {node!r}")

    def _symbol(self, name: str) -> Element:
        if name in self.alphabet:
            return Element.generator(self.alphabet, name)
        if name in SCALAR_NAMES:
            return Element.constant(self.alphabet, scalar(name))
        raise ResolutionError(name, near_matches(name, known_identifiers(self.alphabet)))


def evaluate_text(text: str, alphabet: Alphabet, registry: Optional[Mapping] = None) -> Element:
    """Parse and evaluate one expression."""
    derivations = set(DERIVATION_NAMES) | set(registry or {})
    tree = parse_expression(text, known_identifiers(alphabet), derivations)
    return Evaluator(alphabet, registry).evaluate(tree)


def parse_scalar(text: str, alphabet: Alphabet) -> Scalar:
    """Scalar expression such as '1/2 - i*alpha'; generators are rejected."""
    value = evaluate_text(text, alphabet)
    if any(m != EMPTY for m in value.monomials()):
        raise ConfigurationError(f"'{text}' is not a scalar expression")
    return value.coefficient(EMPTY)
