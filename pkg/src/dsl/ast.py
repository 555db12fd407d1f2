"""
Expression tree for the rule and expression language.

Spans are (start, end) offsets into the parsed text; they are excluded from
equality so that printed-then-reparsed trees compare equal.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple, Union

Span = Tuple[int, int]

# Precedence levels used by the printer: sums < products < unary < atoms.
SUM_LEVEL = 1
PRODUCT_LEVEL = 2
UNARY_LEVEL = 3
ATOM_LEVEL = 4


@dataclass(frozen=True)
class Number:
    value: Fraction
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Symbol:
    """Generator or scalar identifier; resolved at evaluation."""
    name: str
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Negate:
    operand: 'Node'
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Sum:
    left: 'Node'
    op: str
    right: 'Node'
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Product:
    left: 'Node'
    right: 'Node'
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Bracket:
    left: 'Node'
    right: 'Node'
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Trace:
    operand: 'Node'
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ApplyDerivation:
    name: str
    operand: 'Node'
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ApplyDpp:
    operand: 'Node'
    span: Span = field(default=(0, 0), compare=False)


Node = Union[Number, Symbol, Negate, Sum, Product, Bracket, Trace, ApplyDerivation, ApplyDpp]


def _level(node: Node) -> int:
    if isinstance(node, Sum):
        return SUM_LEVEL
    if isinstance(node, Product):
        return PRODUCT_LEVEL
    if isinstance(node, Negate):
        return UNARY_LEVEL
    return ATOM_LEVEL


def _wrap(node: Node, minimum: int) -> str:
    text = to_text(node)
    return f"({text})" if _level(node) < minimum else text


def to_text(node: Node) -> str:
    """Print with the fewest parentheses that reparse to the same tree."""
    if isinstance(node, Number):
        value = node.value
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, Negate):
        return f"-{_wrap(node.operand, UNARY_LEVEL)}"
    if isinstance(node, Sum):
        return f"{_wrap(node.left, SUM_LEVEL)} {node.op} {_wrap(node.right, PRODUCT_LEVEL)}"
    if isinstance(node, Product):
        return f"{_wrap(node.left, PRODUCT_LEVEL)}*{_wrap(node.right, UNARY_LEVEL)}"
    if isinstance(node, Bracket):
        return f"[{to_text(node.left)}, {to_text(node.right)}]"
    if isinstance(node, Trace):
        return f"tr({to_text(node.operand)})"
    if isinstance(node, ApplyDerivation):
        return f"{node.name}({to_text(node.operand)})"
    if isinstance(node, ApplyDpp):
        return f"Dpp({to_text(node.operand)})"
    raise TypeError(f"not an expression node: {node!r}")
