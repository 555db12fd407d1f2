"""Scalar combinations of derivations, brackets and compositions."""

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Tuple

from ..algebra.element import Element
from ..algebra.grading import Grading
from ..algebra.scalars import ONE, Scalar, ScalarLike, format_scalar, is_monomial_scalar, scalar
from ..exceptions import ConfigurationError, GradingError
from .derivation import Derivation

SINGLE = 'single'
BRACKET = 'bracket'
COMPOSE = 'compose'


@dataclass(frozen=True)
class OperatorTerm:
    coeff: Scalar
    kind: str
    names: Tuple[str, ...]

    def resolve(self, registry: Mapping[str, Derivation]) -> Tuple[Derivation, ...]:
        missing = [n for n in self.names if n not in registry]
        if missing:
            raise ConfigurationError(f"no derivation named {missing[0]!r} in this suite")
        return tuple(registry[n] for n in self.names)

    def grading(self, registry: Mapping[str, Derivation]) -> Grading:
        total = Grading()
        for d in self.resolve(registry):
            total = total + d.grading
        return total

    def evaluate(self, registry: Mapping[str, Derivation], e: Element) -> Element:
        ds = self.resolve(registry)
        if self.kind == SINGLE:
            result = ds[0].apply(e)
        elif self.kind == BRACKET:
            d1, d2 = ds
            sign = -1 if d1.parity and d2.parity else 1
            result = d1.apply(d2.apply(e)) - d2.apply(d1.apply(e)).scale(sign)
        else:
            result = e
            for d in reversed(ds):
                result = d.apply(result)
        return result.scale(self.coeff)

    def body(self) -> str:
        if self.kind == SINGLE:
            return self.names[0]
        if self.kind == BRACKET:
            return f"[{self.names[0]},{self.names[1]}]"
        return ".".join(self.names)


@dataclass(frozen=True)
class OperatorExpression:
    """Linear combination of operator terms; the empty sum is the zero operator."""

    terms: Tuple[OperatorTerm, ...] = ()

    @classmethod
    def zero(cls) -> 'OperatorExpression':
        return cls()

    @classmethod
    def single(cls, name: str, coeff: ScalarLike = 1) -> 'OperatorExpression':
        return cls((OperatorTerm(scalar(coeff), SINGLE, (name,)),))

    @classmethod
    def bracket(cls, first: str, second: str, coeff: ScalarLike = 1) -> 'OperatorExpression':
        return cls((OperatorTerm(scalar(coeff), BRACKET, (first, second)),))

    @classmethod
    def compose(cls, *names: str, coeff: ScalarLike = 1) -> 'OperatorExpression':
        if len(names) < 2:
            raise ConfigurationError("composition needs at least two derivations")
        return cls((OperatorTerm(scalar(coeff), COMPOSE, tuple(names)),))

    def __add__(self, other: 'OperatorExpression') -> 'OperatorExpression':
        return OperatorExpression(self.terms + other.terms)

    def __sub__(self, other: 'OperatorExpression') -> 'OperatorExpression':
        return self + other.scale(-ONE)

    def scale(self, factor: ScalarLike) -> 'OperatorExpression':
        factor = scalar(factor)
        return OperatorExpression(tuple(
            OperatorTerm(t.coeff * factor, t.kind, t.names) for t in self.terms))

    def is_zero(self) -> bool:
        return all(not t.coeff for t in self.terms)

    def names(self) -> Iterable[str]:
        for term in self.terms:
            yield from term.names

    def grading(self, registry: Mapping[str, Derivation]) -> Optional[Grading]:
        """Common grading of the nonzero terms, None for the zero operator."""
        gradings = [(t, t.grading(registry)) for t in self.terms if t.coeff]
        if not gradings:
            return None
        reference = gradings[0][1]
        if any(g != reference for _, g in gradings):
            raise GradingError("operator terms of different gradings",
                               [(t.body(), str(g)) for t, g in gradings])
        return reference

    def evaluate(self, registry: Mapping[str, Derivation], e: Element) -> Element:
        result = Element.zero(e.alphabet)
        for term in self.terms:
            if term.coeff:
                result = result + term.evaluate(registry, e)
        return result

    def __str__(self) -> str:
        pieces = []
        for term in self.terms:
            if not term.coeff:
                continue
            if term.coeff == ONE:
                pieces.append(term.body())
            elif term.coeff == -ONE:
                pieces.append(f"-{term.body()}")
            else:
                text = format_scalar(term.coeff)
                text = text if is_monomial_scalar(term.coeff) else f"({text})"
                pieces.append(f"{text}*{term.body()}")
        if not pieces:
            return "0"
        text = pieces[0]
        for piece in pieces[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text
