"""
Exact scalars.

A Scalar is a polynomial over the Gaussian rationals QQ(i) in the formal
parameters alpha, k and m2. sympy's sparse
polynomial ring gives the canonical form: the zero polynomial is the empty
map and i*i = -1 is applied by the ground domain.
"""

from fractions import Fraction
from typing import Dict, Mapping, Tuple, Union

import sympy
from sympy.polys.domains import QQ_I
from sympy.polys.rings import PolyElement, ring

from ..exceptions import ConfigurationError
from ..utils.constants import PARAMETERS

PARAMETER_NAMES = tuple(PARAMETERS)

_ring_and_gens = ring(",".join(PARAMETER_NAMES), QQ_I)
SCALAR_RING = _ring_and_gens[0]
_GENERATORS: Dict[str, PolyElement] = dict(zip(PARAMETER_NAMES, _ring_and_gens[1:]))

Scalar = PolyElement
ScalarLike = Union[PolyElement, int, Fraction, str]

ZERO = SCALAR_RING.zero
ONE = SCALAR_RING.one
I_UNIT = SCALAR_RING(sympy.I)


def param(name: str) -> Scalar:
    """Ring generator for a formal parameter name."""
    try:
        return _GENERATORS[name]
    except KeyError:
        raise ConfigurationError(f"unknown scalar parameter '{name}'") from None


def scalar(value: ScalarLike) -> Scalar:
    """Coerce ints, Fractions, parameter names and Scalars to a Scalar."""
    if isinstance(value, PolyElement):
        if value.ring != SCALAR_RING:
            raise ConfigurationError("scalar from a foreign polynomial ring")
        return value
    if isinstance(value, bool):
        raise ConfigurationError("booleans are not scalars")
    if isinstance(value, int):
        return SCALAR_RING(value)
    if isinstance(value, Fraction):
        return SCALAR_RING(sympy.Rational(value.numerator, value.denominator))
    if isinstance(value, str):
        if value == 'i':
            return I_UNIT
        if value in _GENERATORS:
            return _GENERATORS[value]
        try:
            return scalar(Fraction(value))
        except ValueError:
            raise ConfigurationError(f"cannot read scalar '{value}'") from None
    raise ConfigurationError(f"cannot use {type(value).__name__} as a scalar")


def gaussian_parts(coefficient) -> Tuple[Fraction, Fraction]:
    """(real, imaginary) parts of a QQ_I ground element as Fractions."""
    def to_fraction(q) -> Fraction:
        return Fraction(int(q.numerator), int(q.denominator))
    return to_fraction(coefficient.x), to_fraction(coefficient.y)


def conjugate_scalar(value: Scalar) -> Scalar:
    """Complex conjugation i -> -i; parameters are real."""
    return SCALAR_RING.from_dict({
        monom: type(coeff)(coeff.x, -coeff.y) for monom, coeff in value.items()
    })


def substitute(value: Scalar, assignments: Mapping[str, ScalarLike]) -> Scalar:
    """Evaluate named parameters, keeping the result in the scalar ring."""
    if not assignments:
        return value
    replacements = {PARAMETER_NAMES.index(name): scalar(v) for name, v in assignments.items()
                    if name in _GENERATORS}
    unknown = set(assignments) - set(_GENERATORS)
    if unknown:
        raise ConfigurationError(f"unknown scalar parameters: {sorted(unknown)}")
    result = ZERO
    for monom, coeff in value.items():
        term = SCALAR_RING.ground_new(coeff)
        for index, exponent in enumerate(monom):
            if exponent == 0:
                continue
            base = replacements.get(index, _GENERATORS[PARAMETER_NAMES[index]])
            term = term * base ** exponent
        result = result + term
    return result


def has_factor(value: Scalar, name: str) -> bool:
    """True iff every monomial of a nonzero scalar contains the parameter."""
    index = PARAMETER_NAMES.index(name)
    return bool(value) and all(monom[index] > 0 for monom in value.keys())


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _format_coefficient(coefficient) -> str:
    real, imag = gaussian_parts(coefficient)
    if imag == 0:
        return _format_rational(real)
    if imag == 1:
        imag_text = "i"
    elif imag == -1:
        imag_text = "-i"
    else:
        imag_text = f"{_format_rational(imag)}*i"
    if real == 0:
        return imag_text
    sign = " - " if imag < 0 else " + "
    return f"({_format_rational(real)}{sign}{imag_text.lstrip('-')})"


def _format_monomial(monom: Tuple[int, ...]) -> str:
    factors = []
    for name, exponent in zip(PARAMETER_NAMES, monom):
        factors.extend([name] * exponent)
    return "*".join(factors)


def format_term(coefficient, monom: Tuple[int, ...]) -> str:
    """One scalar term; parameters repeated instead of raised to powers."""
    coeff_text = _format_coefficient(coefficient)
    monomial_text = _format_monomial(monom)
    if not monomial_text:
        return coeff_text
    if coeff_text == "1":
        return monomial_text
    if coeff_text == "-1":
        return f"-{monomial_text}"
    return f"{coeff_text}*{monomial_text}"


def format_scalar(value: Scalar) -> str:
    """Canonical text that the expression language reads back."""
    if not value:
        return "0"
    pieces = [format_term(coeff, monom) for monom, coeff in sorted(value.items(), reverse=True)]
    text = pieces[0]
    for piece in pieces[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


def is_monomial_scalar(value: Scalar) -> bool:
    """Single term, so it prints without surrounding parentheses."""
    return len(value) <= 1
