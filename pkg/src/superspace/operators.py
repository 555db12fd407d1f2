"""
Differential operators on SuperPolynomials.

Grassmann derivatives act from the left. The bispinor x-derivative is
symmetric: d_{11} = d/dx0, d_{22} = d/dx2, d_{12} = d_{21} = 1/2 d/dx1, so that
d_{ab} x^{cd} = 1/2 (delta_a^c delta_b^d + delta_a^d delta_b^c).
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional

from ..algebra.scalars import I_UNIT, Scalar, ZERO, scalar
from ..exceptions import ConfigurationError
from .polynomial import (
    X_SLOT, SuperPolynomial, Term, THETA_NAMES, conjugate_polynomial, theta_index, to_analytic,
)

logger = logging.getLogger(__name__)

HALF = scalar(Fraction(1, 2))
SPINOR = (1, 2)

HARMONIC_TAGS = ('d++', 'd--', 'd0')
COVARIANT_TAGS = ('D++', 'D--', 'D0', 'D++_a', 'D--_a', 'D0_a')
SUSY_TAGS = ('Q++_a', 'Q--_a', 'Q0_a')
_INDEXED = ('D++_a', 'D--_a', 'D0_a', 'Q++_a', 'Q--_a', 'Q0_a', 'dtheta', 'dx')

_TAG_PATTERN = re.compile(r"^(d\+\+|d--|d0|D\+\+|D--|D0|Q\+\+|Q--|Q0)(?:_([12]))?$")


@dataclass(frozen=True)
class OperatorTag:
    """One superspace operator; spinor-indexed tags carry their index."""

    name: str
    index: Optional[int] = None

    def __post_init__(self):
        known = HARMONIC_TAGS + COVARIANT_TAGS + SUSY_TAGS + ('dtheta', 'dx')
        if self.name not in known:
            raise ConfigurationError(f"unknown superspace operator '{self.name}'")
        if (self.name in _INDEXED) != (self.index is not None):
            raise ConfigurationError(f"operator '{self.name}' index mismatch: {self.index}")

    @classmethod
    def parse(cls, text: str) -> 'OperatorTag':
        """Read 'D++', 'D--_2', 'Q0_1', 'd0' and the like."""
        match = _TAG_PATTERN.match(text.strip())
        if not match:
            raise ConfigurationError(f"unknown superspace operator '{text}'")
        base, index = match.groups()
        if index is None:
            return cls(base)
        if base.startswith('d'):
            raise ConfigurationError(f"harmonic derivative '{base}' takes no index")
        return cls(f"{base}_a", int(index))

    @property
    def parity(self) -> int:
        return 1 if self.name in _INDEXED and self.name != 'dx' else 0

    def __str__(self) -> str:
        if self.name == 'dtheta':
            return f"d/d{THETA_NAMES[self.index]}"
        if self.name == 'dx':
            return f"d/dx{self.index}"
        if self.index is None:
            return self.name
        return self.name.replace('_a', f"_{self.index}")


def tag(text: str) -> OperatorTag:
    return OperatorTag.parse(text)


# primitive operators

def _from_terms(terms: Dict[Term, Scalar], basis) -> SuperPolynomial:
    return SuperPolynomial(terms, basis)


def _accumulate(terms: Dict[Term, Scalar], key: Term, value: Scalar):
    terms[key] = terms.get(key, ZERO) + value


def grassmann_derivative(f: SuperPolynomial, which) -> SuperPolynomial:
    """
    Left derivative d/dtheta.

    Args:
        f: polynomial
        which: Grassmann position (0-5) or a (kind, a) pair such as ('++', 1)
    """
    index = theta_index(*which) if isinstance(which, tuple) else which
    if index not in range(len(THETA_NAMES)):
        raise ConfigurationError(f"no Grassmann coordinate at position {index}")
    terms: Dict[Term, Scalar] = {}
    for term, coeff in f.terms.items():
        if index not in term.theta:
            continue
        position = term.theta.index(index)
        theta = term.theta[:position] + term.theta[position + 1:]
        _accumulate(terms, Term(term.x, theta, term.harmonic), coeff * (-1) ** position)
    return _from_terms(terms, f.basis)


def x_derivative(f: SuperPolynomial, m: int) -> SuperPolynomial:
    terms: Dict[Term, Scalar] = {}
    for term, coeff in f.terms.items():
        e = term.x[m]
        if e == 0:
            continue
        x = list(term.x)
        x[m] -= 1
        _accumulate(terms, Term(tuple(x), term.theta, term.harmonic), coeff * e)
    return _from_terms(terms, f.basis)


def bispinor_derivative(f: SuperPolynomial, a: int, b: int) -> SuperPolynomial:
    slot = X_SLOT[(a, b)]
    result = x_derivative(f, slot)
    return result.scale(HALF) if a != b else result


def theta_times(kind: str, a: int, f: SuperPolynomial) -> SuperPolynomial:
    """Left multiplication by theta^{kind a}."""
    return SuperPolynomial.theta(kind, a, f.basis) * f


def harmonic_derivative(f: SuperPolynomial, which: str) -> SuperPolynomial:
    """
    Harmonic vector fields d++ = u+_i d/du-_i, d-- = u-_i d/du+_i and the
    charge operator d0 = u+_i d/du+_i - u-_i d/du-_i.
    """
    if which not in HARMONIC_TAGS:
        raise ConfigurationError(f"unknown harmonic derivative '{which}'")
    terms: Dict[Term, Scalar] = {}
    for term, coeff in f.terms.items():
        p1, p2, m1, m2 = term.harmonic
        if which == 'd0':
            charge = p1 + p2 - m1 - m2
            if charge:
                _accumulate(terms, term, coeff * charge)
            continue
        if which == 'd++':
            moves = ((m1, (p1 + 1, p2, m1 - 1, m2)), (m2, (p1, p2 + 1, m1, m2 - 1)))
        else:
            moves = ((p1, (p1 - 1, p2, m1 + 1, m2)), (p2, (p1, p2 - 1, m1, m2 + 1)))
        for count, harmonic in moves:
            if count:
                _accumulate(terms, Term(term.x, term.theta, harmonic), coeff * count)
    return _from_terms(terms, f.basis)


# composite operators

def _theta_theta_dx(f: SuperPolynomial, first: str, second: str) -> SuperPolynomial:
    """sum_{a,b} theta^{first a} theta^{second b} d_{ab} f"""
    total = SuperPolynomial.zero(f.basis)
    for a in SPINOR:
        for b in SPINOR:
            total = total + theta_times(first, a, theta_times(second, b, bispinor_derivative(f, a, b)))
    return total


def _theta_dtheta(f: SuperPolynomial, first: str, second: str) -> SuperPolynomial:
    """sum_a theta^{first a} d/dtheta^{second a} f"""
    total = SuperPolynomial.zero(f.basis)
    for a in SPINOR:
        total = total + theta_times(first, a, grassmann_derivative(f, (second, a)))
    return total


def _theta_dx(f: SuperPolynomial, kind: str, a: int) -> SuperPolynomial:
    """sum_b theta^{kind b} d_{ab} f"""
    total = SuperPolynomial.zero(f.basis)
    for b in SPINOR:
        total = total + theta_times(kind, b, bispinor_derivative(f, a, b))
    return total


def _d_plus_plus(f: SuperPolynomial) -> SuperPolynomial:
    return (harmonic_derivative(f, 'd++')
            + _theta_theta_dx(f, '++', '0').scale(2 * I_UNIT)
            + _theta_dtheta(f, '++', '0')
            + _theta_dtheta(f, '0', '--').scale(2))


def _d_minus_minus(f: SuperPolynomial) -> SuperPolynomial:
    return (harmonic_derivative(f, 'd--')
            - _theta_theta_dx(f, '--', '0').scale(2 * I_UNIT)
            + _theta_dtheta(f, '--', '0')
            + _theta_dtheta(f, '0', '++').scale(2))


def _d_zero(f: SuperPolynomial) -> SuperPolynomial:
    return (harmonic_derivative(f, 'd0')
            + _theta_dtheta(f, '++', '++').scale(2)
            - _theta_dtheta(f, '--', '--').scale(2))


def _spinor_d_plus_plus(f: SuperPolynomial, a: int) -> SuperPolynomial:
    return grassmann_derivative(f, ('--', a))


def _spinor_d_minus_minus(f: SuperPolynomial, a: int) -> SuperPolynomial:
    return grassmann_derivative(f, ('++', a)) + _theta_dx(f, '--', a).scale(2 * I_UNIT)


def _spinor_d_zero(f: SuperPolynomial, a: int) -> SuperPolynomial:
    return grassmann_derivative(f, ('0', a)).scale(-HALF) + _theta_dx(f, '0', a).scale(I_UNIT)


def _q_plus_plus(f: SuperPolynomial, a: int) -> SuperPolynomial:
    return grassmann_derivative(f, ('--', a)) - _theta_dx(f, '++', a)


def _q_minus_minus(f: SuperPolynomial, a: int) -> SuperPolynomial:
    return grassmann_derivative(f, ('++', a)) - _theta_dx(f, '--', a)


def _q_zero(f: SuperPolynomial, a: int) -> SuperPolynomial:
    return grassmann_derivative(f, ('0', a)).scale(-HALF) - _theta_dx(f, '0', a)


_UNINDEXED: Dict[str, Callable[[SuperPolynomial], SuperPolynomial]] = {
    'd++': lambda f: harmonic_derivative(f, 'd++'),
    'd--': lambda f: harmonic_derivative(f, 'd--'),
    'd0': lambda f: harmonic_derivative(f, 'd0'),
    'D++': _d_plus_plus,
    'D--': _d_minus_minus,
    'D0': _d_zero,
}

_INDEXED_OPERATORS: Dict[str, Callable[[SuperPolynomial, int], SuperPolynomial]] = {
    'D++_a': _spinor_d_plus_plus,
    'D--_a': _spinor_d_minus_minus,
    'D0_a': _spinor_d_zero,
    'Q++_a': _q_plus_plus,
    'Q--_a': _q_minus_minus,
    'Q0_a': _q_zero,
    'dtheta': grassmann_derivative,
    'dx': x_derivative,
}


def apply_operator(f: SuperPolynomial, operator) -> SuperPolynomial:
    """Apply any OperatorTag (or its text form) to f."""
    operator = OperatorTag.parse(operator) if isinstance(operator, str) else operator
    if operator.index is None:
        return _UNINDEXED[operator.name](f)
    return _INDEXED_OPERATORS[operator.name](f, operator.index)


def covariant_derivative(f: SuperPolynomial, operator) -> SuperPolynomial:
    operator = OperatorTag.parse(operator) if isinstance(operator, str) else operator
    if operator.name not in COVARIANT_TAGS + HARMONIC_TAGS:
        raise ConfigurationError(f"'{operator}' is not a covariant derivative")
    return apply_operator(f, operator)


def susy_generator(f: SuperPolynomial, operator) -> SuperPolynomial:
    operator = OperatorTag.parse(operator) if isinstance(operator, str) else operator
    if operator.name not in SUSY_TAGS:
        raise ConfigurationError(f"'{operator}' is not a supersymmetry generator")
    return apply_operator(f, operator)


def graded_bracket(first, second, f: SuperPolynomial) -> SuperPolynomial:
    """[A, B} f = A(B f) - (-1)^{|A||B|} B(A f)."""
    first = OperatorTag.parse(first) if isinstance(first, str) else first
    second = OperatorTag.parse(second) if isinstance(second, str) else second
    forward = apply_operator(apply_operator(f, second), first)
    backward = apply_operator(apply_operator(f, first), second)
    if first.parity and second.parity:
        return forward + backward
    return forward - backward


def is_analytic(f: SuperPolynomial) -> bool:
    """
    True iff D++_a f = 0 for a = 1, 2 once f is written in analytic coordinates.

    Raises:
        BasisError: f carries no basis flag
    """
    analytic = to_analytic(f)
    return all(_spinor_d_plus_plus(analytic, a).is_zero() for a in SPINOR)


def tilde_conjugate(f: SuperPolynomial) -> SuperPolynomial:
    """
    Tilde conjugation: x and theta self-conjugate, u+-_1 -> u+-_2,
    u+-_2 -> -u+-_1, complex conjugate scalars, reversed Grassmann order.
    """
    terms: Dict[Term, Scalar] = {}
    for term, coeff in conjugate_polynomial(f).terms.items():
        n = len(term.theta)
        p1, p2, m1, m2 = term.harmonic
        sign = (-1) ** (n * (n - 1) // 2) * (-1) ** (p2 + m2)
        _accumulate(terms, Term(term.x, term.theta, (p2, p1, m2, m1)), coeff * sign)
    return _from_terms(terms, f.basis)
