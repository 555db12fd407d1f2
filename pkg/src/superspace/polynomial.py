"""
Polynomials on harmonic superspace.

A SuperPolynomial is a finite sum of Scalar * x-monomial * sorted Grassmann
product * harmonic monomial. The three x slots are the symmetric bispinor
components x^{11}, x^{12}, x^{22}; the Grassmann generators are ordered
th++1 < th++2 < th--1 < th--2 < th01 < th02, followed by the six odd
deformation constants A_a_mu (constants: no derivative acts on them);
harmonic monomials are kept modulo u+_2 u-_1 - u+_1 u-_2 = 1 by rewriting
every u+_1 u-_2 pair.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterator, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..algebra.sampling import random_scalar
from ..algebra.scalars import (
    I_UNIT, ONE, ZERO, Scalar, ScalarLike, conjugate_scalar, format_scalar,
    is_monomial_scalar, scalar,
)
from ..exceptions import BasisError, ConfigurationError, GradingError

logger = logging.getLogger(__name__)

CENTRAL = 'central'
ANALYTIC = 'analytic'
BASES = (CENTRAL, ANALYTIC)

X_NAMES = ('x0', 'x1', 'x2')
THETA_KINDS = ('++', '--', '0')
THETA_NAMES = ('th++1', 'th++2', 'th--1', 'th--2', 'th01', 'th02')
DEFORMATION_SYMBOLS = tuple(f"A_{a}_{mu}" for a in (1, 2) for mu in (0, 1, 2))
GRASSMANN_NAMES = THETA_NAMES + DEFORMATION_SYMBOLS
HARMONIC_NAMES = ('u+1', 'u+2', 'u-1', 'u-2')

# bispinor (a, b) -> x slot
X_SLOT = {(1, 1): 0, (1, 2): 1, (2, 1): 1, (2, 2): 2}


def theta_index(kind: str, a: int) -> int:
    """Position of theta^{kind a} in the Grassmann order."""
    if kind not in THETA_KINDS or a not in (1, 2):
        raise ConfigurationError(f"no Grassmann coordinate theta^{kind}{a}")
    return 2 * THETA_KINDS.index(kind) + (a - 1)


def deformation_index(a: int, mu: int) -> int:
    """Position of the odd constant A_a_mu in the Grassmann order."""
    if a not in (1, 2) or mu not in (0, 1, 2):
        raise ConfigurationError(f"no deformation constant A_{a}_{mu}")
    return len(THETA_NAMES) + 3 * (a - 1) + mu


def harmonic_index(sign: str, i: int) -> int:
    if sign not in ('+', '-') or i not in (1, 2):
        raise ConfigurationError(f"no harmonic u{sign}_{i}")
    return (0 if sign == '+' else 2) + (i - 1)


class Term(NamedTuple):
    x: Tuple[int, int, int]
    theta: Tuple[int, ...]
    harmonic: Tuple[int, int, int, int]

    @property
    def parity(self) -> int:
        return len(self.theta) % 2


UNIT = Term((0, 0, 0), (), (0, 0, 0, 0))


@lru_cache(maxsize=None)
def reduce_harmonic(h: Tuple[int, int, int, int]) -> Tuple[Tuple[Tuple[int, int, int, int], int], ...]:
    """Canonical combination for a harmonic exponent vector (no u+_1 u-_2 pair left)."""
    p1, p2, m1, m2 = h
    if p1 == 0 or m2 == 0:
        return ((h, 1),)
    combined: Dict[Tuple[int, int, int, int], int] = {}
    for key, c in reduce_harmonic((p1 - 1, p2 + 1, m1 + 1, m2 - 1)):
        combined[key] = combined.get(key, 0) + c
    for key, c in reduce_harmonic((p1 - 1, p2, m1, m2 - 1)):
        combined[key] = combined.get(key, 0) - c
    return tuple(sorted((k, c) for k, c in combined.items() if c))


def merge_thetas(left: Tuple[int, ...], right: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    """(sign, sorted product) of two sorted Grassmann products; sign 0 on a repeat."""
    if set(left) & set(right):
        return 0, ()
    inversions = sum(1 for i in left for j in right if i > j)
    return (-1) ** inversions, tuple(sorted(left + right))


def _merge_basis(first: Optional[str], second: Optional[str]) -> Optional[str]:
    if first is None:
        return second
    if second is None or first == second:
        return first
    raise BasisError(f"cannot combine {first}-basis and {second}-basis polynomials")


def _canonical(terms: Mapping[Term, Scalar]) -> Dict[Term, Scalar]:
    result: Dict[Term, Scalar] = {}
    for term, coeff in terms.items():
        if not coeff:
            continue
        for harmonic, c in reduce_harmonic(tuple(term.harmonic)):
            key = Term(tuple(term.x), tuple(term.theta), harmonic)
            result[key] = result.get(key, ZERO) + coeff * c
    return {k: v for k, v in result.items() if v}


class SuperPolynomial:
    """Immutable superspace polynomial with a coordinate-basis flag."""

    __slots__ = ('_terms', 'basis')

    def __init__(self, terms: Optional[Mapping[Term, Scalar]] = None,
                 basis: Optional[str] = CENTRAL):
        if basis is not None and basis not in BASES:
            raise BasisError(f"unknown basis '{basis}', expected one of {BASES}")
        object.__setattr__(self, '_terms', _canonical(terms or {}))
        object.__setattr__(self, 'basis', basis)

    def __setattr__(self, key, value):
        raise AttributeError("SuperPolynomial is immutable")

    def __reduce__(self):
        return (SuperPolynomial, (self._terms, self.basis))

    # constructors

    @classmethod
    def zero(cls, basis: Optional[str] = CENTRAL) -> 'SuperPolynomial':
        return cls({}, basis)

    @classmethod
    def constant(cls, value: ScalarLike, basis: Optional[str] = CENTRAL) -> 'SuperPolynomial':
        return cls({UNIT: scalar(value)}, basis)

    @classmethod
    def one(cls, basis: Optional[str] = CENTRAL) -> 'SuperPolynomial':
        return cls.constant(1, basis)

    @classmethod
    def x(cls, m: int, basis: Optional[str] = CENTRAL) -> 'SuperPolynomial':
        exponents = [0, 0, 0]
        exponents[m] = 1
        return cls({Term(tuple(exponents), (), (0, 0, 0, 0)): ONE}, basis)

    @classmethod
    def theta(cls, kind: str, a: int, basis: Optional[str] = CENTRAL) -> 'SuperPolynomial':
        return cls({Term((0, 0, 0), (theta_index(kind, a),), (0, 0, 0, 0)): ONE}, basis)

    @classmethod
    def deformation(cls, a: int, mu: int, basis: Optional[str] = CENTRAL) -> 'SuperPolynomial':
        return cls({Term((0, 0, 0), (deformation_index(a, mu),), (0, 0, 0, 0)): ONE}, basis)

    @classmethod
    def harmonic(cls, sign: str, i: int, basis: Optional[str] = CENTRAL) -> 'SuperPolynomial':
        exponents = [0, 0, 0, 0]
        exponents[harmonic_index(sign, i)] = 1
        return cls({Term((0, 0, 0), (), tuple(exponents)): ONE}, basis)

    @classmethod
    def monomial(cls, x: Sequence[int] = (0, 0, 0), theta: Sequence[int] = (),
                 harmonic: Sequence[int] = (0, 0, 0, 0), coeff: ScalarLike = 1,
                 basis: Optional[str] = CENTRAL) -> 'SuperPolynomial':
        """Single term; theta positions may come unsorted and are sorted with sign."""
        sign, ordered = merge_thetas((), ())
        for index in theta:
            s, ordered = merge_thetas(ordered, (index,))
            sign *= s
        if sign == 0:
            return cls.zero(basis)
        return cls({Term(tuple(x), ordered, tuple(harmonic)): scalar(coeff) * sign}, basis)

    # accessors

    @property
    def terms(self) -> Dict[Term, Scalar]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Tuple[Term, Scalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, term: Term) -> Scalar:
        return self._terms.get(term, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def with_basis(self, basis: Optional[str]) -> 'SuperPolynomial':
        """Same terms, relabelled basis (no change of variables)."""
        return SuperPolynomial(self._terms, basis)

    def parity(self) -> int:
        """Grassmann parity; zero counts as even."""
        parities = {term.parity for term in self._terms}
        if len(parities) > 1:
            raise GradingError("superspace polynomial of mixed Grassmann parity",
                               [(format_term(t, ONE), str(t.parity)) for t in sorted(self._terms)])
        return parities.pop() if parities else 0

    def x_degree(self) -> int:
        return max((sum(t.x) for t in self._terms), default=0)

    def harmonic_degree(self) -> int:
        return max((sum(t.harmonic) for t in self._terms), default=0)

    def contains_theta(self, kind: str) -> bool:
        indices = {theta_index(kind, 1), theta_index(kind, 2)}
        return any(indices & set(t.theta) for t in self._terms)

    def symbols(self) -> set:
        """Names of every coordinate that occurs."""
        names = set()
        for term in self._terms:
            names.update(X_NAMES[m] for m, e in enumerate(term.x) if e)
            names.update(GRASSMANN_NAMES[i] for i in term.theta)
            names.update(HARMONIC_NAMES[k] for k, e in enumerate(term.harmonic) if e)
        return names

    # arithmetic

    def _coerce(self, other) -> 'SuperPolynomial':
        if isinstance(other, SuperPolynomial):
            return other
        return SuperPolynomial.constant(other, self.basis)

    def __add__(self, other) -> 'SuperPolynomial':
        other = self._coerce(other)
        merged = dict(self._terms)
        for term, coeff in other._terms.items():
            merged[term] = merged.get(term, ZERO) + coeff
        return SuperPolynomial(merged, _merge_basis(self.basis, other.basis))

    __radd__ = __add__

    def __neg__(self) -> 'SuperPolynomial':
        return SuperPolynomial({t: -c for t, c in self._terms.items()}, self.basis)

    def __sub__(self, other) -> 'SuperPolynomial':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'SuperPolynomial':
        return self._coerce(other) - self

    def scale(self, factor: ScalarLike) -> 'SuperPolynomial':
        factor = scalar(factor)
        return SuperPolynomial({t: c * factor for t, c in self._terms.items()}, self.basis)

    def __mul__(self, other) -> 'SuperPolynomial':
        if not isinstance(other, SuperPolynomial):
            return self.scale(other)
        product: Dict[Term, Scalar] = {}
        for left, lc in self._terms.items():
            for right, rc in other._terms.items():
                sign, theta = merge_thetas(left.theta, right.theta)
                if sign == 0:
                    continue
                key = Term(tuple(a + b for a, b in zip(left.x, right.x)), theta,
                           tuple(a + b for a, b in zip(left.harmonic, right.harmonic)))
                product[key] = product.get(key, ZERO) + lc * rc * sign
        return SuperPolynomial(product, _merge_basis(self.basis, other.basis))

    def __rmul__(self, other) -> 'SuperPolynomial':
        return self.scale(other)

    def __pow__(self, n: int) -> 'SuperPolynomial':
        result = SuperPolynomial.one(self.basis)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(str(self))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"SuperPolynomial({self}, basis={self.basis})"


def format_term(term: Term, coeff: Scalar) -> str:
    factors = []
    for name, e in zip(X_NAMES, term.x):
        if e:
            factors.append(name if e == 1 else f"{name}^{e}")
    factors.extend(GRASSMANN_NAMES[i] for i in term.theta)
    for name, e in zip(HARMONIC_NAMES, term.harmonic):
        if e:
            factors.append(name if e == 1 else f"{name}^{e}")
    body = "*".join(factors)
    if not body:
        text = format_scalar(coeff)
        return text if is_monomial_scalar(coeff) else f"({text})"
    if coeff == ONE:
        return body
    if coeff == -ONE:
        return f"-{body}"
    text = format_scalar(coeff)
    if not is_monomial_scalar(coeff):
        text = f"({text})"
    return f"{text}*{body}"


def format_polynomial(f: SuperPolynomial) -> str:
    """Canonical text form with deterministic term order."""
    if f.is_zero():
        return "0"
    pieces = [format_term(t, c) for t, c in f.items()]
    text = pieces[0]
    for piece in pieces[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


def conjugate_polynomial(f: SuperPolynomial) -> SuperPolynomial:
    return SuperPolynomial({t: conjugate_scalar(c) for t, c in f.terms.items()}, f.basis)


# change of basis: x^{ab} = x_A^{ab} - i(theta^{++a} theta^{--b} + theta^{++b} theta^{--a})

def _basis_shift(m: int) -> SuperPolynomial:
    a, b = {0: (1, 1), 1: (1, 2), 2: (2, 2)}[m]
    pair = (SuperPolynomial.theta('++', a, None) * SuperPolynomial.theta('--', b, None)
            + SuperPolynomial.theta('++', b, None) * SuperPolynomial.theta('--', a, None))
    return pair.scale(-I_UNIT)


def _shift_coordinates(f: SuperPolynomial, sign: int, basis: str) -> SuperPolynomial:
    shifted = [SuperPolynomial.x(m, None) + _basis_shift(m).scale(sign) for m in range(3)]
    result = SuperPolynomial.zero(None)
    for term, coeff in f.terms.items():
        piece = SuperPolynomial({Term((0, 0, 0), term.theta, term.harmonic): coeff}, None)
        for m, e in enumerate(term.x):
            if e:
                piece = shifted[m] ** e * piece
        result = result + piece
    return result.with_basis(basis)


def to_analytic(f: SuperPolynomial) -> SuperPolynomial:
    """Rewrite a central-basis polynomial in analytic coordinates x_A."""
    if f.basis is None:
        raise BasisError("polynomial carries no basis flag")
    if f.basis == ANALYTIC:
        return f
    return _shift_coordinates(f, -1, ANALYTIC)


def to_central(f: SuperPolynomial) -> SuperPolynomial:
    """Rewrite an analytic-basis polynomial in central coordinates x."""
    if f.basis is None:
        raise BasisError("polynomial carries no basis flag")
    if f.basis == CENTRAL:
        return f
    return _shift_coordinates(f, 1, CENTRAL)


def random_superpolynomial(rng: np.random.Generator, max_x_degree: int = 3,
                           max_harmonic_degree: int = 2, max_terms: int = 4,
                           theta_kinds: Sequence[str] = THETA_KINDS,
                           parity: Optional[int] = None,
                           basis: Optional[str] = CENTRAL,
                           parameters: Sequence[str] = ()) -> SuperPolynomial:
    """
    Random polynomial for the property suites.

    Args:
        rng: seeded numpy Generator
        max_x_degree: bound on the total x degree of each term
        max_harmonic_degree: bound on the harmonic degree of each term
        max_terms: number of terms drawn (before collection)
        theta_kinds: Grassmann kinds allowed to occur
        parity: force every term to this Grassmann parity
        basis: basis flag of the result
        parameters: formal parameters that may appear in coefficients
    """
    allowed = [theta_index(k, a) for k in theta_kinds for a in (1, 2)]
    terms: Dict[Term, Scalar] = {}
    for _ in range(int(rng.integers(1, max_terms + 1))):
        x = [0, 0, 0]
        for _ in range(int(rng.integers(0, max_x_degree + 1))):
            x[int(rng.integers(3))] += 1
        harmonic = [0, 0, 0, 0]
        for _ in range(int(rng.integers(0, max_harmonic_degree + 1))):
            harmonic[int(rng.integers(4))] += 1
        theta = tuple(sorted(i for i in allowed if rng.random() < 0.4))
        if parity is not None and len(theta) % 2 != parity:
            if theta:
                theta = theta[1:]
            elif allowed:
                theta = (allowed[int(rng.integers(len(allowed)))],)
            else:
                continue
        key = Term(tuple(x), theta, tuple(harmonic))
        terms[key] = terms.get(key, ZERO) + random_scalar(rng, parameters)
    return SuperPolynomial(terms, basis)
