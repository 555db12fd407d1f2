"""
Star product induced by [theta^{++a}, x^mu] = A^{a mu}.

With Y_mu = A^{a mu} d/dtheta^{++a} (an even derivation, A being odd) and
X_mu = d/dx^mu, the product is m . exp(B) on f (x) g where
B = 1/2 (Y_mu (x) X_mu - X_mu (x) Y_mu). Every factor of B is even, so no
Koszul signs arise. The series stops once B^n vanishes; each order consumes a
theta++ and the two factors hold at most two each, so n never exceeds four.
"""

import logging
from fractions import Fraction
from typing import Dict, Optional, Tuple

from ..algebra.scalars import ZERO, Scalar, scalar
from ..exceptions import EngineError
from ..superspace.polynomial import (
    SuperPolynomial, Term, deformation_index, merge_thetas, theta_index,
)
from .deformation import DeformationTensor

logger = logging.getLogger(__name__)

MAX_ORDER = 4
HALF = scalar(Fraction(1, 2))

BiTerms = Dict[Tuple[Term, Term], Scalar]


def _y(term: Term, a: int, mu: int) -> Optional[Tuple[int, Term]]:
    """A_a_mu d/dtheta^{++a} on one term, as (sign, term)."""
    index = theta_index('++', a)
    if index not in term.theta:
        return None
    position = term.theta.index(index)
    rest = term.theta[:position] + term.theta[position + 1:]
    sign, theta = merge_thetas((deformation_index(a, mu),), rest)
    if sign == 0:
        return None
    return sign * (-1) ** position, Term(term.x, theta, term.harmonic)


def _x(term: Term, mu: int) -> Optional[Tuple[int, Term]]:
    e = term.x[mu]
    if e == 0:
        return None
    x = list(term.x)
    x[mu] -= 1
    return e, Term(tuple(x), term.theta, term.harmonic)


def _bidifferential(bi: BiTerms, A: DeformationTensor, symmetric: bool) -> BiTerms:
    first, second = (-HALF, -HALF) if symmetric else (HALF, -HALF)
    result: BiTerms = {}
    for (left, right), coeff in bi.items():
        for a, mu, value in A.nonzero():
            for factor, (dl, dr) in ((first, (_y(left, a, mu), _x(right, mu))),
                                     (second, (_x(left, mu), _y(right, a, mu)))):
                if dl and dr:
                    key = (dl[1], dr[1])
                    result[key] = result.get(key, ZERO) + coeff * value * factor * dl[0] * dr[0]
    return {k: v for k, v in result.items() if v}


def _tensor(f: SuperPolynomial, g: SuperPolynomial) -> BiTerms:
    return {(l, r): lc * rc for l, lc in f.terms.items() for r, rc in g.terms.items()}


def _merge(bi: BiTerms, basis) -> SuperPolynomial:
    total = SuperPolynomial.zero(basis)
    for (left, right), coeff in bi.items():
        total = total + SuperPolynomial({left: coeff}, basis) * SuperPolynomial({right: scalar(1)}, basis)
    return total


def series_order(f: SuperPolynomial, g: SuperPolynomial, A: DeformationTensor,
                 symmetric: bool = False) -> int:
    """Highest n with B^n (f (x) g) nonzero."""
    bi = _tensor(f, g)
    order = 0
    while True:
        bi = _bidifferential(bi, A, symmetric)
        if not bi:
            return order
        order += 1
        if order > MAX_ORDER:
            raise EngineError("star product series did not terminate")


def star(f: SuperPolynomial, g: SuperPolynomial, A: DeformationTensor,
         symmetric: bool = False) -> SuperPolynomial:
    """
    Star product of two superspace polynomials.

    Args:
        f: left factor
        g: right factor
        A: deformation tensor
        symmetric: use the literal exponent -1/2 A (d2_a d1_mu + d1_a d2_mu),
            whose theta/x commutator vanishes

    Returns:
        SuperPolynomial; the pointwise product when A is zero
    """
    basis = f.basis if f.basis is not None else g.basis
    bi = _tensor(f, g)
    total = f * g
    order = 0
    while True:
        order += 1
        bi = _bidifferential(bi, A, symmetric)
        if not bi:
            break
        if order > MAX_ORDER:
            raise EngineError("star product series did not terminate")
        bi = {k: v * scalar(Fraction(1, order)) for k, v in bi.items()}
        total = total + _merge(bi, basis)
    return total


def star_commutator(f: SuperPolynomial, g: SuperPolynomial, A: DeformationTensor,
                    symmetric: bool = False) -> SuperPolynomial:
    """
    Graded star commutator f*g - (-1)^{|f||g|} g*f.

    Raises:
        GradingError: f or g mixes Grassmann parities
    """
    sign = (-1) ** (f.parity() * g.parity())
    return star(f, g, A, symmetric) - star(g, f, A, symmetric).scale(sign)
