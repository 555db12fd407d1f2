"""Berezin integration as Grassmann differentiation followed by theta = 0."""

import logging
from fractions import Fraction
from typing import Sequence

from ..algebra.scalars import scalar
from ..exceptions import ConfigurationError
from .operators import SPINOR, apply_operator, OperatorTag
from .polynomial import THETA_KINDS, SuperPolynomial, Term, theta_index

logger = logging.getLogger(__name__)

FULL = 'full'
ANALYTIC_MEASURE = 'analytic'
MEASURES = (FULL, ANALYTIC_MEASURE)

FULL_NORMALIZATION = scalar(Fraction(-1, 16))
ANALYTIC_NORMALIZATION = scalar(Fraction(1, 4))


def spinor_square(f: SuperPolynomial, name: str) -> SuperPolynomial:
    """D^a D_a f = 2 D_2 D_1 f with eps^{12} = 1."""
    first = apply_operator(f, OperatorTag(name, SPINOR[0]))
    return apply_operator(first, OperatorTag(name, SPINOR[1])).scale(2)


def set_theta_zero(f: SuperPolynomial, kinds: Sequence[str] = THETA_KINDS) -> SuperPolynomial:
    """Drop every term containing a Grassmann coordinate of the given kinds."""
    dropped = {theta_index(kind, a) for kind in kinds for a in SPINOR}
    kept = {t: c for t, c in f.terms.items() if not dropped & set(t.theta)}
    return SuperPolynomial(kept, f.basis)


def berezin_integrate(f: SuperPolynomial, measure: str = FULL) -> SuperPolynomial:
    """
    Grassmann part of the superspace measures.

    full:     -1/16 (D++)^2 (D--)^2 (D0)^2 f at theta = 0
    analytic:   1/4 (D--)^2 (D0)^2 f at theta = 0

    The x and harmonic integrals are not performed; the density is returned.

    Args:
        f: integrand
        measure: 'full' or 'analytic'

    Returns:
        SuperPolynomial free of Grassmann coordinates
    """
    if measure not in MEASURES:
        raise ConfigurationError(f"unknown measure '{measure}', expected one of {MEASURES}")
    density = spinor_square(f, 'D0_a')
    density = spinor_square(density, 'D--_a')
    if measure == FULL:
        density = spinor_square(density, 'D++_a')
        return set_theta_zero(density).scale(FULL_NORMALIZATION)
    return set_theta_zero(density).scale(ANALYTIC_NORMALIZATION)


def top_component(f: SuperPolynomial) -> SuperPolynomial:
    """Coefficient of the full product of the six Grassmann coordinates."""
    top = tuple(range(6))
    kept = {Term(t.x, (), t.harmonic): c for t, c in f.terms.items() if t.theta == top}
    return SuperPolynomial(kept, f.basis)
