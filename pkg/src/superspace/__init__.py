"""Concrete harmonic superspace: polynomials, derivatives, measures, conjugation."""

from .polynomial import (
    ANALYTIC, BASES, CENTRAL, HARMONIC_NAMES, THETA_NAMES, X_NAMES, SuperPolynomial, Term,
    format_polynomial, random_superpolynomial, reduce_harmonic, theta_index, to_analytic,
    to_central,
)
from .operators import (
    OperatorTag, apply_operator, bispinor_derivative, covariant_derivative, graded_bracket,
    grassmann_derivative, harmonic_derivative, is_analytic, susy_generator, tag,
    tilde_conjugate, x_derivative,
)
from .integration import FULL, ANALYTIC_MEASURE, berezin_integrate, set_theta_zero, top_component
from .properties import algebra_checks, measure_checks, run_check, verify_superspace

__all__ = [
    'ANALYTIC', 'BASES', 'CENTRAL', 'HARMONIC_NAMES', 'THETA_NAMES', 'X_NAMES',
    'SuperPolynomial', 'Term', 'format_polynomial', 'random_superpolynomial',
    'reduce_harmonic', 'theta_index', 'to_analytic', 'to_central',
    'OperatorTag', 'apply_operator', 'bispinor_derivative', 'covariant_derivative',
    'graded_bracket', 'grassmann_derivative', 'harmonic_derivative', 'is_analytic',
    'susy_generator', 'tag', 'tilde_conjugate', 'x_derivative',
    'FULL', 'ANALYTIC_MEASURE', 'berezin_integrate', 'set_theta_zero', 'top_component',
    'algebra_checks', 'measure_checks', 'run_check', 'verify_superspace',
]
