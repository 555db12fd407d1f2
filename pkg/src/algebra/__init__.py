"""Free graded algebra: scalars, gradings, generators and Elements."""

from .scalars import (
    ONE, ZERO, I_UNIT, SCALAR_RING, PARAMETER_NAMES,
    Scalar, param, scalar, format_scalar, gaussian_parts, conjugate_scalar,
)
from .grading import (
    Grading, Generator, Alphabet, DEFAULT_BASE_GENERATORS, FIELD_NAMES,
    default_alphabet, derived_name,
)
from .element import (
    Element, Monomial, multiply, graded_commutator, grading_of, parity_of,
    conjugate, trace, normal_form, substitute, apply_dpp, canonical_trace,
    format_element, format_monomial, replace_generator,
)
from .sampling import make_rng, random_element, random_homogeneous, random_scalar

__all__ = [
    'ONE', 'ZERO', 'I_UNIT', 'SCALAR_RING', 'PARAMETER_NAMES',
    'Scalar', 'param', 'scalar', 'format_scalar', 'gaussian_parts', 'conjugate_scalar',
    'Grading', 'Generator', 'Alphabet', 'DEFAULT_BASE_GENERATORS', 'FIELD_NAMES',
    'default_alphabet', 'derived_name',
    'Element', 'Monomial', 'multiply', 'graded_commutator', 'grading_of', 'parity_of',
    'conjugate', 'trace', 'normal_form', 'substitute', 'apply_dpp', 'canonical_trace',
    'format_element', 'format_monomial', 'replace_generator',
    'make_rng', 'random_element', 'random_homogeneous', 'random_scalar',
]
