"""Deformed product on superspace polynomials."""

from .deformation import ENTRY_NAMES, DeformationTensor
from .star import MAX_ORDER, series_order, star, star_commutator
from .properties import commutator_table, verify_star_properties

__all__ = [
    'ENTRY_NAMES', 'DeformationTensor', 'MAX_ORDER', 'series_order', 'star',
    'star_commutator', 'commutator_table', 'verify_star_properties',
]
