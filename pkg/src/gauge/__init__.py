"""Gauge-fixing apparatus and its checks."""

from .config import GaugeConfig
from .bundle import (
    GaugeFixingBundle, build_gauge_fixing, ghost_covariant_derivative, matter_covariant_derivative,
)
from .total_derivative import Decomposition, candidate_words, decompose_total_derivative
from .checks import (
    check_bundle_gradings, check_covariance, check_double_variation, check_exactness,
    check_lagrangian_exactness, verify_gauge_fixing,
)

__all__ = [
    'GaugeConfig', 'GaugeFixingBundle', 'build_gauge_fixing', 'ghost_covariant_derivative',
    'matter_covariant_derivative', 'Decomposition', 'candidate_words',
    'decompose_total_derivative', 'check_bundle_gradings', 'check_covariance',
    'check_double_variation', 'check_exactness', 'check_lagrangian_exactness',
    'verify_gauge_fixing',
]
