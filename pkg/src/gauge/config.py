"""Gauge choice and its parameters."""

from dataclasses import dataclass
from typing import Dict, Optional

from ..algebra.scalars import ZERO, Scalar, ScalarLike, format_scalar, param, scalar
from ..derivations.tables import normalize_convention, normalize_gauge
from ..exceptions import ConfigurationError


@dataclass(frozen=True)
class GaugeConfig:
    """
    gauge in {landau, linear, curci_ferrari, massive_cf}; alpha is forced to 0
    in Landau gauge and m2 is 0 outside massive Curci-Ferrari.
    """

    gauge: str
    convention: str
    alpha: Scalar
    m2: Scalar

    def __post_init__(self):
        object.__setattr__(self, 'gauge', normalize_gauge(self.gauge))
        object.__setattr__(self, 'convention', normalize_convention(self.convention))
        if self.gauge == 'landau' and self.alpha:
            raise ConfigurationError("Landau gauge requires alpha = 0")
        if self.gauge != 'massive_cf' and self.m2:
            raise ConfigurationError(f"m2 must be 0 in {self.gauge} gauge")

    @classmethod
    def from_names(cls, gauge: str, convention: str = 'leibniz_consistent',
                   alpha: Optional[ScalarLike] = None,
                   m2: Optional[ScalarLike] = None) -> 'GaugeConfig':
        """Validated config; unset parameters stay symbolic where they are allowed."""
        gauge = normalize_gauge(gauge)
        if alpha is None:
            alpha_value = ZERO if gauge == 'landau' else param('alpha')
        else:
            alpha_value = scalar(alpha)
        if m2 is None:
            m2_value = param('m2') if gauge == 'massive_cf' else ZERO
        else:
            m2_value = scalar(m2)
        return cls(gauge, convention, alpha_value, m2_value)

    @property
    def is_massive(self) -> bool:
        return self.gauge == 'massive_cf'

    def assignments(self) -> Dict[str, Scalar]:
        """Parameter values to substitute into rule tables and bundles."""
        values = {}
        if self.alpha != param('alpha'):
            values['alpha'] = self.alpha
        if self.m2 != param('m2'):
            values['m2'] = self.m2
        return values

    def to_dict(self) -> Dict[str, str]:
        return {
            'gauge': self.gauge,
            'convention': self.convention,
            'alpha': format_scalar(self.alpha),
            'm2': format_scalar(self.m2),
        }
