"""
Gauge-fixing apparatus in the free algebra: matter covariant derivatives,
the gauge-fixing fermions Phi and Phibar, L_gf, L_gh, Z and Y.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

from ..algebra.element import Element, apply_dpp, format_element, substitute, trace
from ..algebra.grading import Alphabet, default_alphabet
from ..algebra.scalars import I_UNIT, param, scalar
from ..exceptions import ConfigurationError
from .config import GaugeConfig

logger = logging.getLogger(__name__)

HALF = scalar('1/2')


def _g(alphabet: Alphabet, name: str) -> Element:
    return Element.generator(alphabet, name)


def matter_covariant_derivative(field: str, alphabet: Optional[Alphabet] = None) -> Element:
    """
    nabla++ on matter.

    nabla++ q = Dpp(q) + V_L q - q V_R
    nabla++ qbar = Dpp(qbar) - qbar V_L + V_R qbar
    """
    alphabet = alphabet or default_alphabet()
    q = _g(alphabet, field)
    v_l, v_r = _g(alphabet, 'V_L'), _g(alphabet, 'V_R')
    if field == 'q':
        return apply_dpp(q) + v_l * q - q * v_r
    if field == 'qbar':
        return apply_dpp(q) - q * v_l + v_r * q
    raise ConfigurationError(f"no matter covariant derivative for '{field}'")


def ghost_covariant_derivative(sector: str, alphabet: Alphabet) -> Element:
    """nabla++ c = -Dpp(c) - [V, c]."""
    c, v = _g(alphabet, f'c_{sector}'), _g(alphabet, f'V_{sector}')
    return -apply_dpp(c) - (v * c - c * v)


@dataclass(frozen=True)
class GaugeFixingBundle:
    """Phi, Phibar, L_gf, L_gh, Z and Y for one gauge configuration."""

    config: GaugeConfig
    phi: Element
    phibar: Element
    l_gf: Element
    l_gh: Element
    z: Element
    y: Element

    @property
    def l_g(self) -> Element:
        return self.l_gf + self.l_gh

    def members(self) -> Dict[str, Element]:
        return {
            'Phi': self.phi, 'Phibar': self.phibar,
            'L_gf': self.l_gf, 'L_gh': self.l_gh,
            'Z': self.z, 'Y': self.y,
        }

    def to_dict(self) -> Dict[str, str]:
        return {name: format_element(e) for name, e in self.members().items()}


def _gauge_fermions(config: GaugeConfig, alphabet: Alphabet):
    alpha = param('alpha')
    half_alpha = alpha * HALF
    dv = {s: apply_dpp(_g(alphabet, f'V_{s}')) for s in ('L', 'R')}
    b = {s: _g(alphabet, f'b_{s}') for s in ('L', 'R')}
    c = {s: _g(alphabet, f'c_{s}') for s in ('L', 'R')}
    cbar = {s: _g(alphabet, f'cbar_{s}') for s in ('L', 'R')}
    if config.convention == 'verbatim':
        phi = c['L'] * (dv['L'] - b['L'].scale(I_UNIT * half_alpha)) \
            - c['R'] * (dv['R'] - b['R'].scale(I_UNIT * half_alpha))
        phibar = cbar['L'] * (dv['L'] - b['L'].scale(half_alpha)) \
            - cbar['R'] * (dv['R'] - b['R'].scale(half_alpha))
    else:
        # s tr(Phi) reproduces L_g exactly; antighost carries the s-exact form
        phi = cbar['L'] * (dv['L'] + b['L'].scale(half_alpha)) \
            - cbar['R'] * (dv['R'] - b['R'].scale(half_alpha))
        phibar = c['L'] * (dv['L'] + b['L'].scale(half_alpha)) \
            - c['R'] * (dv['R'] - b['R'].scale(half_alpha))
    return phi, phibar


def build_gauge_fixing(config: GaugeConfig, alphabet: Optional[Alphabet] = None) -> GaugeFixingBundle:
    """
    Construct the gauge-fixing bundle.

    Args:
        config: gauge, convention and parameters
        alphabet: generator table

    Returns:
        GaugeFixingBundle with the parameter values of the config substituted
    """
    alphabet = alphabet or default_alphabet()
    alpha = param('alpha')
    half_alpha = alpha * HALF
    g = lambda name: _g(alphabet, name)

    phi, phibar = _gauge_fermions(config, alphabet)
    l_gf = trace(
        g('b_L') * apply_dpp(g('V_L')) + (g('b_L') * g('b_L')).scale(half_alpha)
        - g('b_R') * apply_dpp(g('V_R')) + (g('b_R') * g('b_R')).scale(half_alpha)
    )
    # nabla++ in both sectors
    l_gh = trace(
        g('cbar_L') * apply_dpp(ghost_covariant_derivative('L', alphabet))
        - g('cbar_R') * apply_dpp(ghost_covariant_derivative('R', alphabet))
    )
    z = trace(g('V_L') * g('V_L')) - trace(g('V_R') * g('V_R'))
    y = trace(g('cbar_R') * g('c_R')).scale(alpha) - trace(g('cbar_L') * g('c_L')).scale(alpha)

    assignments = config.assignments()
    members = [substitute(e, assignments) for e in (phi, phibar, l_gf, l_gh, z, y)]
    logger.debug(f"Built gauge-fixing bundle for {config.gauge} / {config.convention}")
    return GaugeFixingBundle(config, *members)
