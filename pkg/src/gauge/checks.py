"""Covariance, BRST-exactness and double-variation checks."""

import logging
from typing import Dict, Mapping, Optional

from ..algebra.element import Element, format_element, grading_of, replace_generator, trace
from ..algebra.grading import Alphabet, default_alphabet
from ..algebra.scalars import I_UNIT, scalar
from ..derivations.derivation import Derivation
from ..derivations.relations import FAIL, INCONCLUSIVE, PASS, RelationReport
from ..derivations.tables import (
    brst_registry, gauge_variation_derivation, substitute_gauge_parameters,
)
from ..exceptions import GradingError
from ..reporting.report import VerificationReport
from ..utils.constants import EXACTNESS_WORD_LENGTH
from .bundle import GaugeFixingBundle, build_gauge_fixing, matter_covariant_derivative
from .config import GaugeConfig
from .total_derivative import decompose_total_derivative

logger = logging.getLogger(__name__)

HALF = scalar('1/2')

# alpha/2 b b carries harmonic charge 0 next to charge +4 words
HCHARGE_WAIVED = ('Phi', 'Phibar', 'L_gf')


def check_covariance(convention: str = 'leibniz_consistent',
                     params: Optional[Mapping[str, Element]] = None,
                     variation: Optional[Derivation] = None,
                     alphabet: Optional[Alphabet] = None) -> RelationReport:
    """
    delta(nabla++ q) against the matter rule applied to nabla++ q.

    The target for q is delta(q) with q replaced by nabla++ q (and the same for
    qbar), so the check reads off whatever sign pattern the matter rules use.

    Args:
        convention: selects the built-in gauge variation table
        params: optional replacements for Lam_L / Lam_R
        variation: explicit variation derivation, overriding the convention
        alphabet: generator table

    Returns:
        RelationReport over q and qbar
    """
    alphabet = alphabet or (variation.alphabet if variation else default_alphabet())
    delta = variation or gauge_variation_derivation(convention, alphabet)
    if params:
        rules = {g: substitute_gauge_parameters(image, params) for g, image in delta.rules.items()}
        delta = delta.with_rules(rules)

    failures = []
    for field in ('q', 'qbar'):
        nabla = matter_covariant_derivative(field, alphabet)
        target = replace_generator(delta.image(field), field, nabla)
        residual = delta.apply(nabla) - target
        if residual:
            failures.append((field, residual))
    status = FAIL if failures else PASS
    if failures:
        logger.warning(f"Gauge covariance fails on {[f for f, _ in failures]}")
    return RelationReport(
        name="delta(nabla++ matter) = delta(matter) at matter -> nabla++ matter",
        status=status, failures=failures, checked=['q', 'qbar'],
    )


def _registry(config: GaugeConfig, alphabet: Alphabet) -> Dict[str, Derivation]:
    registry = brst_registry(config.gauge, config.convention, alphabet)
    assignments = config.assignments()
    if assignments:
        registry = {name: d.specialize(assignments) for name, d in registry.items()}
    return registry


def _exactness_report(name: str, difference: Element, max_length: int) -> RelationReport:
    decomposition = decompose_total_derivative(difference, max_length)
    if decomposition.solvable:
        witness = decomposition.witness
        text = "0" if witness.is_zero() else f"Dpp({format_element(witness)})"
        return RelationReport(name=name, status=PASS, checked=['Lagrangian'], witness=text)
    status = INCONCLUSIVE if decomposition.inconclusive else FAIL
    if status == FAIL:
        logger.warning(f"{name}: {decomposition.reason}")
    return RelationReport(name=name, status=status, failures=[('Lagrangian', difference)],
                          checked=['Lagrangian'], note=decomposition.reason)


def check_exactness(config: GaugeConfig, bundle: Optional[GaugeFixingBundle] = None,
                    registry: Optional[Mapping[str, Derivation]] = None,
                    alphabet: Optional[Alphabet] = None,
                    max_length: int = EXACTNESS_WORD_LENGTH) -> RelationReport:
    """s tr(Phi) = -sbar tr(Phibar) modulo trace cyclicity and total Dpp derivatives."""
    alphabet = alphabet or default_alphabet()
    bundle = bundle or build_gauge_fixing(config, alphabet)
    registry = registry or _registry(config, alphabet)
    s, sbar = registry['s'], registry['sbar']
    difference = s.apply(trace(bundle.phi)) + sbar.apply(trace(bundle.phibar))
    return _exactness_report("s tr(Phi) = -sbar tr(Phibar) mod Dpp", difference, max_length)


def check_lagrangian_exactness(config: GaugeConfig, bundle: Optional[GaugeFixingBundle] = None,
                               registry: Optional[Mapping[str, Derivation]] = None,
                               alphabet: Optional[Alphabet] = None,
                               max_length: int = EXACTNESS_WORD_LENGTH) -> Dict[str, RelationReport]:
    """L_g = s tr(Phi) and L_g = -sbar tr(Phibar), each modulo total Dpp derivatives."""
    alphabet = alphabet or default_alphabet()
    bundle = bundle or build_gauge_fixing(config, alphabet)
    registry = registry or _registry(config, alphabet)
    s, sbar = registry['s'], registry['sbar']
    return {
        'brst': _exactness_report("L_g = s tr(Phi) mod Dpp",
                                  s.apply(trace(bundle.phi)) - bundle.l_g, max_length),
        'anti_brst': _exactness_report("L_g = -sbar tr(Phibar) mod Dpp",
                                       -sbar.apply(trace(bundle.phibar)) - bundle.l_g, max_length),
    }


def check_double_variation(config: GaugeConfig, bundle: Optional[GaugeFixingBundle] = None,
                           registry: Optional[Mapping[str, Derivation]] = None,
                           alphabet: Optional[Alphabet] = None) -> RelationReport:
    """
    Compare the two printed orderings of the double BRST variation.

    landau/linear: -1/2 s sbar tr(Z) = 1/2 sbar s tr(Z)
    curci_ferrari: 1/2 s sbar tr(Z + Y) = -1/2 sbar s tr(Z + Y)
    massive_cf: 1/2 (s sbar - i m2) tr(Z + Y) = -1/2 (sbar s + i m2) tr(Z + Y)
    """
    alphabet = alphabet or default_alphabet()
    bundle = bundle or build_gauge_fixing(config, alphabet)
    registry = registry or _registry(config, alphabet)
    s, sbar = registry['s'], registry['sbar']

    if config.gauge in ('landau', 'linear'):
        t = bundle.z
        lhs = s.apply(sbar.apply(t)).scale(-HALF)
        rhs = sbar.apply(s.apply(t)).scale(HALF)
        name = "-1/2 s.sbar tr(Z) = 1/2 sbar.s tr(Z)"
    else:
        t = bundle.z + bundle.y
        lhs = s.apply(sbar.apply(t)).scale(HALF)
        rhs = sbar.apply(s.apply(t)).scale(-HALF)
        name = "1/2 s.sbar tr(Z+Y) = -1/2 sbar.s tr(Z+Y)"
        if config.m2:
            mass = t.scale(I_UNIT * config.m2 * HALF)
            lhs = lhs - mass
            rhs = rhs - mass
            name = "1/2 (s.sbar - i*m2) tr(Z+Y) = -1/2 (sbar.s + i*m2) tr(Z+Y)"

    residual = lhs - rhs
    if residual:
        logger.warning(f"{name} fails")
        return RelationReport(name=name, status=FAIL, failures=[('Lagrangian', residual)],
                              checked=['Lagrangian'])
    return RelationReport(name=name, status=PASS, checked=['Lagrangian'])


def _expected_ghosts(config: GaugeConfig) -> Dict[str, int]:
    phi, phibar = (1, -1) if config.convention == 'verbatim' else (-1, 1)
    return {'Phi': phi, 'Phibar': phibar, 'L_gf': 0, 'L_gh': 0, 'Z': 0, 'Y': 0}


def check_bundle_gradings(bundle: GaugeFixingBundle) -> RelationReport:
    """Each member homogeneous with its expected ghost number."""
    failures = []
    expected = _expected_ghosts(bundle.config)
    for name, element in bundle.members().items():
        if element.is_zero():
            continue
        try:
            grading = grading_of(element, waive_hcharge=name in HCHARGE_WAIVED)
        except GradingError as e:
            logger.warning(f"{name} is inhomogeneous: {e}")
            failures.append((name, element))
            continue
        if grading.ghost != expected[name]:
            failures.append((name, element))
    return RelationReport(name="bundle gradings", status=FAIL if failures else PASS,
                          failures=failures, checked=list(bundle.members()))


def verify_gauge_fixing(config: GaugeConfig, alphabet: Optional[Alphabet] = None,
                        max_length: int = EXACTNESS_WORD_LENGTH) -> VerificationReport:
    """
    Run every gauge-fixing check for one configuration.

    Args:
        config: gauge, convention and parameters
        alphabet: generator table
        max_length: word bound for the total-derivative solve

    Returns:
        VerificationReport with the bundle members as artifacts
    """
    alphabet = alphabet or default_alphabet()
    logger.info(f"Verifying gauge fixing: {config.gauge} / {config.convention}")
    bundle = build_gauge_fixing(config, alphabet)
    registry = _registry(config, alphabet)

    report = VerificationReport(suite='gauge-fixing', convention=config.convention,
                                gauge=config.to_dict())
    report.add(check_bundle_gradings(bundle))
    report.add(check_covariance(config.convention, alphabet=alphabet))
    report.add(check_exactness(config, bundle, registry, alphabet, max_length))
    for relation in check_lagrangian_exactness(config, bundle, registry, alphabet,
                                               max_length).values():
        report.add(relation)
    report.add(check_double_variation(config, bundle, registry, alphabet))
    report.artifacts.update(bundle.to_dict())
    logger.info(f"Gauge fixing: {report.passed_count}/{len(report.relations)} relations pass")
    return report
