"""
Randomized property suite for the superspace calculus.

Every identity is checked exactly on seeded random polynomials; the first
failing sample and its residual go into the report. Full-measure identities
that leave only x-derivative terms are reported inconclusive.
"""

import logging
import time
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from ..algebra.sampling import make_rng
from ..algebra.scalars import I_UNIT, scalar
from ..derivations.relations import FAIL, INCONCLUSIVE, PASS, RelationReport
from ..exceptions import ConfigurationError
from ..reporting.report import VerificationReport
from ..utils.constants import DEFAULT_SAMPLES, RANDOM_SEED
from .integration import FULL, berezin_integrate, top_component
from .operators import (
    SPINOR, OperatorTag, apply_operator, bispinor_derivative, grassmann_derivative,
    graded_bracket, is_analytic, tilde_conjugate,
)
from .polynomial import (
    ANALYTIC, SuperPolynomial, Term, random_superpolynomial, to_analytic, to_central,
)

logger = logging.getLogger(__name__)

Check = Callable[[SuperPolynomial], SuperPolynomial]

SUITE = 'superspace'


def _op(name: str, index: Optional[int] = None) -> OperatorTag:
    return OperatorTag(name, index)


def _pairs() -> List[Tuple[int, int]]:
    return [(a, b) for a in SPINOR for b in SPINOR]


def algebra_checks() -> List[Tuple[str, Check]]:
    """The derivative algebra as residual maps f -> lhs(f) - rhs(f), one per index choice."""
    def anticommutator_dx(first, a, second, b, factor):
        def check(f):
            lhs = graded_bracket(_op(first, a), _op(second, b), f)
            return lhs - bispinor_derivative(f, a, b).scale(factor)
        return check

    def spinor_relation(outer, inner, a, target, factor):
        def check(f):
            rhs = apply_operator(f, _op(target, a)).scale(factor)
            return graded_bracket(_op(outer), _op(inner, a), f) - rhs
        return check

    def mixed_anticommutator(first, a, second, b):
        return lambda f: graded_bracket(_op(first, a), _op(second, b), f)

    def scalar_relation(first, second, target):
        return lambda f: graded_bracket(_op(first), _op(second), f) - apply_operator(f, _op(target))

    checks = []
    for a, b in _pairs():
        checks.append((f"{{D++_{a}, D--_{b}}} = 2i d_{a}{b}",
                       anticommutator_dx('D++_a', a, 'D--_a', b, 2 * I_UNIT)))
    for a, b in _pairs():
        checks.append((f"{{D0_{a}, D0_{b}}} = -i d_{a}{b}",
                       anticommutator_dx('D0_a', a, 'D0_a', b, -I_UNIT)))
    for outer, inner, target, factor in (('D--', 'D++_a', 'D0_a', 2), ('D++', 'D--_a', 'D0_a', 2),
                                         ('D0', 'D++_a', 'D++_a', 2), ('D0', 'D--_a', 'D--_a', -2)):
        for a in SPINOR:
            checks.append((f"[{outer}, {inner[:-1]}{a}] = {factor} {target[:-1]}{a}",
                           spinor_relation(outer, inner, a, target, factor)))
    checks.append(("[d++, d--] = d0", scalar_relation('d++', 'd--', 'd0')))
    checks.append(("[D++, D--] = D0", scalar_relation('D++', 'D--', 'D0')))
    for first in ('D++_a', 'D--_a'):
        for a, b in _pairs():
            checks.append((f"{{{first[:-1]}{a}, D0_{b}}} = 0",
                           mixed_anticommutator(first, a, 'D0_a', b)))
    for outer, target in (('D++', 'D++_a'), ('D--', 'D--_a')):
        for a in SPINOR:
            checks.append((f"[{outer}, D0_{a}] = {target[:-1]}{a}",
                           spinor_relation(outer, 'D0_a', a, target, 1)))
    return checks


def _nilpotency(f: SuperPolynomial) -> SuperPolynomial:
    total = SuperPolynomial.zero(f.basis)
    for index in range(6):
        total = total + grassmann_derivative(grassmann_derivative(f, index), index)
    return total


def _tilde_involution(f: SuperPolynomial) -> SuperPolynomial:
    expected = SuperPolynomial({t: c * (-1) ** sum(t.harmonic) for t, c in f.terms.items()}, f.basis)
    return tilde_conjugate(tilde_conjugate(f)) - expected


def _basis_round_trip(f: SuperPolynomial) -> SuperPolynomial:
    return to_central(to_analytic(f)) - f


def _x_free(f: SuperPolynomial) -> SuperPolynomial:
    return SuperPolynomial({Term((0, 0, 0), t.theta, t.harmonic): c for t, c in f.terms.items()},
                           f.basis)


def _total_derivative(f: SuperPolynomial) -> SuperPolynomial:
    total = SuperPolynomial.zero(f.basis)
    for a in SPINOR:
        total = total + berezin_integrate(apply_operator(f, _op('D++_a', a)), FULL)
    return total


def _saturation(f: SuperPolynomial) -> SuperPolynomial:
    return berezin_integrate(f, FULL) - top_component(f).scale(scalar(Fraction(-1, 8)))


def measure_checks() -> List[Tuple[str, Check]]:
    """Measure identities. On x-dependent input they can leave x-derivative terms."""
    return [
        ("full measure annihilates D++_a f", _total_derivative),
        ("full measure = -1/8 top component", _saturation),
    ]


def harmonic_constraint_residuals() -> List[Tuple[str, SuperPolynomial]]:
    """u^{+i}u-_i - 1, u^{+i}u+_i and u^{-i}u-_i with u^{+1} = u+_2, u^{+2} = -u+_1."""
    up1, up2 = SuperPolynomial.harmonic('+', 1), SuperPolynomial.harmonic('+', 2)
    um1, um2 = SuperPolynomial.harmonic('-', 1), SuperPolynomial.harmonic('-', 2)
    return [
        ("u^{+i} u-_i = 1", up2 * um1 - up1 * um2 - 1),
        ("u^{+i} u+_i = 0", up2 * up1 - up1 * up2),
        ("u^{-i} u-_i = 0", um2 * um1 - um1 * um2),
    ]


def run_check(name: str, check: Check, samples: Sequence[SuperPolynomial],
              modulo_x_derivatives: bool = False) -> RelationReport:
    """
    Evaluate one residual map on every sample.

    With modulo_x_derivatives, a sample whose residual vanishes on its
    x-independent part only is not a failure: the leftover is built from
    x-derivatives and the relation is reported inconclusive.
    """
    failures, x_only = [], []
    for k, f in enumerate(samples):
        residual = check(f)
        if not residual:
            continue
        if modulo_x_derivatives and not check(_x_free(f)):
            x_only.append((f"sample {k}", residual))
            continue
        failures.append((f"sample {k}", residual))
        logger.warning(f"{name} fails on sample {k}: {residual}")
        break
    checked = [f"{len(samples)} samples"]
    if failures:
        return RelationReport(name, FAIL, failures, checked=checked)
    if x_only:
        note = (f"{len(x_only)} of {len(samples)} samples leave x-derivative terms; "
                f"the x-independent part of every sample passes")
        logger.info(f"{name}: {note}")
        return RelationReport(name, INCONCLUSIVE, x_only[:1], checked=checked, note=note)
    return RelationReport(name, PASS, [], checked=checked)


def _harmonic_order_check(samples: Sequence[SuperPolynomial]) -> RelationReport:
    """Products of harmonic parts agree in every grouping and order."""
    def harmonic_part(f):
        return SuperPolynomial({Term((0, 0, 0), (), t.harmonic): c for t, c in f.terms.items()},
                               f.basis)
    parts = [harmonic_part(f) for f in samples]
    failures = []
    for k in range(len(parts) - 2):
        f, g, h = parts[k:k + 3]
        residual = (f * g) * h - f * (h * g)
        if residual:
            failures.append((f"sample {k}", residual))
            break
    return RelationReport("harmonic reduction is order independent", FAIL if failures else PASS,
                          failures, checked=[f"{len(parts)} samples"])


def _analyticity_check(rng, count: int) -> RelationReport:
    failures = []
    for k in range(count):
        f = random_superpolynomial(rng, theta_kinds=('++', '0'), basis=ANALYTIC)
        for name in ('D++', 'D0'):
            image = apply_operator(f, _op(name))
            if not is_analytic(image):
                failures.append((f"sample {k} under {name}", image))
        if failures:
            break
    return RelationReport("D++ and D0 preserve analyticity", FAIL if failures else PASS,
                          failures, checked=[f"{count} samples"])


def verify_superspace(samples: int = DEFAULT_SAMPLES, seed: int = RANDOM_SEED,
                      n_jobs: int = 1) -> VerificationReport:
    """
    Check the superspace derivative algebra and its companion properties.

    Args:
        samples: number of random polynomials (degree <= 3 in x, harmonic degree <= 2)
        seed: seed of the numpy Generator
        n_jobs: joblib workers over checks

    Returns:
        VerificationReport for suite 'superspace'
    """
    if samples < 1:
        raise ConfigurationError("samples must be at least 1")
    logger.info(f"Starting superspace suite: {samples} samples, seed {seed}")
    start = time.perf_counter()
    rng = make_rng(seed)
    polynomials = [random_superpolynomial(rng) for _ in range(samples)]

    checks = [(name, check, False) for name, check in algebra_checks()] + [
        ("d/dtheta d/dtheta = 0", _nilpotency, False),
        ("tilde tilde = (-1)^(harmonic degree)", _tilde_involution, False),
        ("central -> analytic -> central is the identity", _basis_round_trip, False),
    ] + [(name, check, True) for name, check in measure_checks()]
    results = Parallel(n_jobs=n_jobs, prefer='threads')(
        delayed(run_check)(name, check, polynomials, modulo_x)
        for name, check, modulo_x in checks)

    report = VerificationReport(suite=SUITE, seed=seed)
    for name, residual in harmonic_constraint_residuals():
        report.add(RelationReport(name, FAIL if residual else PASS,
                                  [("constraint", residual)] if residual else [],
                                  checked=["constraint"]))
    for result in results:
        report.add(result)
    report.add(_harmonic_order_check(polynomials))
    report.add(_analyticity_check(rng, samples))

    report.duration = time.perf_counter() - start
    logger.info(f"Superspace suite finished: {report.passed_count}/{len(report.relations)} passed")
    return report
