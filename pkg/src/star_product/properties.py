"""Property suite for the star product on seeded random polynomials."""

import logging
import time
from typing import List, Optional, Tuple

from joblib import Parallel, delayed

from ..algebra.sampling import make_rng, random_scalar
from ..derivations.relations import FAIL, PASS, RelationReport
from ..exceptions import ConfigurationError
from ..reporting.report import VerificationReport
from ..superspace.polynomial import SuperPolynomial, random_superpolynomial
from ..utils.constants import DEFAULT_SAMPLES, RANDOM_SEED, SPINOR_INDICES, VECTOR_INDICES
from .deformation import DeformationTensor
from .star import star, star_commutator

logger = logging.getLogger(__name__)

SUITE = 'star-product'

Triple = Tuple[SuperPolynomial, SuperPolynomial, SuperPolynomial]


def _report(name: str, failures: List, checked: List[str]) -> RelationReport:
    for label, residual in failures[:1]:
        logger.warning(f"{name} fails on {label}: {residual}")
    return RelationReport(name, FAIL if failures else PASS, failures[:1], checked=checked)


def commutator_table(A: DeformationTensor) -> List[RelationReport]:
    """[theta^{kind a}, x^mu] for every kind, spinor index and vector index."""
    reports = []
    for kind in ('++', '--', '0'):
        failures, checked = [], []
        for a in SPINOR_INDICES:
            for mu in VECTOR_INDICES:
                label = f"(theta^{kind}{a}, x{mu})"
                checked.append(label)
                expected = A.entry(a, mu) if kind == '++' else SuperPolynomial.zero()
                residual = star_commutator(SuperPolynomial.theta(kind, a), SuperPolynomial.x(mu), A) - expected
                if residual:
                    failures.append((label, residual))
        target = "A^{a mu}" if kind == '++' else "0"
        reports.append(_report(f"[theta^{kind}a, x^mu] = {target}", failures, checked))

    failures, checked = [], []
    for mu in VECTOR_INDICES:
        for nu in VECTOR_INDICES:
            checked.append(f"(x{mu}, x{nu})")
            residual = star_commutator(SuperPolynomial.x(mu), SuperPolynomial.x(nu), A)
            if residual:
                failures.append((f"(x{mu}, x{nu})", residual))
    reports.append(_report("[x^mu, x^nu] = 0", failures, checked))

    residual = star_commutator(SuperPolynomial.theta('++', 1), SuperPolynomial.theta('++', 2), A)
    reports.append(_report("{theta^++1, theta^++2} = 0",
                           [("(theta^++1, theta^++2)", residual)] if residual else [],
                           ["(theta^++1, theta^++2)"]))
    return reports


def _sample(rng) -> SuperPolynomial:
    return random_superpolynomial(rng, max_x_degree=2, max_harmonic_degree=1, max_terms=3)


def _homogeneous(rng) -> SuperPolynomial:
    return random_superpolynomial(rng, max_x_degree=2, max_harmonic_degree=1, max_terms=3,
                                  parity=int(rng.integers(2)))


def _associativity(triple: Triple, A: DeformationTensor) -> SuperPolynomial:
    f, g, h = triple
    return star(star(f, g, A), h, A) - star(f, star(g, h, A), A)


def _checks_for(k: int, triple: Triple, scale, A: DeformationTensor) -> List[Tuple[str, str, SuperPolynomial]]:
    """Residuals (check name, label, residual) of every per-sample property."""
    f, g, h = triple
    label = f"sample {k}"
    out = [("star(star(f, g), h) = star(f, star(g, h))", label, _associativity(triple, A))]
    bilinear = star(f + g.scale(scale), h, A) - star(f, h, A) - star(g, h, A).scale(scale)
    out.append(("star(f + c g, h) = star(f, h) + c star(g, h)", label, bilinear))
    out.append(("star at A = 0 is the pointwise product", label,
                star(f, g, DeformationTensor.zero()) - f * g))
    product = star(f, g, A)
    parity = (f.parity() + g.parity()) % 2
    parity_residual = SuperPolynomial({t: c for t, c in product.terms.items() if t.parity != parity})
    out.append(("parity(star(f, g)) = parity(f) + parity(g)", label, parity_residual))
    new_symbols = {s for s in product.symbols() - f.symbols() - g.symbols() if not s.startswith('A_')}
    closure = product if new_symbols else SuperPolynomial.zero()
    out.append(("star introduces no new coordinates", label, closure))
    return out


def verify_star_properties(A: Optional[DeformationTensor] = None, samples: int = DEFAULT_SAMPLES,
                           seed: int = RANDOM_SEED, n_jobs: int = 1) -> VerificationReport:
    """
    Check the defining commutators and the algebraic properties of star.

    Args:
        A: deformation tensor, generic (every entry its own odd constant) by default
        samples: number of random triples
        seed: seed of the numpy Generator
        n_jobs: joblib workers over samples

    Returns:
        VerificationReport for suite 'star-product'
    """
    if samples < 1:
        raise ConfigurationError("samples must be at least 1")
    A = A or DeformationTensor.symbolic()
    logger.info(f"Starting star-product suite: {samples} samples, seed {seed}")
    start = time.perf_counter()
    report = VerificationReport(suite=SUITE, seed=seed)
    report.artifacts['deformation'] = ", ".join(f"{k}={v}" for k, v in A.to_dict().items())
    for relation in commutator_table(A):
        report.add(relation)

    rng = make_rng(seed)
    triples, scales = [], []
    for _ in range(samples):
        triples.append((_homogeneous(rng), _homogeneous(rng), _sample(rng)))
        scales.append(random_scalar(rng))
    per_sample = Parallel(n_jobs=n_jobs, prefer='threads')(
        delayed(_checks_for)(k, triple, scales[k], A) for k, triple in enumerate(triples))

    names: List[str] = []
    failures = {}
    for results in per_sample:
        for name, label, residual in results:
            if name not in failures:
                names.append(name)
                failures[name] = []
            if residual and not failures[name]:
                failures[name].append((label, residual))
    checked = [f"{samples} samples"]
    for name in names:
        report.add(_report(name, failures[name], checked))

    report.duration = time.perf_counter() - start
    logger.info(f"Star-product suite finished: {report.passed_count}/{len(report.relations)} passed")
    return report
