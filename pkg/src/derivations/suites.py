"""
Named verification suites over the built-in rule tables.

Each suite checks a fixed, ordered list of operator relations generator by
generator and returns a VerificationReport.
"""

import logging
import time
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from ..algebra.element import grading_of, substitute
from ..algebra.grading import FIELD_NAMES, Alphabet, default_alphabet
from ..algebra.scalars import I_UNIT, ScalarLike, format_scalar, has_factor, scalar
from ..exceptions import GradingError, UnknownSuiteError
from ..reporting.report import VerificationReport
from .derivation import Derivation
from .operators import OperatorExpression as Op
from .relations import FAIL, PASS, RelationReport, check_relation
from .tables import brst_registry, brst_table_name, normalize_convention, table_path
from ..utils.helpers import file_digest

logger = logging.getLogger(__name__)

Relation = Tuple[Op, Op]

ZERO_OP = Op.zero()


def nilpotency_relations() -> List[Relation]:
    return [
        (Op.bracket('s', 's'), ZERO_OP),
        (Op.bracket('sbar', 'sbar'), ZERO_OP),
        (Op.bracket('s', 'sbar'), ZERO_OP),
    ]


def massive_nilpotency_relations() -> List[Relation]:
    i_m2 = I_UNIT * scalar('m2')
    return [
        (Op.bracket('s', 's'), Op.single('d1', i_m2 * -2)),
        (Op.bracket('sbar', 'sbar'), Op.single('d2', i_m2 * 2)),
        (Op.bracket('s', 'sbar'), Op.single('dFP', i_m2 * 2)),
    ]


def filtration_relations() -> List[Relation]:
    """The brackets with d1, d2 and dFP of the Nakanishi-Ojima algebra."""
    return [
        (Op.bracket('d1', 'd2'), Op.single('dFP', -2)),
        (Op.bracket('d1', 'dFP'), Op.single('d1', -4)),
        (Op.bracket('d2', 'dFP'), Op.single('d2', 4)),
        (Op.bracket('s', 'dFP'), Op.single('s', -2)),
        (Op.bracket('sbar', 'dFP'), Op.single('sbar', 2)),
        (Op.bracket('s', 'd1'), ZERO_OP),
        (Op.bracket('sbar', 'd1'), Op.single('s', -2)),
        (Op.bracket('s', 'd2'), Op.single('sbar', 2)),
        (Op.bracket('sbar', 'd2'), ZERO_OP),
    ]


# suite name -> (gauge, relation builder, derivations whose tables are grading-checked)
SUITES: Dict[str, Tuple[str, Callable[[], List[Relation]], Tuple[str, ...]]] = {
    'landau': ('landau', nilpotency_relations, ('s', 'sbar')),
    'linear': ('linear', nilpotency_relations, ('s', 'sbar')),
    'curci-ferrari': ('curci_ferrari', nilpotency_relations, ('s', 'sbar')),
    'massive-cf': ('massive_cf', nilpotency_relations, ('s', 'sbar')),
    'no-algebra': ('curci_ferrari',
                   lambda: nilpotency_relations() + filtration_relations(),
                   ('s', 'sbar', 'd1', 'd2')),
    'no-algebra-massive': ('massive_cf',
                           lambda: massive_nilpotency_relations() + filtration_relations(),
                           ('s', 'sbar', 'd1', 'd2')),
}

COVARIANCE_SUITE = 'gauge-covariance'


def suite_names() -> List[str]:
    return sorted(list(SUITES) + [COVARIANCE_SUITE])


def check_homogeneity(d: Derivation) -> RelationReport:
    """Every nonzero image carries grading(generator) + grading(d)."""
    failures = []
    for generator, image in d.rules.items():
        if image.is_zero():
            continue
        expected = d.alphabet.grading(generator) + d.grading
        try:
            ok = grading_of(image) == expected
        except GradingError:
            ok = False
        if not ok:
            failures.append((generator, image))
    if failures:
        logger.warning(f"Rule table for {d.name} is not homogeneous on {[g for g, _ in failures]}")
    return RelationReport(name=f"homogeneity of {d.name}", status=FAIL if failures else PASS,
                          failures=failures, checked=list(d.rules))


def _mass_note(relation: RelationReport) -> Optional[str]:
    if relation.passed:
        return None
    proportional = all(
        has_factor(coeff, 'm2') for _, residual in relation.failures for _, coeff in residual)
    vanishes = all(substitute(r, {'m2': 0}).is_zero() for _, r in relation.failures)
    return f"residual proportional to m2: {'yes' if proportional else 'no'}; " \
           f"vanishes at m2 = 0: {'yes' if vanishes else 'no'}"


def build_registry(gauge: str, convention: str, alphabet: Alphabet, m2: Optional[ScalarLike] = None,
                   fp_scale: ScalarLike = 2, symmetric: bool = False,
                   extra_rule_files: Sequence[str] = ()) -> Dict[str, Derivation]:
    registry = brst_registry(gauge, convention, alphabet, fp_scale, symmetric, extra_rule_files)
    if m2 is not None:
        registry = {name: d.specialize({'m2': m2}) for name, d in registry.items()}
    return registry


def run_relations(relations: Sequence[Relation], registry: Mapping[str, Derivation],
                  generators: Sequence[str] = FIELD_NAMES, n_jobs: int = 1) -> List[RelationReport]:
    """Check relations, optionally fanned out; results keep the input order."""
    if n_jobs == 1:
        return [check_relation(lhs, rhs, registry, generators) for lhs, rhs in relations]
    return Parallel(n_jobs=n_jobs, prefer='threads')(
        delayed(check_relation)(lhs, rhs, registry, generators) for lhs, rhs in relations)


def verify_suite(suite_name: str, convention: str = 'leibniz_consistent',
                 alphabet: Optional[Alphabet] = None, m2: Optional[ScalarLike] = None,
                 fp_scale: ScalarLike = 2, gauge: Optional[str] = None,
                 symmetric: bool = False, n_jobs: int = 1,
                 extra_rule_files: Sequence[str] = ()) -> VerificationReport:
    """
    Run a registered suite.

    Args:
        suite_name: one of suite_names()
        convention: verbatim or leibniz_consistent
        alphabet: generator table, default alphabet when omitted
        m2: value substituted for the mass parameter (symbolic when None)
        fp_scale: dFP = fp_scale * ghost number
        gauge: override the suite's gauge (e.g. landau for no-algebra)
        symmetric: mirrored R-sector reading of the verbatim linear table
        n_jobs: joblib workers for the relation checks
        extra_rule_files: rule files overriding built-in rules

    Returns:
        VerificationReport in fixed relation order
    """
    convention = normalize_convention(convention)
    alphabet = alphabet or default_alphabet()
    started = time.time()
    logger.info(f"Running suite {suite_name} ({convention})")

    if suite_name == COVARIANCE_SUITE:
        from ..gauge.checks import check_covariance
        report = VerificationReport(suite=suite_name, convention=convention)
        report.add(check_covariance(convention, alphabet=alphabet))
        report.input_digests[f"gauge_{convention}"] = file_digest(
            table_path('gauge_' + ('verbatim' if convention == 'verbatim' else 'leibniz')))
    elif suite_name in SUITES:
        suite_gauge, builder, checked = SUITES[suite_name]
        suite_gauge = gauge or suite_gauge
        registry = build_registry(suite_gauge, convention, alphabet, m2, fp_scale, symmetric,
                                  extra_rule_files)
        report = VerificationReport(
            suite=suite_name, convention=convention,
            gauge={'gauge': suite_gauge, 'm2': 'm2' if m2 is None else format_scalar(scalar(m2)),
                   'fp_scale': format_scalar(scalar(fp_scale))},
        )
        for name in checked:
            report.add(check_homogeneity(registry[name]))
        for relation in run_relations(builder(), registry, FIELD_NAMES, n_jobs):
            if suite_gauge == 'massive_cf' and m2 is None:
                relation.note = _mass_note(relation)
            report.add(relation)
        tables = [brst_table_name(suite_gauge, convention, symmetric), 'no_algebra']
        for table in tables:
            report.input_digests[table] = file_digest(table_path(table))
        for path in extra_rule_files:
            report.input_digests[path] = file_digest(path)
    else:
        raise UnknownSuiteError(f"unknown suite '{suite_name}', expected one of {suite_names()}")

    report.duration = time.time() - started
    logger.info(f"Suite {suite_name}: {report.passed_count}/{len(report.relations)} relations pass")
    return report
