"""
Grid calibration of unknown rule coefficients.

Unknown coefficients are drawn from a finite grid; every assignment is
checked against a list of relations, sector by sector (L generators, then R,
then the rest) so that most assignments are rejected after a few evaluations.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from ..algebra.element import Element
from ..algebra.grading import FIELD_NAMES
from ..algebra.scalars import scalar
from ..exceptions import ConfigurationError, SearchSpaceError
from ..utils.constants import CALIBRATION_GRID, CALIBRATION_MAX_UNKNOWNS
from ..utils.helpers import chunked, format_fraction
from .derivation import Derivation
from .operators import OperatorExpression
from .relations import relation_name
from .tables import brst_registry

logger = logging.getLogger(__name__)

Assignment = Tuple[Fraction, ...]


@dataclass(frozen=True)
class CalibrationRelation:
    lhs: OperatorExpression
    rhs: OperatorExpression
    generators: Tuple[str, ...] = FIELD_NAMES

    @property
    def name(self) -> str:
        return relation_name(self.lhs, self.rhs)


def as_relation(relation) -> CalibrationRelation:
    if isinstance(relation, CalibrationRelation):
        return relation
    if len(relation) == 2:
        return CalibrationRelation(relation[0], relation[1])
    return CalibrationRelation(relation[0], relation[1], tuple(relation[2]))


@dataclass
class ParametrizedRuleSet:
    """
    A registry in which chosen rules are sums of terms with unknown coefficients.

    templates maps (derivation, generator) to (unknown or None, term) pairs; the
    instantiated image is the sum of value(unknown) * term. A scale unknown may
    multiply several terms (e.g. dFP = lambda * ghost number).
    """

    base: Dict[str, Derivation]
    templates: Dict[Tuple[str, str], List[Tuple[Optional[str], Element]]] = field(default_factory=dict)

    def add_term(self, derivation: str, generator: str, term: Element,
                 unknown: Optional[str] = None) -> 'ParametrizedRuleSet':
        if derivation not in self.base:
            raise ConfigurationError(f"no derivation named '{derivation}'")
        self.templates.setdefault((derivation, generator), []).append((unknown, term))
        return self

    def add_ghost_scale(self, derivation: str = 'dFP', unknown: str = 'lambda') -> 'ParametrizedRuleSet':
        """Replace a derivation by unknown * (ghost number) on every base generator."""
        alphabet = self.base[derivation].alphabet
        for gen in alphabet.base_generators():
            term = Element.generator(alphabet, gen.name).scale(gen.grading.ghost)
            self.templates[(derivation, gen.name)] = [(unknown, term)]
        return self

    def unknowns(self) -> List[str]:
        names = []
        for terms in self.templates.values():
            for unknown, _ in terms:
                if unknown is not None and unknown not in names:
                    names.append(unknown)
        return names

    def instantiate(self, values: Mapping[str, Fraction]) -> Dict[str, Derivation]:
        grouped: Dict[str, Dict[str, Element]] = {}
        for (derivation, generator), terms in self.templates.items():
            alphabet = self.base[derivation].alphabet
            image = Element.zero(alphabet)
            for unknown, term in terms:
                factor = scalar(values[unknown]) if unknown is not None else scalar(1)
                image = image + term.scale(factor)
            grouped.setdefault(derivation, {})[generator] = image
        registry = dict(self.base)
        for derivation, rules in grouped.items():
            registry[derivation] = registry[derivation].with_rules(rules)
        return registry


@dataclass
class CalibrationResult:
    unknowns: List[str]
    solutions: List[Dict[str, Fraction]]
    minimal_core: List[str] = field(default_factory=list)
    best_assignment: Optional[Dict[str, Fraction]] = None
    first_failure: Optional[Tuple[str, str]] = None
    searched: int = 0

    @property
    def solved(self) -> bool:
        return bool(self.solutions)

    def to_dict(self) -> Dict:
        def fmt(assignment):
            return {k: format_fraction(v) for k, v in assignment.items()}
        data = {
            'unknowns': list(self.unknowns),
            'solutions': [fmt(s) for s in self.solutions],
            'searched': self.searched,
        }
        if not self.solutions:
            data['minimal_core'] = list(self.minimal_core)
            if self.best_assignment is not None:
                data['best_assignment'] = fmt(self.best_assignment)
            if self.first_failure is not None:
                data['first_failure'] = {'relation': self.first_failure[0],
                                         'generator': self.first_failure[1]}
        return data


def sector_stages(generators: Sequence[str], registry: Mapping[str, Derivation]) -> List[List[str]]:
    """Generators split into L, R and remaining stages, each in input order."""
    alphabet = next(iter(registry.values())).alphabet
    stages = [[g for g in generators if alphabet[g].sector == 'L'],
              [g for g in generators if alphabet[g].sector == 'R'],
              [g for g in generators if alphabet[g].sector not in ('L', 'R')]]
    return [stage for stage in stages if stage]


def _failures(relation: CalibrationRelation, registry: Mapping[str, Derivation],
              generators: Sequence[str]) -> List[str]:
    alphabet = next(iter(registry.values())).alphabet
    failing = []
    for generator in generators:
        target = Element.generator(alphabet, generator)
        if relation.lhs.evaluate(registry, target) != relation.rhs.evaluate(registry, target):
            failing.append(generator)
    return failing


def _passes(rule_set: ParametrizedRuleSet, unknowns: Sequence[str], assignment: Assignment,
            relations: Sequence[CalibrationRelation]) -> bool:
    registry = rule_set.instantiate(dict(zip(unknowns, assignment)))
    for stage_index in range(3):
        for relation in relations:
            stages = sector_stages(relation.generators, registry)
            if stage_index < len(stages) and _failures(relation, registry, stages[stage_index]):
                return False
    return True


def _search_chunk(rule_set, unknowns, chunk, relations) -> List[Assignment]:
    return [a for a in chunk if _passes(rule_set, unknowns, a, relations)]


def _search(rule_set, unknowns, relations, grid, n_jobs) -> List[Assignment]:
    assignments = list(itertools.product(grid, repeat=len(unknowns)))
    if n_jobs == 1:
        found = _search_chunk(rule_set, unknowns, assignments, relations)
    else:
        chunks = chunked(assignments, n_jobs * 4)
        results = Parallel(n_jobs=n_jobs, prefer='threads')(
            delayed(_search_chunk)(rule_set, unknowns, chunk, relations) for chunk in chunks)
        found = [a for chunk in results for a in chunk]
    return sorted(found)


def calibrate(rule_set: ParametrizedRuleSet, relations: Sequence,
              grid: Sequence[Fraction] = CALIBRATION_GRID, n_jobs: int = 1,
              max_unknowns: int = CALIBRATION_MAX_UNKNOWNS) -> CalibrationResult:
    """
    Find every grid assignment under which all relations pass.

    Args:
        rule_set: registry with unknown coefficients
        relations: (lhs, rhs) or (lhs, rhs, generators) tuples, or CalibrationRelations
        grid: candidate values for each unknown
        n_jobs: joblib workers; chunks are merged and sorted
        max_unknowns: search-space bound

    Returns:
        CalibrationResult; when nothing passes it carries a minimal failing core
        and the assignment that fails the fewest (relation, generator) pairs
    """
    relations = [as_relation(r) for r in relations]
    unknowns = rule_set.unknowns()
    if len(unknowns) > max_unknowns:
        raise SearchSpaceError(
            f"{len(unknowns)} unknowns exceed the bound of {max_unknowns}; "
            f"split the rule set by sector and calibrate each part")
    grid = tuple(Fraction(v) for v in grid)
    logger.info(f"Calibrating {unknowns} over a grid of {len(grid)} values "
                f"against {len(relations)} relations")

    found = _search(rule_set, unknowns, relations, grid, n_jobs)
    result = CalibrationResult(
        unknowns=unknowns,
        solutions=[dict(zip(unknowns, a)) for a in found],
        searched=len(grid) ** len(unknowns),
    )
    if found:
        logger.info(f"Calibration found {len(found)} assignment(s)")
        return result

    logger.warning("No assignment satisfies every relation")
    result.minimal_core = [r.name for r in _minimal_core(rule_set, unknowns, relations, grid, n_jobs)]
    result.best_assignment, result.first_failure = _best_assignment(rule_set, unknowns, relations, grid)
    return result


def _minimal_core(rule_set, unknowns, relations, grid, n_jobs) -> List[CalibrationRelation]:
    """Deletion pass: drop each relation whose removal keeps the set unsatisfiable."""
    core = list(relations)
    for relation in list(relations):
        trial = [r for r in core if r is not relation]
        if trial and not _search(rule_set, unknowns, trial, grid, n_jobs):
            core = trial
    return core


def _best_assignment(rule_set, unknowns, relations, grid):
    best, best_failures, best_count = None, None, None
    for assignment in itertools.product(grid, repeat=len(unknowns)):
        registry = rule_set.instantiate(dict(zip(unknowns, assignment)))
        failures = []
        for relation in relations:
            ordered = [g for stage in sector_stages(relation.generators, registry) for g in stage]
            failures.extend((relation.name, g) for g in _failures(relation, registry, ordered))
        if best_count is None or len(failures) < best_count:
            best, best_failures, best_count = assignment, failures, len(failures)
    first = best_failures[0] if best_failures else None
    return dict(zip(unknowns, best)), first


# built-in problems

def _leibniz_registry(gauge: str, alphabet):
    return brst_registry(gauge, 'leibniz_consistent', alphabet)


def ghost_square_problem(alphabet) -> Tuple[ParametrizedRuleSet, List[CalibrationRelation]]:
    """s c_L = kappa c_L c_L against s s V_L = 0."""
    rule_set = ParametrizedRuleSet(_leibniz_registry('linear', alphabet))
    rule_set.add_term('s', 'c_L', Element.word(alphabet, 'c_L', 'c_L'), 'kappa')
    relations = [CalibrationRelation(OperatorExpression.compose('s', 's'), OperatorExpression.zero(),
                                     ('V_L',))]
    return rule_set, relations


def fp_scale_problem(alphabet, with_cross_relation: bool = False
                     ) -> Tuple[ParametrizedRuleSet, List[CalibrationRelation]]:
    """dFP = lambda * ghost number against the Nakanishi-Ojima brackets with dFP."""
    rule_set = ParametrizedRuleSet(_leibniz_registry('curci_ferrari', alphabet))
    rule_set.add_ghost_scale('dFP', 'lambda')
    relations = [
        CalibrationRelation(OperatorExpression.bracket('d1', 'dFP'), OperatorExpression.single('d1', -4)),
        CalibrationRelation(OperatorExpression.bracket('d2', 'dFP'), OperatorExpression.single('d2', 4)),
    ]
    if with_cross_relation:
        relations.append(CalibrationRelation(OperatorExpression.bracket('d1', 'd2'),
                                             OperatorExpression.single('dFP', -2)))
    return rule_set, relations


PROBLEMS = {
    'ghost-square': ghost_square_problem,
    'fp-scale': fp_scale_problem,
    'fp-scale-cross': partial(fp_scale_problem, with_cross_relation=True),
}
