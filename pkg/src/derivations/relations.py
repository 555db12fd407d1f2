"""Per-generator checks of operator identities."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..algebra.element import Element, format_element
from ..algebra.grading import FIELD_NAMES
from ..exceptions import GradingError
from .derivation import Derivation
from .operators import OperatorExpression

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'


@dataclass
class RelationReport:
    """Outcome of one relation.

    failures holds (generator, residual) pairs in evaluation order; the first
    one is the reported counterexample.
    """

    name: str
    status: str
    failures: List[Tuple[str, Element]] = field(default_factory=list)
    checked: List[str] = field(default_factory=list)
    witness: Optional[str] = None
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def generator(self) -> Optional[str]:
        return self.failures[0][0] if self.failures else None

    @property
    def residual(self) -> Optional[Element]:
        return self.failures[0][1] if self.failures else None

    def failing_generators(self) -> List[str]:
        return [g for g, _ in self.failures]

    def to_dict(self) -> Dict:
        data = {
            'name': self.name,
            'status': self.status,
            'checked': list(self.checked),
        }
        if self.failures:
            data['generator'] = self.generator
            data['residual'] = str(self.residual)
            data['failures'] = [
                {'generator': g, 'residual': str(r)} for g, r in self.failures
            ]
        if self.witness is not None:
            data['witness'] = self.witness
        if self.note is not None:
            data['note'] = self.note
        return data


def relation_name(lhs: OperatorExpression, rhs: OperatorExpression) -> str:
    return f"{lhs} = {rhs}"


def check_relation(lhs: OperatorExpression, rhs: OperatorExpression,
                   registry: Mapping[str, Derivation],
                   generators: Sequence[str] = FIELD_NAMES,
                   name: Optional[str] = None) -> RelationReport:
    """
    Compare two operator expressions generator by generator.

    Both sides are (differences of) derivations of one grading, so agreement
    on generators is agreement everywhere.

    Args:
        lhs: left-hand operator expression
        rhs: right-hand operator expression
        registry: derivations by name
        generators: generators to evaluate on, in report order
        name: relation label, defaults to the printed relation

    Returns:
        RelationReport with every nonzero residual

    Raises:
        GradingError: the two sides have different gradings
    """
    name = name or relation_name(lhs, rhs)
    left_grading = lhs.grading(registry)
    right_grading = rhs.grading(registry)
    if left_grading is not None and right_grading is not None and left_grading != right_grading:
        raise GradingError(f"relation '{name}' compares operators of different gradings",
                           [(str(lhs), str(left_grading)), (str(rhs), str(right_grading))])

    alphabet = next(iter(registry.values())).alphabet
    failures = []
    for generator in generators:
        target = Element.generator(alphabet, generator)
        residual = lhs.evaluate(registry, target) - rhs.evaluate(registry, target)
        logger.debug(f"{name} on {generator}: residual {format_element(residual)}")
        if residual:
            failures.append((generator, residual))

    status = FAIL if failures else PASS
    if failures:
        logger.warning(f"Relation {name} fails on {[g for g, _ in failures]}")
    return RelationReport(name=name, status=status, failures=failures, checked=list(generators))
