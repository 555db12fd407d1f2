"""
Verification reports.

A VerificationReport collects RelationReports for one suite and serializes
them deterministically: text for people, schema-versioned JSON for tools.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..derivations.relations import FAIL, INCONCLUSIVE, PASS, RelationReport
from ..utils.constants import (
    ENGINE_VERSION, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, REPORT_SCHEMA_VERSION,
)
from ..exceptions import ConfigurationError
from ..utils.helpers import canonical_json

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json')


@dataclass
class VerificationReport:
    """Evidence for one suite run."""

    suite: str
    relations: List[RelationReport] = field(default_factory=list)
    convention: Optional[str] = None
    gauge: Optional[Dict] = None
    seed: Optional[int] = None
    input_digests: Dict[str, str] = field(default_factory=dict)
    artifacts: Dict[str, str] = field(default_factory=dict)
    engine_version: str = ENGINE_VERSION
    duration: Optional[float] = None

    def add(self, relation: RelationReport) -> RelationReport:
        self.relations.append(relation)
        return relation

    def extend(self, other: 'VerificationReport'):
        self.relations.extend(other.relations)
        self.artifacts.update(other.artifacts)

    @property
    def passed_count(self) -> int:
        return sum(1 for r in self.relations if r.status == PASS)

    @property
    def status(self) -> str:
        statuses = {r.status for r in self.relations}
        if FAIL in statuses:
            return FAIL
        if INCONCLUSIVE in statuses:
            return INCONCLUSIVE
        return PASS

    @property
    def exit_code(self) -> int:
        return {PASS: EXIT_PASS, FAIL: EXIT_FAIL, INCONCLUSIVE: EXIT_INCONCLUSIVE}[self.status]

    def relation(self, name: str) -> RelationReport:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self, include_timing: bool = False) -> Dict:
        data = {
            'schema_version': REPORT_SCHEMA_VERSION,
            'engine_version': self.engine_version,
            'suite': self.suite,
            'convention': self.convention,
            'gauge': self.gauge,
            'seed': self.seed,
            'status': self.status,
            'summary': {'passed': self.passed_count, 'total': len(self.relations)},
            'relations': [r.to_dict() for r in self.relations],
            'input_digests': dict(self.input_digests),
            'artifacts': dict(self.artifacts),
        }
        if include_timing and self.duration is not None:
            data['duration_seconds'] = f"{self.duration:.3f}"
        return data


def format_text(report: VerificationReport, include_timing: bool = False) -> str:
    lines = ["=" * 60, f"VERIFICATION REPORT: {report.suite}"]
    if report.convention:
        lines.append(f"  Convention: {report.convention}")
    if report.gauge:
        gauge = ", ".join(f"{k}={v}" for k, v in sorted(report.gauge.items()))
        lines.append(f"  Gauge: {gauge}")
    if report.seed is not None:
        lines.append(f"  Seed: {report.seed}")
    lines.append("=" * 60)
    for relation in report.relations:
        lines.append(f"[{relation.status.upper()}] {relation.name}")
        for generator, residual in relation.failures:
            lines.append(f"    on {generator}: {residual}")
        if relation.witness:
            lines.append(f"    witness: {relation.witness}")
        if relation.note:
            lines.append(f"    note: {relation.note}")
    for name, value in sorted(report.artifacts.items()):
        lines.append(f"  {name} = {value}")
    if include_timing and report.duration is not None:
        lines.append(f"  Duration: {report.duration:.3f} s")
    lines.append("-" * 60)
    lines.append(f"{report.status.upper()} ({report.passed_count}/{len(report.relations)})")
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = 'text',
                include_timing: bool = False) -> bytes:
    """
    Serialize a report.

    Args:
        report: report to serialize
        fmt: 'text' or 'json'
        include_timing: add the wall-clock duration (breaks byte identity)

    Returns:
        UTF-8 encoded report
    """
    if fmt == 'json':
        return canonical_json(report.to_dict(include_timing)).encode('utf-8')
    if fmt == 'text':
        return format_text(report, include_timing).encode('utf-8')
    raise ConfigurationError(f"unknown report format '{fmt}', expected one of {FORMATS}")
