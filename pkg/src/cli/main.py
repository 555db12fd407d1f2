"""
Command-line front end.

    abj-verify verify-brst --gauge landau --convention leibniz --format json
    abj-verify verify-no-algebra --massive
    abj-verify eval "s(s(c_L))" --gauge linear --convention leibniz

Exit status: 0 every relation passes, 1 some relation fails, 2 inconclusive
without failures, 3 usage or configuration error.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from ..derivations.calibration import PROBLEMS, CalibrationResult, calibrate
from ..derivations.relations import FAIL, PASS, RelationReport
from ..derivations.suites import build_registry, verify_suite
from ..derivations.tables import gauge_variation_derivation, normalize_gauge
from ..dsl.evaluator import evaluate_text
from ..exceptions import EngineError
from ..gauge.checks import verify_gauge_fixing
from ..gauge.config import GaugeConfig
from ..reporting.report import FORMATS, VerificationReport, emit_report
from ..star_product.properties import verify_star_properties
from ..superspace.properties import verify_superspace
from ..utils.constants import EXIT_PASS, EXIT_USAGE
from ..utils.logger import setup_logger
from .config import EngineConfig, load_config, log_level

logger = logging.getLogger(__name__)

GAUGE_CHOICES = ['landau', 'linear', 'cf', 'curci-ferrari', 'massive-cf']
CONVENTION_CHOICES = ['verbatim', 'leibniz', 'leibniz_consistent']

# gauge -> verify-brst suite
BRST_SUITES = {
    'landau': 'landau',
    'linear': 'linear',
    'curci_ferrari': 'curci-ferrari',
    'massive_cf': 'massive-cf',
}


class UsageError(EngineError):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--gauge', choices=GAUGE_CHOICES, help='gauge (default from config)')
    common.add_argument('--convention', choices=CONVENTION_CHOICES,
                        help='rule-table convention (default from config)')
    common.add_argument('--massive', action='store_true', help='massive Curci-Ferrari variant')
    common.add_argument('--seed', type=int, help='seed for randomized suites')
    common.add_argument('--samples', type=int, help='random samples per property')
    common.add_argument('--format', choices=FORMATS, default='text', help='report format')
    common.add_argument('--config', help='YAML configuration file')
    common.add_argument('--out', help='write the report here instead of stdout')
    common.add_argument('--timing', action='store_true',
                        help='include wall-clock duration (omitted by default so reports are byte-identical)')
    common.add_argument('--n-jobs', type=int, dest='n_jobs', help='parallel workers')

    parser = _Parser(prog='abj-verify', description='Symbolic checks for deformed ABJ BRST algebra')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)
    sub.add_parser('verify-superspace', parents=[common], help='superspace derivative algebra')
    sub.add_parser('verify-star', parents=[common], help='star-product properties')
    brst = sub.add_parser('verify-brst', parents=[common], help='BRST / anti-BRST nilpotency')
    brst.add_argument('--symmetric', action='store_true',
                      help='mirrored R-sector reading of the verbatim linear table')
    sub.add_parser('verify-no-algebra', parents=[common], help='Nakanishi-Ojima algebra')
    sub.add_parser('verify-gauge-fixing', parents=[common], help='gauge-fixing bundle checks')
    cal = sub.add_parser('calibrate', parents=[common], help='grid calibration of coefficients')
    cal.add_argument('problem', nargs='?', default='fp-scale-cross', choices=sorted(PROBLEMS))
    ev = sub.add_parser('eval', parents=[common], help='evaluate an expression')
    ev.add_argument('expression')
    return parser


def _settings(args, config: EngineConfig):
    gauge = 'massive_cf' if args.massive else normalize_gauge(args.gauge or config.gauge)
    convention = args.convention or config.convention
    seed = config.seed if args.seed is None else args.seed
    samples = config.samples if args.samples is None else args.samples
    n_jobs = config.n_jobs if args.n_jobs is None else args.n_jobs
    if samples < 1:
        raise UsageError("--samples must be at least 1")
    return gauge, convention, seed, samples, n_jobs


def _calibration_report(problem: str, result: CalibrationResult) -> VerificationReport:
    report = VerificationReport(suite=f"calibrate {problem}")
    if result.solved:
        witness = "; ".join(", ".join(f"{k}={v}" for k, v in s.items()) for s in result.solutions)
        report.add(RelationReport(f"assignments for {', '.join(result.unknowns)}", PASS,
                                  checked=[f"{result.searched} assignments"], witness=witness))
    else:
        note = f"minimal failing core: {' ; '.join(result.minimal_core)}"
        if result.first_failure:
            relation, generator = result.first_failure
            best = ", ".join(f"{k}={v}" for k, v in result.best_assignment.items())
            note += f"; best {best} first fails {relation} on {generator}"
        report.add(RelationReport(f"assignments for {', '.join(result.unknowns)}", FAIL,
                                  checked=[f"{result.searched} assignments"], note=note))
    for key, value in result.to_dict().items():
        report.artifacts[key] = str(value)
    return report


def _run(args, config: EngineConfig) -> Optional[VerificationReport]:
    gauge, convention, seed, samples, n_jobs = _settings(args, config)
    alphabet = config.alphabet()
    command = args.command

    if command == 'verify-superspace':
        return verify_superspace(samples, seed, n_jobs)
    if command == 'verify-star':
        return verify_star_properties(config.deformation(), samples, seed, n_jobs)
    if command == 'verify-brst':
        return verify_suite(BRST_SUITES[gauge], convention, alphabet, m2=config.scalar_value('m2'),
                            symmetric=args.symmetric, n_jobs=n_jobs,
                            extra_rule_files=config.rule_files)
    if command == 'verify-no-algebra':
        suite = 'no-algebra-massive' if args.massive else 'no-algebra'
        override = None if args.massive or args.gauge is None else gauge
        return verify_suite(suite, convention, alphabet, m2=config.scalar_value('m2'),
                            gauge=override, n_jobs=n_jobs, extra_rule_files=config.rule_files)
    if command == 'verify-gauge-fixing':
        gauge_config = GaugeConfig.from_names(gauge, convention, config.scalar_value('alpha'),
                                              config.scalar_value('m2'))
        return verify_gauge_fixing(gauge_config, alphabet, config.bound('exactness_word_length'))
    if command == 'calibrate':
        rule_set, relations = PROBLEMS[args.problem](alphabet)
        result = calibrate(rule_set, relations, n_jobs=n_jobs,
                           max_unknowns=config.bound('calibration_unknowns'))
        return _calibration_report(args.problem, result)
    if command == 'eval':
        registry = build_registry(gauge, convention, alphabet, config.scalar_value('m2'),
                                  extra_rule_files=config.rule_files)
        registry['delta'] = gauge_variation_derivation(convention, alphabet)
        value = evaluate_text(args.expression, alphabet, registry)
        _write(f"{value}\n".encode('utf-8'), args.out)
        return None
    raise UsageError(f"unknown command '{command}'")


def _write(payload: bytes, out: Optional[str]):
    if out:
        with open(out, 'wb') as fh:
            fh.write(payload)
        logger.info(f"Report written to {out}")
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.flush()


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one command and write its report.

    Returns:
        exit status (see module docstring)
    """
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        config = load_config(args.config)
        setup_logger('src', level=log_level(config))
        report = _run(args, config)
        if report is None:
            return EXIT_PASS
        if config.digest:
            report.input_digests['config'] = config.digest
        _write(emit_report(report, args.format, args.timing), args.out)
        if report.status == FAIL:
            logger.warning(f"{report.suite}: {len(report.relations) - report.passed_count} "
                           f"relation(s) do not pass")
        return report.exit_code
    except EngineError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run_command())


if __name__ == '__main__':
    main()
