"""
Rule tables.

Built-in tables live next to this module as `*.rules` files, one line per
rule:

    <derivation> <generator> = <expression>

with `#` starting a comment. Images are written in the expression language.
"""

import logging
import os
from typing import Dict, Mapping, Optional, Sequence

from ..algebra.element import Element, apply_dpp, replace_generator
from ..algebra.grading import Alphabet, Grading, default_alphabet, derived_name
from ..dsl.evaluator import Evaluator, known_identifiers
from ..dsl.parser import parse_expression
from ..exceptions import ConfigurationError, DslSyntaxError
from .derivation import Derivation, ghost_number_derivation

logger = logging.getLogger(__name__)

TABLES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'tables')

DERIVATION_GRADINGS = {
    's': Grading(1, 1, 0),
    'sbar': Grading(1, -1, 0),
    'd1': Grading(0, 2, 0),
    'd2': Grading(0, -2, 0),
    'dFP': Grading(0, 0, 0),
    'delta': Grading(0, 0, 0),
}

GAUGE_ALIASES = {
    'landau': 'landau',
    'linear': 'linear',
    'cf': 'curci_ferrari',
    'curci-ferrari': 'curci_ferrari',
    'curci_ferrari': 'curci_ferrari',
    'massive-cf': 'massive_cf',
    'massive_cf': 'massive_cf',
}

CONVENTION_ALIASES = {
    'verbatim': 'verbatim',
    'leibniz': 'leibniz_consistent',
    'leibniz-consistent': 'leibniz_consistent',
    'leibniz_consistent': 'leibniz_consistent',
}

GAUGE_FIELDS = ('q', 'qbar', 'V_L', 'V_R')


def normalize_gauge(name: str) -> str:
    try:
        return GAUGE_ALIASES[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown gauge '{name}', expected one of {sorted(GAUGE_ALIASES)}") from None


def normalize_convention(name: str) -> str:
    try:
        return CONVENTION_ALIASES[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown convention '{name}', expected one of {sorted(CONVENTION_ALIASES)}") from None


def _short(convention: str) -> str:
    return 'leibniz' if normalize_convention(convention) == 'leibniz_consistent' else 'verbatim'


def table_path(name: str) -> str:
    return os.path.join(TABLES_DIR, f"{name}.rules")


def parse_rules(text: str, alphabet: Alphabet, source: str = '<string>') -> Dict[str, Dict[str, Element]]:
    """
    Read rule lines into {derivation: {generator: image}}.

    Args:
        text: rule file contents
        alphabet: alphabet the images are written over
        source: file name used in error messages

    Returns:
        Images grouped by derivation name, in file order
    """
    rules: Dict[str, Dict[str, Element]] = {}
    evaluator = Evaluator(alphabet)
    known = known_identifiers(alphabet)
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition('=')
        parts = head.split()
        if not sep or len(parts) != 2:
            raise ConfigurationError(
                f"{source}:{number}: expected '<derivation> <generator> = <expression>'")
        derivation, generator = parts
        if generator not in alphabet:
            raise ConfigurationError(f"{source}:{number}: unknown generator '{generator}'")
        if generator in rules.get(derivation, {}):
            raise ConfigurationError(
                f"{source}:{number}: second rule for {derivation}({generator})")
        try:
            image = evaluator.evaluate(parse_expression(body.strip(), known, derivations=()))
        except DslSyntaxError as e:
            raise ConfigurationError(f"{source}:{number}: {e}") from e
        rules.setdefault(derivation, {})[generator] = image
    return rules


def load_rule_file(path: str, alphabet: Alphabet) -> Dict[str, Dict[str, Element]]:
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    logger.debug(f"Loading rule table {path}")
    return parse_rules(text, alphabet, source=os.path.basename(path))


def make_derivations(rule_sets: Mapping[str, Mapping[str, Element]],
                     alphabet: Alphabet) -> Dict[str, Derivation]:
    derivations = {}
    for name, rules in rule_sets.items():
        if name not in DERIVATION_GRADINGS:
            raise ConfigurationError(f"rule table defines unknown derivation '{name}'")
        derivations[name] = Derivation(name, alphabet, DERIVATION_GRADINGS[name], dict(rules))
    return derivations


def brst_table_name(gauge: str, convention: str, symmetric: bool = False) -> str:
    gauge = normalize_gauge(gauge)
    base = 'linear' if gauge in ('landau', 'linear') else gauge
    name = f"{base}_{_short(convention)}"
    if symmetric:
        if name != 'linear_verbatim':
            raise ConfigurationError("the mirrored R-sector reading exists for the verbatim linear table only")
        name += '_symmetric'
    return name


def brst_registry(gauge: str, convention: str, alphabet: Optional[Alphabet] = None,
                  fp_scale=2, symmetric: bool = False,
                  extra_rule_files: Sequence[str] = ()) -> Dict[str, Derivation]:
    """
    s, sbar, d1, d2 and dFP for one gauge under one convention.

    Args:
        gauge: landau, linear, curci_ferrari or massive_cf (aliases accepted)
        convention: verbatim or leibniz_consistent
        alphabet: generator table, the default alphabet when omitted
        fp_scale: dFP multiplies by fp_scale times the ghost number
        symmetric: use the mirrored R-sector reading of the verbatim linear table
        extra_rule_files: rule files whose lines override the built-in ones

    Returns:
        Derivations by name
    """
    alphabet = alphabet or default_alphabet()
    rule_sets: Dict[str, Dict[str, Element]] = {}
    paths = [table_path(brst_table_name(gauge, convention, symmetric)), table_path('no_algebra')]
    paths.extend(extra_rule_files)
    for path in paths:
        for name, rules in load_rule_file(path, alphabet).items():
            rule_sets.setdefault(name, {}).update(rules)
    registry = make_derivations(rule_sets, alphabet)
    registry['dFP'] = ghost_number_derivation(alphabet, fp_scale)
    return registry


def gauge_variation_derivation(convention: str, alphabet: Optional[Alphabet] = None) -> Derivation:
    alphabet = alphabet or default_alphabet()
    rules = load_rule_file(table_path(f"gauge_{_short(convention)}"), alphabet)
    return make_derivations(rules, alphabet)['delta']


def gauge_variation(field: str, convention: str = 'verbatim',
                    params: Optional[Mapping[str, Element]] = None,
                    alphabet: Optional[Alphabet] = None) -> Element:
    """
    First-order gauge variation of q, qbar, V_L or V_R.

    Args:
        field: generator name
        convention: sign convention for nabla++ Lambda
        params: optional replacements for Lam_L / Lam_R (e.g. zero)
        alphabet: generator table

    Returns:
        The variation as an Element
    """
    if field not in GAUGE_FIELDS:
        raise ConfigurationError(f"no gauge variation for '{field}', expected one of {GAUGE_FIELDS}")
    delta = gauge_variation_derivation(convention, alphabet)
    return substitute_gauge_parameters(delta.image(field), params or {})


def substitute_gauge_parameters(result: Element, params: Mapping[str, Element]) -> Element:
    """Replace Lam_L / Lam_R (and their D++ images) by the given Elements."""
    for name, value in params.items():
        if name not in ('Lam_L', 'Lam_R'):
            raise ConfigurationError(f"gauge parameter must be Lam_L or Lam_R, got '{name}'")
        result = replace_generator(result, name, value)
        derived = derived_name(name)
        while derived in result.alphabet:
            value = apply_dpp(value)
            result = replace_generator(result, derived, value)
            derived = derived_name(derived)
    return result
