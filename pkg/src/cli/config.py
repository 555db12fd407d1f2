"""
Engine configuration.

A YAML file is merged over DEFAULTS; an unknown key anywhere is a
ConfigurationError. Without an explicit path the file named by
ABJ_VERIFY_CONFIG (environment or .env) is used, if any.
"""

import copy
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

import yaml
from dotenv import load_dotenv

from ..algebra.grading import Alphabet, default_alphabet
from ..algebra.scalars import Scalar
from ..derivations.tables import normalize_convention, normalize_gauge
from ..dsl.evaluator import parse_scalar
from ..exceptions import ConfigurationError
from ..star_product.deformation import ENTRY_NAMES, DeformationTensor
from ..utils.constants import (
    CALIBRATION_MAX_UNKNOWNS, DEFAULT_SAMPLES, DERIVED_DEPTH_BOUND, EXACTNESS_WORD_LENGTH,
    RANDOM_SEED,
)
from ..utils.helpers import file_digest

logger = logging.getLogger(__name__)

CONFIG_ENV = 'ABJ_VERIFY_CONFIG'
LOG_LEVEL_ENV = 'ABJ_VERIFY_LOG_LEVEL'

DEFAULTS: Dict[str, Any] = {
    'convention': 'leibniz_consistent',
    'gauge': 'linear',
    'alpha': None,
    'm2': None,
    'seed': RANDOM_SEED,
    'samples': DEFAULT_SAMPLES,
    'n_jobs': 1,
    'log_level': 'INFO',
    'bounds': {
        'derived_depth': DERIVED_DEPTH_BOUND,
        'calibration_unknowns': CALIBRATION_MAX_UNKNOWNS,
        'exactness_word_length': EXACTNESS_WORD_LENGTH,
    },
    'deformation': {
        'entries': None,
        'spacelike': False,
    },
    'generators': {},
    'rule_files': [],
}

GENERATOR_KEYS = {'sector', 'parity', 'ghost', 'hcharge', 'conj_image'}


def _merge(defaults: Mapping, overrides: Mapping, where: str = '') -> Dict:
    merged = copy.deepcopy(dict(defaults))
    for key, value in overrides.items():
        if key not in defaults:
            raise ConfigurationError(f"unknown configuration key '{where}{key}'")
        if isinstance(defaults[key], dict) and defaults[key] and isinstance(value, Mapping):
            merged[key] = _merge(defaults[key], value, f"{where}{key}.")
        else:
            merged[key] = value
    return merged


@dataclass
class EngineConfig:
    """Resolved configuration with typed accessors."""

    values: Dict[str, Any] = field(default_factory=lambda: copy.deepcopy(DEFAULTS))
    source: Optional[str] = None
    digest: Optional[str] = None

    def __getitem__(self, key: str) -> Any:
        return self.values[key]

    @property
    def seed(self) -> int:
        return int(self.values['seed'])

    @property
    def samples(self) -> int:
        return int(self.values['samples'])

    @property
    def n_jobs(self) -> int:
        return int(self.values['n_jobs'])

    @property
    def convention(self) -> str:
        return normalize_convention(self.values['convention'])

    @property
    def gauge(self) -> str:
        return normalize_gauge(self.values['gauge'])

    @property
    def rule_files(self) -> List[str]:
        return list(self.values['rule_files'] or [])

    def bound(self, name: str) -> int:
        return int(self.values['bounds'][name])

    def alphabet(self) -> Alphabet:
        alphabet = default_alphabet(self.bound('derived_depth'))
        overrides = self.values['generators'] or {}
        for name, entry in overrides.items():
            unknown = set(entry) - GENERATOR_KEYS
            if unknown:
                raise ConfigurationError(f"unknown keys for generator '{name}': {sorted(unknown)}")
        return alphabet.with_overrides(overrides) if overrides else alphabet

    def scalar_value(self, key: str) -> Optional[Scalar]:
        """alpha / m2 as a Scalar, None when left symbolic."""
        value = self.values[key]
        if value is None:
            return None
        return parse_scalar(str(value), default_alphabet())

    def deformation(self) -> DeformationTensor:
        section = self.values['deformation']
        entries = section.get('entries')
        if entries is None:
            tensor = DeformationTensor.symbolic()
        else:
            unknown = set(entries) - set(ENTRY_NAMES)
            if unknown:
                raise ConfigurationError(f"unknown deformation entries: {sorted(unknown)}")
            alphabet = default_alphabet()
            tensor = DeformationTensor.from_entries(
                {name: parse_scalar(str(value), alphabet) for name, value in entries.items()})
        return tensor.spacelike() if section.get('spacelike') else tensor


def load_config(path: Optional[str] = None) -> EngineConfig:
    """
    Load and validate a configuration file.

    Args:
        path: YAML file; falls back to $ABJ_VERIFY_CONFIG, then to DEFAULTS

    Returns:
        EngineConfig

    Raises:
        ConfigurationError: unreadable file, bad YAML or unknown keys
    """
    load_dotenv()
    path = path or os.getenv(CONFIG_ENV)
    if not path:
        return EngineConfig()
    try:
        with open(path, 'r', encoding='utf-8') as fh:
            data = yaml.safe_load(fh) or {}
    except OSError as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigurationError(f"invalid YAML in {path}: {e}") from e
    if not isinstance(data, Mapping):
        raise ConfigurationError(f"config file {path} must hold a mapping")
    logger.info(f"Loaded configuration from {path}")
    config = EngineConfig(_merge(DEFAULTS, data), source=path, digest=file_digest(path))
    normalize_convention(config['convention'])
    normalize_gauge(config['gauge'])
    return config


def log_level(config: EngineConfig) -> str:
    """Environment override first, then the config file."""
    load_dotenv()
    return os.getenv(LOG_LEVEL_ENV) or str(config['log_level'])
