from .helpers import canonical_json, chunked, file_digest, format_fraction, near_matches
from .logger import setup_logger
from .constants import *

__all__ = ['canonical_json', 'chunked', 'file_digest', 'format_fraction', 'near_matches',
           'setup_logger']
