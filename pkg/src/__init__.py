"""Symbolic verification engine for the deformed ABJ BRST algebra."""

from .utils.constants import ENGINE_VERSION

__version__ = ENGINE_VERSION
