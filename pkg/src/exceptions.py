"""Exception hierarchy for the verification engine."""

from typing import Iterable, List, Optional, Sequence, Tuple


class EngineError(Exception):
    """Base class for every error raised by the engine."""


class ConfigurationError(EngineError):
    """Invalid alphabet, rule table or configuration file."""


class GradingError(EngineError):
    """Inhomogeneous input where a homogeneous one is required.

    Attributes:
        offending: (word text, grading text) pairs that disagree
    """

    def __init__(self, message: str, offending: Optional[Iterable[Tuple[str, str]]] = None):
        self.offending: List[Tuple[str, str]] = list(offending or [])
        if self.offending:
            details = "; ".join(f"{word}: {grading}" for word, grading in self.offending)
            message = f"{message} [{details}]"
        super().__init__(message)


class UndefinedActionError(EngineError):
    """A derivation has no rule for a generator it was applied to."""

    def __init__(self, derivation: str, generator: str):
        self.derivation = derivation
        self.generator = generator
        super().__init__(f"derivation '{derivation}' has no rule for generator '{generator}'")


class DepthError(EngineError):
    """Derived generator nesting exceeds the configured bound."""


class SearchSpaceError(EngineError):
    """Calibration grid too large for the configured bound."""


class UnknownSuiteError(EngineError):
    """Requested verification suite is not registered."""


class BasisError(EngineError):
    """Superspace polynomial carries no coordinate-basis flag."""


class DslSyntaxError(EngineError):
    """Positioned syntax error in the expression language."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at column {position + 1}\n  {text}\n  {pointer}")


class ResolutionError(EngineError):
    """Identifier in an expression that names nothing known."""

    def __init__(self, name: str, near_matches: Sequence[str] = ()):
        self.name = name
        self.near_matches = list(near_matches)
        hint = f" (did you mean: {', '.join(self.near_matches)})" if self.near_matches else ""
        super().__init__(f"unknown identifier '{name}'{hint}")
