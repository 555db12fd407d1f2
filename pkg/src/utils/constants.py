"""Project constants."""

from fractions import Fraction

ENGINE_VERSION = "1.0.0"

REPORT_SCHEMA_VERSION = 1

RANDOM_SEED = 42

DEFAULT_SAMPLES = 100

# Bounds
DERIVED_DEPTH_BOUND = 2
CALIBRATION_MAX_UNKNOWNS = 12
EXACTNESS_WORD_LENGTH = 4

CALIBRATION_GRID = (
    Fraction(0), Fraction(1, 2), Fraction(-1, 2),
    Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
)

SECTORS = ['L', 'R', 'matter', 'derived']

# Formal parameters of the scalar ring, in ring order.
PARAMETERS = ['alpha', 'k', 'm2']

SPINOR_INDICES = (1, 2)
VECTOR_INDICES = (0, 1, 2)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3
