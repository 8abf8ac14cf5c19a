"""Core constants for the Goldman-Turaev toolkit"""

from enum import Enum
from fractions import Fraction


class Model(Enum):
    GEOMETRIC = "geometric"
    SKEIN = "skein"
    GRADED = "graded"


class Operation(Enum):
    BRACKET = "bracket"
    MU = "mu"
    COBRACKET = "cobracket"


class Suite(Enum):
    JACOBI = "jacobi"
    COJACOBI = "cojacobi"
    COCYCLE = "cocycle"
    EPSILON = "epsilon"
    CONWAY_EXP = "conway-exp"
    SYMBOLS = "symbols"


class Quotient(Enum):
    SLASH_ONE = "/1"
    ONE_HALF = "1/2"


class Direction(Enum):
    ASCENDING = "asc"
    DESCENDING = "desc"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"


class KinkSite(Enum):
    START = "start"  # near the bullet endpoint
    END = "end"  # near the star endpoint


# Exit codes
EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CONSISTENCY = 3
EXIT_SUITE_FAILURE = 4

# Defaults
DEFAULT_PUNCTURES = 2
DEFAULT_GRADED_DEGREE = 8
DEFAULT_EXPANSION_DEGREE = 6
DEFAULT_SEED = 0
DEFAULT_TRIALS = 100
DEFAULT_MAX_LEN = 3
MAX_LAYERS = 8

# Disc geometry (exact)
BULLET = (Fraction(2, 5), Fraction(-1))
STAR = (Fraction(3, 5), Fraction(-1))
KINK_DIAMETER = Fraction(1, 64)

# Letter namespaces of the textual grammar
GROUP_LETTER = "g"
GRADED_LETTER = "x"
