import os

# commands
COMMAND_CLASS = "class"
COMMAND_COUNT = "count"
COMMAND_VERIFY = "verify"
COMMAND_TABLE = "table"
COMMAND_FATNEXUS = "fatnexus"
COMMAND_MATROID = "matroid"
COMMANDS = [
    COMMAND_CLASS,
    COMMAND_COUNT,
    COMMAND_VERIFY,
    COMMAND_TABLE,
    COMMAND_FATNEXUS,
    COMMAND_MATROID,
]

# output formats
FORMAT_TEXT = "text"
FORMAT_JSON = "json"
FORMATS = [
    FORMAT_TEXT,
    FORMAT_JSON,
]

# targets of the engine
TARGET_Y = "Y"
TARGET_YTORUS = "Ytorus"

# rule identifiers, mapped to the statement they implement
RULE_RANK_ZERO = "rank-zero"
RULE_LOOP = "loop"
RULE_PARALLEL = "parallel"
RULE_COLOOP = "coloop"
RULE_DISCONNECTED = "disconnected"
RULE_RANK_ONE = "rank-one"
RULE_FAT_NEXUS = "fat-nexus"
RULE_RANK_TWO = "rank-two"
RULE_CORANK_ONE = "corank-one"
RULE_SERIES = "series"
RULE_CORANK_TWO = "corank-two"
RULE_DUAL_FLATS = "dual-flats"
RULE_DUAL_FLATS_SHORT = "dual-flats-short"
RULE_STRATIFICATION = "stratification"
RULE_INVERSION = "inversion"
RULE_INVERSION_DUAL = "inversion-dual"
RULE_SINGLETON = "singleton"
RULE_TORUS = "torus"
RULE_UNIFORM = "uniform"
RULE_DUALITY = "duality"
RULE_REFERENCE = "reference"
RULE_CACHED = "cached"
RULE_BLOCKED = "blocked"
RULE_UNRESOLVED = "unresolved"

RULE_CITATIONS = {
    RULE_RANK_ZERO: "all loops: Y is the whole projective space, [P^(n-1)] = n",
    RULE_LOOP: "deleting a loop multiplies [Y] by L",
    RULE_PARALLEL: "deleting a parallel element multiplies [Y] by L",
    RULE_COLOOP: "a coloop in rank > 1 splits off a factor T",
    RULE_DISCONNECTED: "loopless disconnected matroid splits off a factor T",
    RULE_RANK_ONE: "rank one: a point times affine space; free matroid delta(1,n)",
    RULE_FAT_NEXUS: "torus action from a nexus or fat nexus of the simplification",
    RULE_RANK_TWO: "connected rank two: [Y] = L^(n-2)",
    RULE_CORANK_ONE: "circuit U(n-1,n): (-1)^(n-1)",
    RULE_SERIES: "series pair: [Y] = -[Y/e] + [Y minus {e,f}]",
    RULE_CORANK_TWO: "U(n-2,n): (-1)^(n-1) (n^2-5n+2)/2",
    RULE_DUAL_FLATS: "duality through independent flats of the dual",
    RULE_DUAL_FLATS_SHORT: "duality short cut: [Y(M^perp)] = [Y°(M)]",
    RULE_STRATIFICATION: "toric stratification over spanning connected subsets",
    RULE_INVERSION: "Moebius inversion of the toric stratification",
    RULE_INVERSION_DUAL: "Moebius inversion carried out on the dual matroid",
    RULE_SINGLETON: "single element: Y° is a point",
    RULE_TORUS: "torus orbit of dimension n-1 (all loops), or loop/coloop factor T",
    RULE_UNIFORM: "uniform matroid closed form",
    RULE_DUALITY: "Cremona involution identifies Y°(M) and Y°(M^perp)",
    RULE_REFERENCE: "class established outside the rule calculus",
    RULE_CACHED: "memoized result",
    RULE_BLOCKED: "target already in progress (cycle)",
    RULE_UNRESOLVED: "no rule applies",
}

# defaults
DEFAULT_MATROID_CAP = 24
DEFAULT_SUBSET_CAP = 20
DEFAULT_BUDGET = 10**8
DEFAULT_PRIMES = (3, 5, 7)
SUPPORTED_PRIMES = (3, 5, 7, 11, 13)
DEFAULT_CRT_BOUND = 29

# environment variables
ENV_BUDGET = "GROTHMODT_BUDGET"
ENV_LOGLEVEL = "GROTHMODT_LOGLEVEL"

# exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def default_budget() -> int:
    """
    Returns the point count budget, taking the environment variable into account.

    :return: the maximum number of evaluations
    :rtype: int
    """
    value = os.environ.get(ENV_BUDGET)
    if value is None or len(value.strip()) == 0:
        return DEFAULT_BUDGET
    try:
        return int(float(value))
    except ValueError:
        raise InputError("Invalid value for %s: %s" % (ENV_BUDGET, value))


class GrothmodtError(Exception):
    """
    Base class for all errors raised by this library.
    """
    pass


class InputError(GrothmodtError):
    """
    Malformed or unsupported input (parse errors, invalid graphs/matrices).
    """

    def __init__(self, msg: str, line: int = None):
        if line is not None:
            msg = "line %d: %s" % (line, msg)
        super().__init__(msg)
        self.line = line


class CapExceededError(GrothmodtError):
    """
    An enumeration would exceed the configured element cap.
    """
    pass


class BudgetExceededError(GrothmodtError):
    """
    Point counting would exceed the configured evaluation budget.
    """
    pass


class CrtError(GrothmodtError):
    """
    Residues are inconsistent or do not determine a unique integer.
    """
    pass


class IdentityViolation(GrothmodtError):
    """
    An exact point count identity failed, which signals a bug.
    """
    pass
