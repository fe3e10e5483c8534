"""Exception taxonomy shared by all solver and I/O modules.

The CLI maps these onto distinct exit codes, so library code should raise
the most specific class that applies.
"""


class OrienteerError(Exception):
    """Base class for all package errors."""


class InputError(OrienteerError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class DegenerateInputError(InputError):
    """Geometrically degenerate input, e.g. coincident segment endpoints."""


class InfeasibleError(OrienteerError):
    """No solution exists under the stated constraints (CLI exit code 3)."""


class CapacityError(OrienteerError):
    """Instance exceeds a hard enumeration cap (CLI exit code 4)."""


class SamplingFailureError(OrienteerError):
    """Randomized search exhausted its attempt budget."""


class VerificationError(OrienteerError):
    """A solution failed an independent consistency check (CLI exit code 5)."""


class ConsistencyError(OrienteerError):
    """Internal invariant violated; indicates a bug, not bad input."""
