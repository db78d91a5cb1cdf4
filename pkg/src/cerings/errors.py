"""Exception hierarchy shared by all modules."""


class RingError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(RingError):
    """A vector or matrix has the wrong shape for the requested operation."""


class InvalidRingError(RingError):
    """Input data does not define a valid object (bad prime, non-associative
    table, broken unit law, malformed file, invalid group table, ...)."""


class CapExceededError(RingError):
    """An exhaustive routine would exceed the configured enumeration budget."""


class HypothesisError(RingError):
    """A formula was invoked on a ring that does not satisfy its hypotheses
    (e.g. the graded center formula on a ring with 2-torsion)."""


class DegenerateQuotientError(RingError):
    """Quotient by the improper ideal was requested."""


class DecompositionUnavailableError(RingError):
    """Ring has a noncentral idempotent, so the central block decomposition
    does not apply."""


class TheoremViolationError(RingError):
    """A proved implication failed on concrete data.

    Distinct from a predicate merely being false: every assertion guarded by
    this error is a mathematical theorem, so a violation always signals an
    implementation bug, never an interesting ring.
    """
