"""Exception hierarchy for the package.

Callers can catch ``QuadrilineError`` for anything raised deliberately.
``InternalCheckError`` is reserved for invariants that the underlying theory
guarantees; seeing one means a bug, and the CLI maps it to exit code 3.
"""


class QuadrilineError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(QuadrilineError):
    """Malformed number literal, ratio literal, or configuration file."""


class FieldError(QuadrilineError):
    """Invalid field request (modulus not an odd prime, characteristic 2, ...)."""


class PreconditionError(QuadrilineError):
    """An operation was called outside its documented preconditions."""


class AllParallelError(PreconditionError):
    """All four input lines are parallel; use the all-parallel analysis instead."""


class ConcurrentLinesError(PreconditionError):
    """All four input lines pass through a single point."""


class ReflectionUnavailableError(PreconditionError):
    """No reflection parameter removes vertical lines (tiny finite fields only)."""


class AtInfinityError(PreconditionError):
    """A rectangle at infinity has no affine center or vertices."""


class ParallelPairError(PreconditionError):
    """A construction needs an affine intersection that a parallel pair denies."""

    def __init__(self, pair, message=None):
        self.pair = pair
        super().__init__(message or f"lines {pair[0]} and {pair[1]} do not meet affinely")


class DegenerateConfigError(PreconditionError):
    """Operation defined only for non-degenerate configurations."""


class InternalCheckError(QuadrilineError):
    """A theorem-backed invariant failed; indicates a bug in this package."""
