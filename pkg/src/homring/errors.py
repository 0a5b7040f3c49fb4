"""Exception hierarchy with stable CLI exit codes.

Every error the package raises on a user-triggerable path derives from
:class:`HomringError` and carries a distinct ``exit_code`` so shell scripts can
branch on the failure class.  ``InternalInvariantViolation`` is reserved for
cross-checks that can only fail on a bug in this package itself.
"""

from __future__ import annotations


class HomringError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class InvalidParameter(HomringError):
    """A numeric or structural argument is outside its documented domain."""

    exit_code = 2


class InvalidRing(HomringError):
    """Explicit operation tables do not describe a commutative unital ring."""

    exit_code = 3


class NotLocal(HomringError):
    """A construction that needs a local ring was handed a non-local one."""

    exit_code = 4


class ValidationFailed(HomringError):
    """A candidate trace map failed validation.

    ``primary`` is the first failed check in the fixed order
    (NotLinear, KernelContainsIdeal, NotSurjective); ``report`` is the full
    validation report with witnesses.
    """

    exit_code = 5

    def __init__(self, primary: str, report=None, message: str | None = None):
        self.primary = primary
        self.report = report
        super().__init__(message or f"validation failed: {primary}")


class NotGenerating(HomringError):
    """A character (or the ring itself) fails the generating criterion."""

    exit_code = 6


class NotRational(HomringError):
    """A cyclotomic value expected to be rational has nonzero root terms."""

    exit_code = 7

    def __init__(self, coeffs, conductor: int):
        self.coeffs = tuple(coeffs)
        self.conductor = conductor
        super().__init__(
            f"cyclotomic value with conductor {conductor} is not rational: "
            f"coefficients {self.coeffs}"
        )


class BudgetExceeded(HomringError):
    """An enumeration would exceed the configured budget."""

    exit_code = 8


class BadPermutation(HomringError):
    """A permutation argument is not a bijection of the expected index set."""

    exit_code = 9


class WrongRingFamily(HomringError):
    """The ring family does not support the requested construction."""

    exit_code = 10


class OutOfRange(HomringError):
    """A closed-form family was instantiated outside its parameter range."""

    exit_code = 11


class NotTwoWeight(HomringError):
    """Graph construction requires exactly two distinct nonzero weights."""

    exit_code = 12

    def __init__(self, count: int, weights=()):
        self.count = count
        self.weights = tuple(weights)
        super().__init__(f"code has {count} distinct nonzero weights, need exactly 2")


class ParseError(HomringError):
    """Malformed spec string or config text."""

    exit_code = 13

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + where)


class UnknownPreset(HomringError):
    """A named preset does not exist or does not apply to the given ring."""

    exit_code = 14


class SingularSystem(HomringError):
    """The triangular orbit-sum system has no unique solution."""

    exit_code = 15


class InternalInvariantViolation(HomringError):
    """A redundant cross-check failed; indicates a bug in this package."""

    exit_code = 70
