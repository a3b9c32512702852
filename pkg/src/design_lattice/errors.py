"""
Exception hierarchy with exit-code flags.

Every error raised by the library derives from DesignLatticeError. The
class-level ``exit_code`` tells the command line how to report it: 1 for
domain failures (the input is not what it claims to be), 2 for usage and
precondition failures (the request itself is malformed).
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any


class DesignLatticeError(RuntimeError):
    """Base exception for design-lattice operations."""

    exit_code: int = 1


# ---------------------------------------------------------------------------
# Domain errors (exit 1)
# ---------------------------------------------------------------------------


class DesignError(DesignLatticeError):
    """An incidence structure fails a design property."""

    exit_code: int = 1


class NotADesign(DesignError):
    """Two t-subsets of points lie in different numbers of blocks."""

    def __init__(
        self,
        t: int,
        witness: tuple[tuple[int, ...], int, tuple[int, ...], int],
    ) -> None:
        first, first_count, second, second_count = witness
        self.t = t
        self.witness = witness
        super().__init__(
            f"not a {t}-design: {list(first)} lies in {first_count} blocks, "
            f"{list(second)} lies in {second_count} blocks"
        )


class EmptyFamily(DesignError):
    """The block family is empty."""

    def __init__(self, message: str = "block family is empty") -> None:
        super().__init__(message)


class IsolatedPoint(DesignError):
    """A point lies in no block."""

    def __init__(self, point: int) -> None:
        self.point = point
        super().__init__(f"point {point} lies in no block")


class NonIntegral(DesignError):
    """A parameter formula produced a non-integer."""

    def __init__(self, what: str, numerator: int, denominator: int) -> None:
        self.what = what
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{what} = {numerator}/{denominator} is not an integer")


class AuditFailed(DesignLatticeError):
    """An identity that must hold exactly did not."""

    exit_code: int = 1

    def __init__(self, which: str, witness: Any = None) -> None:
        self.which = which
        self.witness = witness
        detail = f" (witness: {witness})" if witness is not None else ""
        super().__init__(f"audit failed: {which}{detail}")


class NotAZeroSumBlock(DesignLatticeError):
    """A block handed to a zero-sum operation is not a zero-sum block."""

    exit_code: int = 1

    def __init__(self, block: Sequence[int], reason: str) -> None:
        self.block = tuple(block)
        self.reason = reason
        super().__init__(f"{list(block)} is not a zero-sum block: {reason}")


class DesignFormatError(DesignLatticeError):
    """A serialized design or matrix was rejected."""

    exit_code: int = 1


# ---------------------------------------------------------------------------
# Usage and precondition errors (exit 2)
# ---------------------------------------------------------------------------


class PreconditionError(DesignLatticeError):
    """An operation was called outside its stated domain."""

    exit_code: int = 2


class NotPrime(PreconditionError):
    """A characteristic argument is not prime."""

    def __init__(self, p: int) -> None:
        self.p = p
        super().__init__(f"{p} is not prime")


class DimensionMismatch(PreconditionError):
    """Vector or matrix shapes do not agree."""

    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(f"dimension mismatch: expected {expected}, got {actual}")


class SpecInvalid(PreconditionError):
    """Boolean construction parameters are out of range."""


class BudgetExceeded(PreconditionError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, what: str, size: int, budget: int) -> None:
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: {size} candidates exceed the budget of {budget}")
