"""
Block counts b_k of the projective zero-sum designs.

Three independent routes to the same table for v = 2^n - 1:

    brute          enumerate zero-sum k-subsets of the nonzero vectors
    closed-form    b_k = C(v,k) alpha_h with h = floor((k-1)/2)
    macwilliams    weights of the Hamming code of length v

The counts satisfy (k+1) b_(k+1) + b_k + (v-k+1) b_(k-1) = C(v,k).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from pydantic import BaseModel, Field

from design_lattice.boolean.enumerate import count_zero_sum_subsets
from design_lattice.config import ENUMERATION
from design_lattice.errors import AuditFailed, BudgetExceeded, NonIntegral, PreconditionError
from design_lattice.utils.logging import audit_logger
from design_lattice.utils.metrics import record_audit

logger = logging.getLogger(__name__)

MAX_N = 16


class CountMethod(str, Enum):
    BRUTE = "brute"
    CLOSED_FORM = "closed-form"
    MACWILLIAMS = "macwilliams"
    ALL = "all"


class CountTableModel(BaseModel):
    """Count JSON; counts are decimal strings."""

    n: int = Field(..., ge=1)
    v: int
    method: str
    b: list[str]


@dataclass(frozen=True)
class CountTable:
    """b_0..b_v for the nonzero vectors of Z_2^n."""

    n: int
    v: int
    b: tuple[int, ...]
    method: CountMethod

    def __getitem__(self, k: int) -> int:
        return self.b[k]

    def to_model(self) -> CountTableModel:
        return CountTableModel(n=self.n, v=self.v, method=self.method.value, b=[str(x) for x in self.b])

    def supplement_counts(self) -> tuple[int, ...]:
        """Blocks of the supplementary designs: C(v,k) - b_k."""
        return tuple(comb(self.v, k) - b for k, b in enumerate(self.b))

    def recurrence_failure(self) -> int | None:
        """First k in 1..v-1 where the three-term recurrence fails, else None."""
        v, b = self.v, self.b
        for k in range(1, v):
            if (k + 1) * b[k + 1] + b[k] + (v - k + 1) * b[k - 1] != comb(v, k):
                return k
        return None


# ---------------------------------------------------------------------------
# alpha_h
# ---------------------------------------------------------------------------


def _ratio(v: int, m: int) -> Fraction:
    return Fraction(2 * m + 1, v - 2 * m + 2)


def _check_alpha_args(v: int, h: int) -> None:
    if v < 3 or v % 2 == 0:
        raise PreconditionError(f"v must be odd and at least 3, got {v}")
    if not 0 <= h <= (v - 1) // 2:
        raise PreconditionError(f"h={h} outside 0..{(v - 1) // 2}")


def alpha_product(v: int, h: int) -> Fraction:
    """
    alpha_h = (1/(v-2h)) (1 - sum_{i=0}^{h-2} (-1)^i prod_{j=0}^{i} (1+2(h-j)) / (v-2(h-j-1))).

    The alternating sum of nested products is evaluated innermost first.
    """
    _check_alpha_args(v, h)
    nested = Fraction(0)
    for m in range(2, h + 1):
        nested = _ratio(v, m) * (1 - nested)
    return (1 - nested) / (v - 2 * h)


def alpha_double_factorial(v: int, h: int) -> Fraction:
    """
    alpha_h = (1/(v-2h)) sum_{i=0}^{h-1} (-1)^i (2h+1)!!/(2(h-i)+1)!! * (v-2h)!!/(v-2(h-i))!!.

    Successive terms differ by the factor (2(h-i)+3) / (v-2(h-i)).
    """
    _check_alpha_args(v, h)
    total = Fraction(0)
    term = Fraction(1)
    for i in range(h):
        if i:
            term *= Fraction(2 * (h - i) + 3, v - 2 * (h - i))
        total += term if i % 2 == 0 else -term
    return total / (v - 2 * h)


def alpha_table(v: int) -> list[Fraction]:
    """alpha_0..alpha_((v-1)/2), sharing the nested sum between consecutive h."""
    _check_alpha_args(v, 0)
    alphas = []
    nested = Fraction(0)
    for h in range((v - 1) // 2 + 1):
        if h >= 2:
            nested = _ratio(v, h) * (1 - nested)
        alphas.append((1 - nested) / (v - 2 * h))
    return alphas


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


def _dimension(n: int) -> int:
    if not 2 <= n <= MAX_N:
        raise PreconditionError(f"n={n} outside 2..{MAX_N}")
    return 2**n - 1


def brute_counts(n: int, budget: int | None = None) -> tuple[int, ...]:
    """Enumerate every k; each C(v,k) must be within budget."""
    v = _dimension(n)
    limit = budget if budget is not None else ENUMERATION.BUDGET
    largest = comb(v, v // 2)
    if largest > limit:
        raise BudgetExceeded(f"brute counts for n={n}", largest, limit)
    return tuple(count_zero_sum_subsets(n, k, budget) for k in range(v + 1))


def closed_form_counts(n: int) -> tuple[int, ...]:
    """
    b_k = C(v,k) alpha_floor((k-1)/2) for 3 <= k <= v, with b_0 = 1 and b_1 = b_2 = 0.

    For n up to ALPHA_CROSSCHECK_MAX_N every alpha_h is also evaluated in
    its double-factorial form and compared exactly.

    Raises:
        NonIntegral: If some C(v,k) alpha_h is not an integer.
        AuditFailed: If the two forms of alpha_h disagree.
    """
    v = _dimension(n)
    alphas = alpha_table(v)
    if n <= ENUMERATION.ALPHA_CROSSCHECK_MAX_N:
        for h, alpha in enumerate(alphas[1:], start=1):
            other = alpha_double_factorial(v, h)
            if other != alpha:
                raise AuditFailed("alpha_h forms agree", {"v": v, "h": h, "product": str(alpha), "double_factorial": str(other)})

    counts = [1, 0, 0]
    for k in range(3, v + 1):
        value = comb(v, k) * alphas[(k - 1) // 2]
        if value.denominator != 1:
            raise NonIntegral(f"b_{k}", value.numerator, value.denominator)
        counts.append(value.numerator)
    return tuple(counts[: v + 1])


def hamming_weight_enumerator(n: int) -> tuple[int, ...]:
    """
    Weight distribution A_0..A_v of the Hamming code of length v = 2^n - 1.

    A_k = (C(v,k) + v c_k) / 2^n, where c_k is the coefficient of y^k in
    (1 - y^2)^a (1 - y) with a = (v-1)/2; this is the MacWilliams transform
    of the simplex code evaluated at x = 1.
    """
    v = _dimension(n)
    a = (v - 1) // 2
    weights = []
    for k in range(v + 1):
        half = k // 2
        if half > a:
            c = 0
        elif k % 2 == 0:
            c = (-1) ** half * comb(a, half)
        else:
            c = -((-1) ** half) * comb(a, half)
        numerator = comb(v, k) + v * c
        if numerator % 2**n:
            raise NonIntegral(f"A_{k}", numerator, 2**n)
        weights.append(numerator // 2**n)
    return tuple(weights)


def block_counts(n: int, method: CountMethod | str, budget: int | None = None) -> CountTable:
    """
    Count table b_0..b_v by one method, or by all methods in budget.

    With ``all`` every method that fits the budget runs and the tables must
    agree exactly; brute force is skipped when out of budget.

    Raises:
        BudgetExceeded: If brute force is requested beyond the budget.
        AuditFailed: If methods disagree or the recurrence fails.
    """
    method = CountMethod(method)
    v = _dimension(n)
    if method is CountMethod.BRUTE:
        table = brute_counts(n, budget)
    elif method is CountMethod.CLOSED_FORM:
        table = closed_form_counts(n)
    elif method is CountMethod.MACWILLIAMS:
        table = hamming_weight_enumerator(n)
    else:
        tables = {
            CountMethod.CLOSED_FORM: closed_form_counts(n),
            CountMethod.MACWILLIAMS: hamming_weight_enumerator(n),
        }
        try:
            tables[CountMethod.BRUTE] = brute_counts(n, budget)
        except BudgetExceeded:
            logger.info("Brute-force counts for n=%d out of budget, skipped", n)
        table = tables[CountMethod.MACWILLIAMS]
        for name, other in tables.items():
            if other != table:
                k = next(i for i, (x, y) in enumerate(zip(other, table, strict=True)) if x != y)
                record_audit("counts", passed=False)
                raise AuditFailed(f"{name.value} agrees with macwilliams", {"k": k, name.value: other[k], "macwilliams": table[k]})
        record_audit("counts", passed=True)
        audit_logger.log_audit("counts", passed=True, detail={"n": n, "methods": sorted(m.value for m in tables)})

    result = CountTable(n=n, v=v, b=table, method=method)
    failure = result.recurrence_failure()
    if failure is not None:
        raise AuditFailed("b_k recurrence", {"k": failure})
    return result
