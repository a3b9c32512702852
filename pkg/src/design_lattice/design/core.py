"""
Finite incidence structures and t-design verification.

A Design is kept in canonical form (each block sorted, the family sorted
lexicographically, no repeated blocks), so equality of designs is plain
structural equality. Transforms return new designs and never mutate.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb, prod

from design_lattice.config import AUDIT, ENUMERATION
from design_lattice.errors import (
    AuditFailed,
    BudgetExceeded,
    EmptyFamily,
    IsolatedPoint,
    NonIntegral,
    NotADesign,
    PreconditionError,
)
from design_lattice.linalg.matrix import IntMatrix
from design_lattice.linalg.normal_forms import determinant
from design_lattice.utils.logging import audit_logger
from design_lattice.utils.metrics import record_audit

logger = logging.getLogger(__name__)

Block = tuple[int, ...]


@dataclass(frozen=True)
class Design:
    """
    Points 0..v-1 with a family of k-subsets in canonical form.

    Use ``Design.create`` to build one from arbitrary input; the constructor
    itself only accepts data that is already canonical.
    """

    v: int
    k: int
    blocks: tuple[Block, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.v < 1:
            raise PreconditionError(f"a design needs at least one point, got v={self.v}")
        if not 1 <= self.k <= self.v:
            raise PreconditionError(f"block size k={self.k} outside 1..{self.v}")
        if self.labels is not None and len(self.labels) != self.v:
            raise PreconditionError(f"{len(self.labels)} labels for {self.v} points")
        previous: Block | None = None
        for block in self.blocks:
            if len(block) != self.k:
                raise PreconditionError(f"block {list(block)} does not have size {self.k}")
            if any(b <= a for a, b in zip(block, block[1:], strict=False)):
                raise PreconditionError(f"block {list(block)} is not strictly increasing")
            if block[0] < 0 or block[-1] >= self.v:
                raise PreconditionError(f"block {list(block)} has a point outside 0..{self.v - 1}")
            if previous is not None and block <= previous:
                raise PreconditionError("blocks are repeated or not in canonical order")
            previous = block

    @classmethod
    def create(
        cls,
        v: int,
        blocks: Iterable[Iterable[int]],
        labels: Sequence[str] | None = None,
        k: int | None = None,
    ) -> Design:
        """
        Build a design in canonical form.

        Args:
            v: Number of points.
            blocks: Blocks in any order, points in any order.
            labels: Optional display name per point.
            k: Block size; required only when ``blocks`` is empty.

        Raises:
            PreconditionError: On repeated points, repeated blocks, mixed
                block sizes or out-of-range indices.
        """
        canonical = []
        for block in blocks:
            members = tuple(sorted(int(p) for p in block))
            if len(set(members)) != len(members):
                raise PreconditionError(f"block {list(members)} repeats a point")
            canonical.append(members)
        canonical.sort()
        for a, b in zip(canonical, canonical[1:], strict=False):
            if a == b:
                raise PreconditionError(f"block {list(a)} occurs twice")
        if k is None:
            if not canonical:
                raise PreconditionError("block size must be given for an empty family")
            k = len(canonical[0])
        return cls(
            v=v,
            k=k,
            blocks=tuple(canonical),
            labels=tuple(labels) if labels is not None else None,
        )

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def is_degenerate(self) -> bool:
        """True for an empty block family."""
        return not self.blocks

    @cached_property
    def block_masks(self) -> tuple[int, ...]:
        """Each block as a bitmask over point indices."""
        return tuple(sum(1 << p for p in block) for block in self.blocks)

    def blocks_through(self, point: int) -> list[Block]:
        return [block for block in self.blocks if point in block]

    def label(self, point: int) -> str:
        return self.labels[point] if self.labels is not None else str(point)


@dataclass(frozen=True)
class DesignParams:
    """Verified parameters of a t-(v,k,r_t) design."""

    t: int
    v: int
    k: int
    r_t: int
    b: int
    r: int
    lam: int | None
    levels: tuple[int, ...] = field(default=())
    symmetric: bool = False
    steiner: bool = False

    def describe(self) -> str:
        """Text form, e.g. ``2-(7,3,1), b=7, r=3``."""
        return f"{self.t}-({self.v},{self.k},{self.r_t}), b={self.b}, r={self.r}"


def _level(v: int, k: int, t: int, r_t: int, s: int) -> int:
    numerator = r_t * prod(v - i for i in range(s, t))
    denominator = prod(k - i for i in range(s, t))
    if numerator % denominator:
        raise NonIntegral(f"r_{s}", numerator, denominator)
    return numerator // denominator


def level_parameters(params: DesignParams, s: int) -> int:
    """
    Number of blocks through any s points of a t-design.

    r_s = r_t (v-s)...(v-t+1) / ((k-s)...(k-t+1)).

    Raises:
        PreconditionError: If s is outside 0..t.
        NonIntegral: If the quotient is not an integer.
    """
    if not 0 <= s <= params.t:
        raise PreconditionError(f"s={s} outside 0..{params.t}")
    return _level(params.v, params.k, params.t, params.r_t, s)


def _subset_counts(design: Design, s: int) -> Counter[Block]:
    counts: Counter[Block] = Counter()
    for block in design.blocks:
        counts.update(combinations(block, s))
    return counts


def _uniform_count(design: Design, s: int) -> int:
    """Blocks through every s-subset, counting C(k,s) subsets per block."""
    counts = _subset_counts(design, s)
    if s == 0:
        return design.b
    total = comb(design.v, s)
    if len(counts) < total:
        missing = next(sub for sub in combinations(range(design.v), s) if sub not in counts)
        present, present_count = next(iter(counts.items()))
        raise NotADesign(s, (missing, 0, present, present_count))
    values = iter(counts.items())
    first, first_count = next(values)
    for sub, count in values:
        if count != first_count:
            raise NotADesign(s, (first, first_count, sub, count))
    return first_count


def _exhaustive_count(design: Design, s: int) -> set[int]:
    """Distinct block counts over every s-subset of points, by direct mask tests."""
    found: set[int] = set()
    for sub in combinations(range(design.v), s):
        mask = sum(1 << p for p in sub)
        found.add(sum(1 for bm in design.block_masks if bm & mask == mask))
    return found


def verify_design(design: Design, t: int) -> DesignParams:
    """
    Verify that a design is a t-design and return its parameters.

    Every t-subset must lie in the same positive number r_t of blocks.
    Each lower level r_s is computed from r_t and cross-checked by counting.

    Args:
        design: Canonical design.
        t: Strength.

    Raises:
        EmptyFamily: If there are no blocks.
        PreconditionError: If t is outside 1..k.
        NotADesign: With two t-subsets whose counts differ.
        AuditFailed: If a computed r_s disagrees with direct counting.
    """
    if design.is_degenerate:
        raise EmptyFamily()
    if not 1 <= t <= design.k:
        raise PreconditionError(f"strength t={t} outside 1..{design.k}")

    r_t = _uniform_count(design, t)
    levels = [_level(design.v, design.k, t, r_t, s) for s in range(t)] + [r_t]

    for s in range(t):
        counted = _uniform_count(design, s)
        if counted != levels[s]:
            raise AuditFailed(f"r_{s} from r_{t}", {"formula": levels[s], "counted": counted})
        if s and design.v <= AUDIT.ORACLE_MAX_V:
            exhaustive = _exhaustive_count(design, s)
            if exhaustive != {levels[s]}:
                raise AuditFailed(f"r_{s} exhaustive", {"formula": levels[s], "counted": sorted(exhaustive)})

    b, r = levels[0], levels[1]
    if design.v * r != b * design.k:
        raise AuditFailed("v*r == b*k", {"v": design.v, "r": r, "b": b, "k": design.k})

    params = DesignParams(
        t=t,
        v=design.v,
        k=design.k,
        r_t=r_t,
        b=b,
        r=r,
        lam=levels[2] if t >= 2 else None,
        levels=tuple(levels),
        symmetric=t >= 2 and design.v == b,
        steiner=r_t == 1 and t == design.k - 1,
    )
    audit_logger.log_design_verified(t, design.v, design.k, r_t, b)
    return params


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------


def check_budget(what: str, size: int, budget: int | None = None) -> None:
    """Raise BudgetExceeded if size candidates exceed budget (default ENUMERATION.BUDGET)."""
    limit = budget if budget is not None else ENUMERATION.BUDGET
    if size > limit:
        raise BudgetExceeded(what, size, limit)


def complement(design: Design, params: DesignParams | None = None) -> Design:
    """
    Replace every block by its complement in the point set.

    When the parameters of the input are supplied and the complement is large
    enough to be verified at the same strength, its r_t is checked against
    inclusion-exclusion over the input's levels (b - 2r + lambda for t = 2).

    Raises:
        PreconditionError: If k == v.
        AuditFailed: If the complement's r_t disagrees with the formula.
    """
    if design.k >= design.v:
        raise PreconditionError("complement needs k < v")
    points = set(range(design.v))
    result = Design.create(
        design.v,
        (points.difference(block) for block in design.blocks),
        labels=design.labels,
        k=design.v - design.k,
    )
    if params is not None and not result.is_degenerate and result.k >= params.t:
        t = params.t
        expected = sum((-1) ** i * comb(t, i) * params.levels[i] for i in range(t + 1))
        actual = verify_design(result, t).r_t
        if actual != expected:
            raise AuditFailed("complement r_t", {"expected": expected, "actual": actual})
    return result


def supplement(
    design: Design,
    params: DesignParams | None = None,
    budget: int | None = None,
) -> Design:
    """
    Return the design whose blocks are the k-subsets that are not blocks.

    Args:
        design: Canonical design.
        params: Verified parameters; when given, the result is audited.
        budget: Cap on C(v,k); defaults to ENUMERATION.BUDGET.

    Raises:
        EmptyFamily: If the input already contains every k-subset.
        BudgetExceeded: If C(v,k) exceeds the enumeration budget.
        AuditFailed: If the result's r_t is not C(v-t,k-t) - r_t.
    """
    total = comb(design.v, design.k)
    if design.b >= total:
        raise EmptyFamily("the complete design has an empty supplement")
    check_budget("supplement", total, budget)
    present = set(design.blocks)
    result = Design.create(
        design.v,
        (sub for sub in combinations(range(design.v), design.k) if sub not in present),
        labels=design.labels,
        k=design.k,
    )
    if params is not None:
        t = params.t
        expected = comb(design.v - t, design.k - t) - params.r_t
        actual = verify_design(result, t).r_t
        if actual != expected:
            raise AuditFailed("supplement r_t", {"expected": expected, "actual": actual})
    return result


def derived(design: Design, point: int) -> Design:
    """
    Derived design at a point: blocks through it, with the point removed.

    Points above ``point`` shift down by one.

    Raises:
        PreconditionError: If point is out of range or k < 2.
        IsolatedPoint: If no block contains the point.
    """
    if not 0 <= point < design.v:
        raise PreconditionError(f"point {point} outside 0..{design.v - 1}")
    if design.k < 2 or design.v < 2:
        raise PreconditionError("derived design needs k >= 2")
    through = design.blocks_through(point)
    if not through:
        raise IsolatedPoint(point)
    labels = None
    if design.labels is not None:
        labels = design.labels[:point] + design.labels[point + 1 :]
    return Design.create(
        design.v - 1,
        [[p if p < point else p - 1 for p in block if p != point] for block in through],
        labels=labels,
        k=design.k - 1,
    )


def incidence_matrix(design: Design) -> IntMatrix:
    """b x v 0/1 matrix; row j is the characteristic vector of block j."""
    rows = []
    for block in design.blocks:
        row = [0] * design.v
        for p in block:
            row[p] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows, design.v)


# ---------------------------------------------------------------------------
# Gram audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GramAuditReport:
    """Values compared by the Gram audit."""

    gram: IntMatrix
    determinant: int
    expected_determinant: int
    symmetric: bool

    def to_dict(self) -> dict[str, object]:
        return {
            "determinant": str(self.determinant),
            "expected_determinant": str(self.expected_determinant),
            "symmetric": self.symmetric,
            "passed": True,
        }


def gram_audit(design: Design, params: DesignParams) -> GramAuditReport:
    """
    Check A^T A = (r - lambda) I + lambda J and det(A^T A) = r k (r - lambda)^(v-1).

    For symmetric designs also check A A^T = A^T A.

    Raises:
        PreconditionError: If the parameters are not those of a 2-design.
        AuditFailed: With the identity that failed and a witness entry.
    """
    if params.t < 2 or params.lam is None:
        raise PreconditionError("gram audit needs a design of strength t >= 2")
    A = incidence_matrix(design)
    gram = A.T @ A
    r, lam, v, k = params.r, params.lam, params.v, params.k

    try:
        for i in range(v):
            for j in range(v):
                expected = r if i == j else lam
                if gram[i, j] != expected:
                    raise AuditFailed(
                        "A^T A == (r - lambda) I + lambda J",
                        {"entry": (i, j), "actual": gram[i, j], "expected": expected},
                    )

        det = determinant(gram)
        expected_det = r * k * (r - lam) ** (v - 1)
        if det != expected_det:
            raise AuditFailed("det(A^T A) == r k (r - lambda)^(v-1)", {"actual": det, "expected": expected_det})

        if params.symmetric:
            other = A @ A.T
            if other != gram:
                witness = next(
                    (i, j) for i in range(v) for j in range(v) if other[i, j] != gram[i, j]
                )
                raise AuditFailed("A A^T == A^T A", {"entry": witness})
    except AuditFailed as e:
        record_audit("gram", passed=False)
        audit_logger.log_audit("gram", passed=False, detail={"which": e.which})
        raise

    record_audit("gram", passed=True)
    audit_logger.log_audit("gram", passed=True, detail={"determinant": str(det)})
    return GramAuditReport(
        gram=gram,
        determinant=det,
        expected_determinant=expected_det,
        symmetric=params.symmetric,
    )
