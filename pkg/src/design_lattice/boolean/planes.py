"""Zero-sum quadruples and octuples of Z_2^n against affine planes."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from design_lattice.boolean.enumerate import zero_sum_blocks
from design_lattice.boolean.reducibility import decompositions
from design_lattice.design.core import check_budget
from design_lattice.errors import AuditFailed, PreconditionError
from design_lattice.utils.logging import audit_logger
from design_lattice.utils.metrics import record_audit

logger = logging.getLogger(__name__)

Quadruple = tuple[int, int, int, int]


@dataclass(frozen=True)
class PlanesAuditReport:
    n: int
    subspaces: int
    planes: int
    quadruples: int

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "subspaces": self.subspaces,
            "planes": self.planes,
            "quadruples": self.quadruples,
            "passed": True,
        }


def two_dimensional_subspaces(n: int) -> set[Quadruple]:
    """Every {0, a, b, a^b} with a, b distinct and nonzero."""
    subspaces: set[Quadruple] = set()
    for a in range(1, 2**n):
        for b in range(a + 1, 2**n):
            subspaces.add(tuple(sorted((0, a, b, a ^ b))))  # type: ignore[arg-type]
    return subspaces


def affine_planes(n: int) -> set[Quadruple]:
    """Every translate of every two-dimensional subspace."""
    planes: set[Quadruple] = set()
    for subspace in two_dimensional_subspaces(n):
        for shift in range(2**n):
            planes.add(tuple(sorted(x ^ shift for x in subspace)))  # type: ignore[arg-type]
    return planes


def _check_n(n: int, k: int, budget: int | None) -> None:
    if n < 2:
        raise PreconditionError(f"need n >= 2, got {n}")
    check_budget(f"zero-sum {k}-subsets of Z_2^{n}", comb(2**n, k), budget)


def quadruples_are_planes_audit(n: int, budget: int | None = None) -> PlanesAuditReport:
    """
    Check that the zero-sum 4-subsets of Z_2^n are exactly the affine planes.

    Raises:
        BudgetExceeded: If C(2^n, 4) is above the budget.
        AuditFailed: With a quadruple found by one enumeration but not the other.
    """
    _check_n(n, 4, budget)
    quadruples = {tuple(block) for block in zero_sum_blocks(range(2**n), 4)}
    subspaces = two_dimensional_subspaces(n)
    planes = affine_planes(n)
    passed = quadruples == planes
    record_audit("planes", passed)
    audit_logger.log_audit(
        "planes",
        passed=passed,
        detail={"n": n, "quadruples": len(quadruples), "planes": len(planes)},
    )
    if not passed:
        witness = min(quadruples.symmetric_difference(planes))
        raise AuditFailed("zero-sum quadruples are affine planes", {"quadruple": list(witness)})
    return PlanesAuditReport(n=n, subspaces=len(subspaces), planes=len(planes), quadruples=len(quadruples))


def octuples_without_plane_pair(n: int, budget: int | None = None) -> list[tuple[int, ...]]:
    """Zero-sum 8-subsets of Z_2^n that are not two disjoint affine planes."""
    _check_n(n, 8, budget)
    return [
        block
        for block in zero_sum_blocks(range(2**n), 8)
        if not decompositions(n, block, 4, affine=True)
    ]
