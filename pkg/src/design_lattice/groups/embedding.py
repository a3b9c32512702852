"""
The group of a design and the map from points into it.

For a design on v points, G_D is Z^v modulo the lattice spanned by the
characteristic vectors of the blocks: the universal abelian group in which
every block sums to zero. With U A V = S the Smith form of the b x v
incidence matrix A, x -> x V carries the block lattice onto the diagonal
lattice of S, so the image of point i is row i of V with coordinate j read
modulo d_j. Coordinates with d_j = 1 vanish and columns past the rank are
free.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from pydantic import BaseModel, Field

from design_lattice.config import AUDIT
from design_lattice.design.core import Design, DesignParams, gram_audit, incidence_matrix, verify_design
from design_lattice.errors import AuditFailed, EmptyFamily, PreconditionError
from design_lattice.groups.abelian import AbelianGroup, GroupElement
from design_lattice.groups.partition import block_partition_exists
from design_lattice.linalg.matrix import IntMatrix
from design_lattice.linalg.normal_forms import (
    SmithDecomposition,
    hermite_normal_form,
    lattice_contains,
    lattice_solve,
    smith_normal_form,
)
from design_lattice.utils.logging import audit_logger
from design_lattice.utils.metrics import record_audit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbeddingResult:
    """G_D together with the image of every point."""

    group: AbelianGroup
    images: tuple[GroupElement, ...]
    injective: bool
    smith: SmithDecomposition

    def collapsed_pairs(self) -> list[tuple[int, int]]:
        """Point pairs (i < j) with equal images, in lexicographic order."""
        pairs = []
        for j, image in enumerate(self.images):
            for i in range(j):
                if self.images[i] == image:
                    pairs.append((i, j))
        return sorted(pairs)

    def block_sum(self, block: tuple[int, ...]) -> GroupElement:
        total = self.group.zero()
        for p in block:
            total = total + self.images[p]
        return total


def _difference(v: int, i: int, j: int) -> tuple[int, ...]:
    vector = [0] * v
    vector[i], vector[j] = 1, -1
    return tuple(vector)


def embedding_group(design: Design) -> EmbeddingResult:
    """
    Compute G_D and the image of each point.

    Raises:
        EmptyFamily: For a design without blocks.
        AuditFailed: If some block does not sum to zero, or if the lattice
            cross-check disagrees with the images.
    """
    if design.is_degenerate:
        raise EmptyFamily()

    A = incidence_matrix(design)
    smith = smith_normal_form(A)
    rank = smith.rank
    torsion_columns = [j for j in range(rank) if smith.diag[j] > 1]
    group = AbelianGroup(
        torsion=tuple(smith.diag[j] for j in torsion_columns),
        free_rank=design.v - rank,
    )

    images = tuple(
        group.element(
            [smith.V[i, j] for j in torsion_columns],
            [smith.V[i, j] for j in range(rank, design.v)],
        )
        for i in range(design.v)
    )
    result = EmbeddingResult(
        group=group,
        images=images,
        injective=len(set(images)) == design.v,
        smith=smith,
    )

    for block in design.blocks:
        if not result.block_sum(block).is_zero():
            raise AuditFailed("block sums to zero in G_D", {"block": list(block)})

    if AUDIT.CROSSCHECK_LATTICE:
        _crosscheck_lattice(design, A, result)

    audit_logger.log_embedding(design.v, group.torsion, group.free_rank, result.injective)
    return result


def _crosscheck_lattice(design: Design, A: IntMatrix, result: EmbeddingResult) -> None:
    """Equal images must coincide with e_i - e_j lying in the block lattice."""
    H = hermite_normal_form(A).H
    collapsed = set(result.collapsed_pairs())
    for i, j in combinations(range(design.v), 2):
        inside = lattice_contains(H, _difference(design.v, i, j))
        if inside != ((i, j) in collapsed):
            raise AuditFailed("image equality agrees with lattice membership", {"pair": (i, j)})


def is_embeddable(design: Design) -> bool:
    """True iff distinct points have distinct images in G_D."""
    return embedding_group(design).injective


# ---------------------------------------------------------------------------
# Audits and witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentAuditReport:
    exponent: int
    bound: int
    partition: bool
    partition_bound: int | None

    def to_dict(self) -> dict[str, object]:
        return {
            "exponent": self.exponent,
            "bound": self.bound,
            "partition": self.partition,
            "partition_bound": self.partition_bound,
            "passed": True,
        }


def _divides(d: int, n: int) -> bool:
    """d | n over the integers; an infinite group (exponent 0) divides only 0."""
    if d == 0:
        return n == 0
    return n % d == 0


def exponent_audit(design: Design, params: DesignParams | None = None) -> ExponentAuditReport:
    """
    Check that the exponent of G_D divides k(r - lambda), and divides
    r - lambda when the blocks contain a partition of the points.

    Raises:
        PreconditionError: If the design is not verified at strength >= 2.
        AuditFailed: With the exponent and the divisor it fails.
    """
    if params is None:
        params = verify_design(design, 2)
    if params.t < 2 or params.lam is None:
        raise PreconditionError("exponent audit needs a design of strength t >= 2")

    exponent = embedding_group(design).group.exponent
    bound = params.k * (params.r - params.lam)
    partition = block_partition_exists(design)
    partition_bound = params.r - params.lam if partition else None

    failure: tuple[str, int] | None = None
    if not _divides(exponent, bound):
        failure = ("exponent divides k(r - lambda)", bound)
    elif partition_bound is not None and not _divides(exponent, partition_bound):
        failure = ("exponent divides r - lambda", partition_bound)

    record_audit("exponent", passed=failure is None)
    audit_logger.log_audit(
        "exponent",
        passed=failure is None,
        detail={"exponent": exponent, "bound": bound, "partition": partition},
    )
    if failure is not None:
        raise AuditFailed(failure[0], {"exponent": exponent, "divisor": failure[1]})
    return ExponentAuditReport(exponent, bound, partition, partition_bound)


@dataclass(frozen=True)
class NonInjectivityWitness:
    """Integer block coefficients whose combination of blocks is e_i - e_j."""

    coefficients: tuple[int, ...]
    i: int
    j: int
    quadratic: int

    def to_dict(self) -> dict[str, object]:
        return {
            "coefficients": list(self.coefficients),
            "i": self.i,
            "j": self.j,
            "quadratic": self.quadratic,
        }


def non_injectivity_witness(design: Design) -> NonInjectivityWitness | None:
    """
    Explain why two points collapse in G_D.

    Solves c H = e_i - e_j against the Hermite form H = U_h A and returns
    w = c U_h, so that w A = e_i - e_j. The quadratic form w A A^T w^T must
    then equal 2.

    Returns:
        A witness for the first collapsed pair, or None if the map is injective.

    Raises:
        AuditFailed: If the witness does not reproduce e_i - e_j exactly or
            its quadratic value is not 2.
    """
    result = embedding_group(design)
    pairs = result.collapsed_pairs()
    if not pairs:
        return None
    i, j = pairs[0]

    A = incidence_matrix(design)
    hermite = hermite_normal_form(A)
    target = _difference(design.v, i, j)
    coefficients = lattice_solve(hermite.H, target)
    if coefficients is None:
        raise AuditFailed("collapsed pair lies in the block lattice", {"pair": (i, j)})
    w = hermite.U.vector_product(coefficients)

    if A.vector_product(w) != target:
        raise AuditFailed("w A == e_i - e_j", {"pair": (i, j)})
    gram = A @ A.T
    quadratic = sum(a * b for a, b in zip(gram.vector_product(w), w, strict=True))
    if quadratic != 2:
        raise AuditFailed("w A A^T w^T == 2", {"pair": (i, j), "value": quadratic})

    record_audit("witness", passed=True)
    return NonInjectivityWitness(coefficients=w, i=i, j=j, quadratic=quadratic)


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------


class EmbeddingReportModel(BaseModel):
    """Report JSON for the embed command."""

    torsion: list[int]
    free_rank: int = Field(..., ge=0)
    injective: bool
    exponent: int = Field(..., ge=0, description="0 when G_D is infinite")
    order: str | None = Field(default=None, description="Decimal order, null when infinite")
    description: str
    witness: dict[str, object] | None = None
    exponent_audit: dict[str, object] | None = None
    gram_audit: dict[str, object] | None = None


def embedding_report(
    design: Design,
    witness: bool = False,
    audit: bool = False,
) -> EmbeddingReportModel:
    """
    Bundle the embedding of a design into a report.

    Args:
        design: Design to embed.
        witness: Also search for a non-injectivity witness.
        audit: Also run the exponent and Gram audits (needs a 2-design).
    """
    result = embedding_group(design)
    group = result.group
    report = EmbeddingReportModel(
        torsion=list(group.torsion),
        free_rank=group.free_rank,
        injective=result.injective,
        exponent=group.exponent,
        order=str(group.order) if group.order is not None else None,
        description=group.describe(),
    )
    if witness:
        found = non_injectivity_witness(design)
        report.witness = found.to_dict() if found is not None else None
    if audit:
        params = verify_design(design, 2)
        report.exponent_audit = exponent_audit(design, params).to_dict()
        report.gram_audit = gram_audit(design, params).to_dict()
    return report
