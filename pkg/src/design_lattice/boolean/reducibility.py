"""
Reducible and irreducible zero-sum blocks.

A zero-sum block of nonzero vectors is reducible when it splits into two
disjoint zero-sum blocks. A k-block is irreducible exactly when its
vectors span a space of dimension k-1, which is tested by GF(2) rank.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import factorial, prod
from operator import xor

from pydantic import BaseModel

from design_lattice.boolean.enumerate import build_design
from design_lattice.boolean.spec import BooleanDesignSpec
from design_lattice.errors import NotAZeroSumBlock, PreconditionError
from design_lattice.linalg.modular import bitmask_rank

logger = logging.getLogger(__name__)

VectorBlock = tuple[int, ...]


def check_zero_sum_block(n: int, block: Sequence[int], affine: bool = False) -> VectorBlock:
    """
    Validate a block of bitmask vectors and return it sorted.

    Args:
        n: Dimension.
        block: Vectors of Z_2^n as bitmasks.
        affine: Allow the zero vector.

    Raises:
        NotAZeroSumBlock: On repeated, zero (unless affine) or out-of-range
            vectors, or a nonzero sum.
    """
    vectors = tuple(sorted(block))
    if len(set(vectors)) != len(vectors):
        raise NotAZeroSumBlock(vectors, "repeated vector")
    for x in vectors:
        if not 0 <= x < 2**n:
            raise NotAZeroSumBlock(vectors, f"{x} is not a vector of Z_2^{n}")
        if x == 0 and not affine:
            raise NotAZeroSumBlock(vectors, "contains the zero vector")
    if reduce(xor, vectors, 0):
        raise NotAZeroSumBlock(vectors, "sum is not zero")
    return vectors


def is_irreducible(n: int, block: Sequence[int]) -> bool:
    """True iff the k vectors of a zero-sum block have GF(2) rank k - 1."""
    vectors = check_zero_sum_block(n, block)
    return bitmask_rank(vectors) == len(vectors) - 1


def decompositions(
    n: int,
    block: Sequence[int],
    k1: int,
    affine: bool = False,
) -> list[tuple[VectorBlock, VectorBlock]]:
    """
    Unordered splits of a zero-sum block into zero-sum parts of sizes k1 and k - k1.

    Outside 3 <= k1 <= k - 3 no split exists and the result is empty. Pairs
    are listed in lexicographic order of their first part; for equal sizes
    the first part holds the smallest vector.
    """
    vectors = check_zero_sum_block(n, block, affine=affine)
    k = len(vectors)
    if not 3 <= k1 <= k - 3:
        return []
    found = []
    for part in combinations(vectors, k1):
        if 2 * k1 == k and part[0] != vectors[0]:
            continue
        if reduce(xor, part, 0):
            continue
        rest = tuple(x for x in vectors if x not in part)
        found.append((part, rest))
    return found


def is_reducible(n: int, block: Sequence[int]) -> bool:
    """True iff some split into two disjoint zero-sum blocks exists."""
    vectors = check_zero_sum_block(n, block)
    return any(decompositions(n, vectors, k1) for k1 in range(3, len(vectors) // 2 + 1))


def c_block(k: int) -> VectorBlock:
    """e_1, ..., e_(k-1) and their sum."""
    basis = [1 << i for i in range(k - 1)]
    return tuple(sorted([*basis, (1 << (k - 1)) - 1]))


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------


class IrreducibleReportModel(BaseModel):
    """Irreducible block counts; large values are decimal strings."""

    n: int
    k: int
    blocks: int
    oracle: int
    product_formula: str
    conjectured: str
    conjecture_matches: bool


def product_formula(n: int, k: int) -> int:
    """prod_{i=1}^{k} (2^n - 2^(i-1)): ordered k-tuples of independent vectors."""
    return prod(2**n - 2 ** (i - 1) for i in range(1, k + 1))


def conjectured_count(n: int, k: int) -> Fraction:
    """prod_{i=1}^{k-1} (2^n - 2^(i-1)) / k!: one count per unordered irreducible block."""
    return Fraction(prod(2**n - 2 ** (i - 1) for i in range(1, k)), factorial(k))


def irreducible_count(n: int, k: int, budget: int | None = None) -> IrreducibleReportModel:
    """
    Count irreducible k-blocks by enumeration and report the closed formulas beside it.

    The oracle filters every zero-sum k-block through is_irreducible. The
    ordered-tuple product is reported as is; only the conjectured unordered
    count is compared against the oracle.

    Raises:
        PreconditionError: If k < 3.
        BudgetExceeded: If enumeration is out of budget.
    """
    if k < 3:
        raise PreconditionError(f"irreducible blocks need k >= 3, got {k}")
    design = build_design(BooleanDesignSpec.projective(n, k), budget)
    vectors = [BooleanDesignSpec.projective(n, k).vector(i) for i in range(design.v)]
    oracle = sum(1 for block in design.blocks if is_irreducible(n, [vectors[i] for i in block]))
    conjectured = conjectured_count(n, k)
    logger.info("n=%d k=%d: %d of %d blocks irreducible", n, k, oracle, design.b)
    return IrreducibleReportModel(
        n=n,
        k=k,
        blocks=design.b,
        oracle=oracle,
        product_formula=str(product_formula(n, k)),
        conjectured=str(conjectured),
        conjecture_matches=conjectured == oracle,
    )
