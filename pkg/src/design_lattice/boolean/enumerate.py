"""
Zero-sum subset enumeration.

The search walks (k-1)-prefixes in lexicographic order keeping a running
sum; the last element of a block is whatever point cancels the prefix, so
it is found by a dictionary lookup instead of a scan. A prefix must leave
room for a larger last index, so C(v-1, k-1) prefixes are visited.

Blocks come back in colex order: compared from their largest index down.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Sequence
from itertools import combinations
from math import comb

from design_lattice.boolean.field import FiniteField
from design_lattice.boolean.spec import BooleanDesignSpec, Variant, vector_label
from design_lattice.design.core import Block, Design, DesignParams, check_budget, verify_design
from design_lattice.errors import PreconditionError
from design_lattice.linalg.modular import bitmask_rank
from design_lattice.utils.logging import audit_logger
from design_lattice.utils.metrics import BLOCKS_FOUND, SUBSETS_SCANNED

logger = logging.getLogger(__name__)


def _xor(a: int, b: int) -> int:
    return a ^ b


def _same(a: int) -> int:
    return a


def _colex_key(block: Block) -> Block:
    return block[::-1]


class ZeroSumSearch:
    """
    Depth-first zero-sum search over a list of group elements.

    Args:
        elements: Distinct group elements, one per point index.
        combine: Group addition.
        negate: Group negation.
        zero: Identity element.
    """

    def __init__(
        self,
        elements: Sequence[int],
        combine: Callable[[int, int], int] = _xor,
        negate: Callable[[int], int] = _same,
        zero: int = 0,
    ) -> None:
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.combine = combine
        self.negate = negate
        self.zero = zero
        self.scanned = 0

    def blocks(self, k: int, count_only: bool = False) -> tuple[list[Block], int]:
        """
        Return (blocks, count) of zero-sum k-subsets, blocks in colex order.

        With ``count_only`` the block list stays empty.
        """
        if k < 1:
            raise PreconditionError(f"subset size must be positive, got {k}")
        v = len(self.elements)
        found: list[Block] = []
        count = 0
        prefix: list[int] = []
        elements, index, combine, negate = self.elements, self.index, self.combine, self.negate

        def extend(start: int, depth: int, total: int) -> None:
            nonlocal count
            if depth == k - 1:
                self.scanned += 1
                last = index.get(negate(total))
                if last is not None and last > (prefix[-1] if prefix else -1):
                    count += 1
                    if not count_only:
                        found.append((*prefix, last))
                return
            for i in range(start, v - (k - 1 - depth)):
                prefix.append(i)
                extend(i + 1, depth + 1, combine(total, elements[i]))
                prefix.pop()

        if k <= v:
            extend(0, 0, self.zero)
        found.sort(key=_colex_key)
        return found, count


def _search_for(spec: BooleanDesignSpec) -> ZeroSumSearch:
    if spec.variant is Variant.FIELD:
        assert spec.q is not None
        gf = FiniteField.of_order(spec.q)
        return ZeroSumSearch(gf.elements(), gf.add, gf.neg)
    return ZeroSumSearch([spec.vector(i) for i in range(spec.v)])


def _labels(spec: BooleanDesignSpec) -> list[str]:
    if spec.variant is Variant.FIELD:
        assert spec.q is not None
        gf = FiniteField.of_order(spec.q)
        return [gf.format(a) for a in gf.elements()]
    assert spec.n is not None
    return [vector_label(spec.vector(i), spec.n) for i in range(spec.v)]


def build_design(spec: BooleanDesignSpec, budget: int | None = None) -> Design:
    """
    Enumerate the blocks of a zero-sum (or dependent-tuple) construction.

    An empty family is returned as a degenerate design, not an error.

    Args:
        spec: Construction and its parameters.
        budget: Cap on C(v, k); defaults to the configured budget.

    Raises:
        BudgetExceeded: If C(v, k) is above the budget.
    """
    v, k = spec.v, spec.k
    check_budget(spec.describe(), comb(v, k), budget)
    start = time.perf_counter()

    if spec.variant is Variant.DEPENDENT:
        vectors = [spec.vector(i) for i in range(v)]
        blocks = [
            sub for sub in combinations(range(v), k) if bitmask_rank(vectors[i] for i in sub) < k
        ]
        scanned = comb(v, k)
    else:
        search = _search_for(spec)
        blocks, _ = search.blocks(k)
        scanned = search.scanned

    design = Design.create(v, blocks, labels=_labels(spec), k=k)
    elapsed_ms = (time.perf_counter() - start) * 1000
    SUBSETS_SCANNED.labels(variant=spec.variant.value).inc(scanned)
    BLOCKS_FOUND.labels(variant=spec.variant.value).inc(design.b)
    audit_logger.log_enumeration(spec.variant.value, v, k, scanned, design.b, elapsed_ms)
    if design.is_degenerate:
        logger.info("%s has no blocks", spec.describe())
    return design


def build_verified(spec: BooleanDesignSpec, budget: int | None = None) -> tuple[Design, DesignParams | None]:
    """Build a design and verify it at the strength its construction guarantees."""
    design = build_design(spec, budget)
    if design.is_degenerate:
        return design, None
    return design, verify_design(design, min(spec.strength, design.k))


def count_zero_sum_subsets(n: int, k: int, budget: int | None = None) -> int:
    """
    Number of zero-sum k-subsets of the nonzero vectors of Z_2^n.

    Counts without materializing blocks, for spot checks beyond the
    full-table budget.
    """
    if n < 1 or k < 0:
        raise PreconditionError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    if k == 0:
        return 1
    v = 2**n - 1
    if k > v:
        return 0
    check_budget(f"zero-sum {k}-subsets of Z_2^{n}", comb(v, k), budget)
    search = ZeroSumSearch(range(1, v + 1))
    _, count = search.blocks(k, count_only=True)
    SUBSETS_SCANNED.labels(variant="projective").inc(search.scanned)
    return count


def zero_sum_blocks(vectors: Sequence[int], k: int) -> list[Block]:
    """Zero-sum k-subsets (as index tuples) of arbitrary distinct bitmask vectors."""
    blocks, _ = ZeroSumSearch(vectors).blocks(k)
    return blocks
