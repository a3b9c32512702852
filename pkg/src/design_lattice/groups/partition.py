"""
Partitions of the point set into blocks.

Exact cover over bitmask blocks: always branch on the uncovered point with
the fewest blocks still available.
"""

from __future__ import annotations

import logging

from design_lattice.config import ENUMERATION
from design_lattice.design.core import Block, Design
from design_lattice.errors import BudgetExceeded

logger = logging.getLogger(__name__)


class _ExactCover:
    def __init__(self, design: Design, max_nodes: int) -> None:
        self.design = design
        self.full = (1 << design.v) - 1
        self.max_nodes = max_nodes
        self.nodes = 0
        self.by_point: list[list[int]] = [[] for _ in range(design.v)]
        for index, block in enumerate(design.blocks):
            for p in block:
                self.by_point[p].append(index)

    def search(self, covered: int, chosen: list[int]) -> bool:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceeded("block partition search", self.nodes, self.max_nodes)
        if covered == self.full:
            return True

        masks = self.design.block_masks
        best: list[int] | None = None
        for p in range(self.design.v):
            if covered >> p & 1:
                continue
            candidates = [i for i in self.by_point[p] if not masks[i] & covered]
            if best is None or len(candidates) < len(best):
                best = candidates
                if len(best) <= 1:
                    break
        for i in best or ():
            chosen.append(i)
            if self.search(covered | masks[i], chosen):
                return True
            chosen.pop()
        return False


def find_block_partition(design: Design) -> tuple[Block, ...] | None:
    """
    Return blocks that partition the point set, or None.

    Raises:
        BudgetExceeded: If the search visits more than PARTITION_MAX_NODES nodes.
    """
    if design.is_degenerate or design.v % design.k:
        return None
    cover = _ExactCover(design, ENUMERATION.PARTITION_MAX_NODES)
    chosen: list[int] = []
    found = cover.search(0, chosen)
    logger.debug("Partition search visited %d nodes", cover.nodes)
    return tuple(design.blocks[i] for i in chosen) if found else None


def block_partition_exists(design: Design) -> bool:
    """True iff some subfamily of blocks partitions the points."""
    return find_block_partition(design) is not None
