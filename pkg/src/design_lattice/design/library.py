"""
Built-in designs.

Fixtures shared by the command line (``--builtin NAME``) and the test
suite. Every builder returns a canonical Design; callers verify it.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from itertools import combinations
from math import comb

from design_lattice.design.core import Design, check_budget
from design_lattice.errors import PreconditionError

FANO_BLOCKS = (
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
)

# Incidence rows of the affine plane of order 3, one block per row
AG23_LINE_ROWS = (
    "111000000",
    "000111000",
    "000000111",
    "100100100",
    "010010010",
    "001001001",
    "100001010",
    "010100001",
    "001010100",
    "100010001",
    "010001100",
    "001100010",
)

# Unions of two parallel lines of the same plane
AG23_PARALLEL_PAIR_ROWS = (
    "111111000",
    "111000111",
    "110110110",
    "101101101",
    "110011101",
    "101110011",
    "110101011",
    "101011110",
    "011011011",
    "000111111",
    "011110101",
    "011101110",
)


def _blocks_from_rows(rows: Iterable[str]) -> list[list[int]]:
    return [[i for i, bit in enumerate(row) if bit == "1"] for row in rows]


def cyclic_development(v: int, base_blocks: Sequence[Sequence[int]]) -> Design:
    """
    Develop base blocks modulo v.

    Every translate b + i (mod v) of every base block becomes a block;
    translates that coincide are kept once.
    """
    if v < 1:
        raise PreconditionError(f"modulus must be positive, got {v}")
    blocks = {
        tuple(sorted((x + shift) % v for x in base)) for base in base_blocks for shift in range(v)
    }
    return Design.create(v, blocks)


def complete_design(v: int, k: int, budget: int | None = None) -> Design:
    """All k-subsets of v points."""
    if not 1 <= k <= v:
        raise PreconditionError(f"block size k={k} outside 1..{v}")
    check_budget("complete design", comb(v, k), budget)
    return Design.create(v, combinations(range(v), k), k=k)


def fano() -> Design:
    """2-(7,3,1), the projective plane of order 2."""
    return Design.create(7, FANO_BLOCKS)


def ag23_lines() -> Design:
    """2-(9,3,1), the lines of the affine plane of order 3."""
    return Design.create(9, _blocks_from_rows(AG23_LINE_ROWS))


def ag23_parallel_pairs() -> Design:
    """2-(9,6,5), pairs of parallel lines of the affine plane of order 3."""
    return Design.create(9, _blocks_from_rows(AG23_PARALLEL_PAIR_ROWS))


def sts13() -> Design:
    """Cyclic Steiner triple system on 13 points."""
    return cyclic_development(13, [(0, 1, 4), (0, 2, 7)])


def biplane11() -> Design:
    """2-(11,5,2) from the quadratic residues mod 11."""
    return cyclic_development(11, [(1, 3, 4, 5, 9)])


def triangle() -> Design:
    """2-(3,2,1), every pair of three points."""
    return complete_design(3, 2)


def boolean_quadruple_system(n: int) -> Design:
    """3-(2^n,4,1) of zero-sum quadruples in Z_2^n."""
    from design_lattice.boolean.enumerate import build_design
    from design_lattice.boolean.spec import BooleanDesignSpec

    return build_design(BooleanDesignSpec.affine(n, 4))


BUILTINS: dict[str, Callable[[], Design]] = {
    "fano": fano,
    "ag23-lines": ag23_lines,
    "ag23-parallel-pairs": ag23_parallel_pairs,
    "sts13": sts13,
    "biplane11": biplane11,
    "triangle": triangle,
    "boolean-quadruple-8": lambda: boolean_quadruple_system(3),
    "boolean-quadruple-16": lambda: boolean_quadruple_system(4),
}


def builtin(name: str) -> Design:
    """
    Look up a built-in design by name.

    Raises:
        PreconditionError: If the name is unknown.
    """
    try:
        factory = BUILTINS[name]
    except KeyError:
        known = ", ".join(sorted(BUILTINS))
        raise PreconditionError(f"unknown builtin design {name!r} (known: {known})") from None
    return factory()
