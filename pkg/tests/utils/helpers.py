"""Test helper functions: independent oracles for the library's results."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import reduce
from itertools import combinations, product
from math import gcd

from design_lattice.design.core import Design
from design_lattice.linalg.matrix import IntMatrix


def laplace_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Cofactor expansion along the first row; only for small matrices."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, entry in enumerate(rows[0]):
        if entry:
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            total += (-1) ** j * entry * laplace_determinant(minor)
    return total


def minors_invariants(M: IntMatrix) -> list[int]:
    """
    Nonzero invariant factors from gcds of minors.

    With g_i the gcd of all i x i minors, d_i = g_i / g_(i-1) while g_i != 0.
    """
    rows = [list(r) for r in M.entries()]
    factors: list[int] = []
    previous = 1
    for size in range(1, min(M.rows, M.cols) + 1):
        g = 0
        for row_set in combinations(range(M.rows), size):
            for col_set in combinations(range(M.cols), size):
                minor = [[rows[i][j] for j in col_set] for i in row_set]
                g = gcd(g, laplace_determinant(minor))
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return factors


def assert_smith_valid(M: IntMatrix, decomposition) -> None:  # type: ignore[no-untyped-def]
    """Check U M V == S, diagonal shape, divisibility and nonnegativity."""
    from design_lattice.linalg.normal_forms import determinant

    S, U, V = decomposition.S, decomposition.U, decomposition.V
    assert U @ M @ V == S
    assert abs(determinant(U)) == 1
    assert abs(determinant(V)) == 1
    for i in range(S.rows):
        for j in range(S.cols):
            if i != j:
                assert S[i, j] == 0
    diag = decomposition.diag
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert diag[: len(nonzero)] == tuple(nonzero), "zeros must come last"
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0


def block_sets(design: Design) -> set[frozenset[int]]:
    return {frozenset(block) for block in design.blocks}


def gl2_matrices(n: int) -> Iterator[tuple[int, ...]]:
    """All invertible n x n matrices over GF(2), as tuples of column bitmasks."""
    from design_lattice.linalg.modular import bitmask_rank

    for columns in product(range(1, 2**n), repeat=n):
        if bitmask_rank(columns) == n:
            yield columns


def apply_linear(columns: Sequence[int], vector: int) -> int:
    """Image of a bitmask vector under the matrix with the given columns."""
    return reduce(lambda acc, i: acc ^ columns[i], (i for i in range(len(columns)) if vector >> i & 1), 0)


def gl2_orbit(block: Sequence[int], n: int) -> set[tuple[int, ...]]:
    """Orbit of a set of vectors under GL_n(2), as sorted tuples."""
    return {tuple(sorted(apply_linear(g, x) for x in block)) for g in gl2_matrices(n)}
