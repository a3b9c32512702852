"""Rank computations over prime fields."""

from __future__ import annotations

from collections.abc import Iterable

from sympy import isprime

from design_lattice.errors import NotPrime
from design_lattice.linalg.matrix import IntMatrix


def rank_over_gf(M: IntMatrix, p: int) -> int:
    """
    Rank of M reduced modulo a prime, by Gaussian elimination over GF(p).

    Args:
        M: Integer matrix.
        p: Prime characteristic.

    Returns:
        The rank of M mod p.

    Raises:
        NotPrime: If p is not prime.
    """
    if not isprime(p):
        raise NotPrime(p)
    rows = [[x % p for x in row] for row in M.entries()]
    rank = 0
    for col in range(M.cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = pow(rows[rank][col], -1, p)
        top = [(x * inverse) % p for x in rows[rank]]
        rows[rank] = top
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col]
            if factor:
                rows[i] = [(x - factor * y) % p for x, y in zip(rows[i], top, strict=True)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def bitmask_rank(vectors: Iterable[int]) -> int:
    """
    Rank over GF(2) of vectors packed as bitmask integers.

    Keeps an XOR basis keyed by leading bit.
    """
    basis: dict[int, int] = {}
    for vector in vectors:
        while vector:
            lead = vector.bit_length() - 1
            if lead not in basis:
                basis[lead] = vector
                break
            vector ^= basis[lead]
    return len(basis)
