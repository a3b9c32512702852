"""
Galois fields GF(p^t).

An element is an int in 0..q-1 whose base-p digits are the coefficients of
a polynomial of degree < t, lowest degree first. The modulus is the
lexicographically smallest monic irreducible polynomial of degree t,
found by trial division.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import cached_property

import numpy as np
from sympy import factorint, isprime

from design_lattice.errors import NotPrime, PreconditionError

logger = logging.getLogger(__name__)

Poly = tuple[int, ...]


def _trim(coeffs: Sequence[int]) -> Poly:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> Poly:
    """Remainder of a divided by the monic polynomial m over GF(p)."""
    rest = [x % p for x in a]
    degree = len(m) - 1
    for shift in range(len(rest) - 1 - degree, -1, -1):
        lead = rest[shift + degree]
        if lead:
            for i, c in enumerate(m):
                rest[shift + i] = (rest[shift + i] - lead * c) % p
    return _trim(rest[:degree])


def _monic_polys(degree: int, p: int) -> list[Poly]:
    """Monic polynomials of the given degree in lexicographic order of coefficients."""
    polys = []
    for lower in range(p**degree):
        digits = [(lower // p**i) % p for i in range(degree)]
        polys.append((*digits, 1))
    return polys


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """
    Trial division by every monic polynomial of degree 1..deg/2.

    Args:
        poly: Coefficients, lowest degree first, nonzero leading coefficient.
        p: Prime characteristic.
    """
    poly = _trim([x % p for x in poly])
    degree = len(poly) - 1
    if degree < 1:
        return False
    if poly[-1] != 1:
        inverse = pow(poly[-1], -1, p)
        poly = tuple((x * inverse) % p for x in poly)
    for d in range(1, degree // 2 + 1):
        for divisor in _monic_polys(d, p):
            if not poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(degree: int, p: int) -> Poly:
    """Lexicographically smallest monic irreducible polynomial of a degree."""
    for candidate in _monic_polys(degree, p):
        if is_irreducible(candidate, p):
            return candidate
    raise PreconditionError(f"no irreducible polynomial of degree {degree} over GF({p})")


def prime_power(q: int) -> tuple[int, int]:
    """
    Split q = p^t.

    Raises:
        NotPrime: If q is not a prime power.
    """
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise NotPrime(q)
    ((p, t),) = factors.items()
    return int(p), int(t)


class FiniteField:
    """GF(p^t) with elements encoded as ints."""

    def __init__(self, p: int, t: int = 1) -> None:
        if not isprime(p):
            raise NotPrime(p)
        if t < 1:
            raise PreconditionError(f"extension degree must be positive, got {t}")
        self.p = p
        self.t = t
        self.q = p**t
        self.modulus = smallest_irreducible(t, p)
        logger.debug("GF(%d) modulus %s", self.q, self.format_poly(self.modulus))

    @classmethod
    def of_order(cls, q: int) -> FiniteField:
        p, t = prime_power(q)
        return cls(p, t)

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, t={self.t})"

    # ------------------------------------------------------------------
    # Encoding
    # ------------------------------------------------------------------

    def coefficients(self, a: int) -> Poly:
        return tuple((a // self.p**i) % self.p for i in range(self.t))

    def from_coefficients(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.t:
            coeffs = poly_mod(coeffs, self.modulus, self.p)
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    @staticmethod
    def format_poly(coeffs: Sequence[int]) -> str:
        terms = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if not c:
                continue
            power = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coefficient = str(c) if c != 1 or i == 0 else ""
            terms.append(coefficient + power)
        return "+".join(terms) or "0"

    def format(self, a: int) -> str:
        return self.format_poly(self.coefficients(a))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        """q x q addition table (digitwise addition mod p)."""
        digits = np.array([self.coefficients(a) for a in range(self.q)], dtype=np.int64)
        sums = (digits[:, None, :] + digits[None, :, :]) % self.p
        weights = self.p ** np.arange(self.t, dtype=np.int64)
        return (sums * weights).sum(axis=2)

    @cached_property
    def negation(self) -> tuple[int, ...]:
        return tuple(self.from_coefficients([-c for c in self.coefficients(a)]) for a in range(self.q))

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return self.negation[a]

    def elements(self) -> range:
        return range(self.q)
