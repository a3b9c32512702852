"""
Parameters of the zero-sum constructions.

Four variants share one frozen spec type:

    field        k-subsets of GF(q) with zero sum; p | k and 2 < k < q
    affine       k-subsets of Z_2^n with zero sum; k even, 2 < k < 2^n
    projective   k-subsets of Z_2^n minus 0 with zero sum; 2 <= k <= 2^n - 2
    dependent    k-subsets of Z_2^n minus 0 that are linearly dependent;
                 2 <= k <= 2^n - 1
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from design_lattice.boolean.field import prime_power
from design_lattice.errors import NotPrime, SpecInvalid


class Variant(str, Enum):
    """Zero-sum construction."""

    FIELD = "field"
    AFFINE = "affine"
    PROJECTIVE = "projective"
    DEPENDENT = "dependent"


@dataclass(frozen=True)
class BooleanDesignSpec:
    """
    One zero-sum construction with its size parameters.

    Build through the named constructors; they enforce each variant's range.
    """

    variant: Variant
    k: int
    n: int | None = None
    p: int | None = None
    t: int | None = None

    def __post_init__(self) -> None:
        if self.variant is Variant.FIELD:
            if self.p is None or self.t is None:
                raise SpecInvalid("field variant needs p and t")
            q = self.p**self.t
            if self.k % self.p or not 2 < self.k < q:
                raise SpecInvalid(f"field variant needs p | k and 2 < k < q (p={self.p}, q={q}, k={self.k})")
            return

        if self.n is None or self.n < 2:
            raise SpecInvalid(f"{self.variant.value} variant needs n >= 2, got {self.n}")
        size = 2**self.n
        if self.variant is Variant.AFFINE:
            if self.k % 2 or not 2 < self.k < size:
                raise SpecInvalid(f"affine variant needs even k with 2 < k < {size}, got {self.k}")
        elif self.variant is Variant.PROJECTIVE:
            if not 2 <= self.k <= size - 2:
                raise SpecInvalid(f"projective variant needs 2 <= k <= {size - 2}, got {self.k}")
        elif not 2 <= self.k <= size - 1:
            raise SpecInvalid(f"dependent variant needs 2 <= k <= {size - 1}, got {self.k}")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def field(cls, q: int, k: int) -> BooleanDesignSpec:
        try:
            p, t = prime_power(q)
        except NotPrime as e:
            raise SpecInvalid(f"field order {q} is not a prime power") from e
        return cls(Variant.FIELD, k, p=p, t=t)

    @classmethod
    def affine(cls, n: int, k: int) -> BooleanDesignSpec:
        return cls(Variant.AFFINE, k, n=n)

    @classmethod
    def projective(cls, n: int, k: int) -> BooleanDesignSpec:
        return cls(Variant.PROJECTIVE, k, n=n)

    @classmethod
    def dependent(cls, n: int, k: int) -> BooleanDesignSpec:
        return cls(Variant.DEPENDENT, k, n=n)

    # ------------------------------------------------------------------
    # Derived values
    # ------------------------------------------------------------------

    @property
    def q(self) -> int | None:
        if self.p is None or self.t is None:
            return None
        return self.p**self.t

    @property
    def v(self) -> int:
        """Number of points."""
        if self.variant is Variant.FIELD:
            return self.p**self.t  # type: ignore[operator]
        assert self.n is not None
        if self.variant is Variant.AFFINE:
            return 2**self.n
        return 2**self.n - 1

    @property
    def strength(self) -> int:
        """Strength at which the construction is a design."""
        return 3 if self.variant is Variant.AFFINE else 2

    def vector(self, point: int) -> int:
        """Bitmask vector of a point index (binary variants)."""
        if self.variant in (Variant.FIELD, Variant.AFFINE):
            return point
        return point + 1

    def describe(self) -> str:
        if self.variant is Variant.FIELD:
            return f"field(q={self.q}, k={self.k})"
        return f"{self.variant.value}(n={self.n}, k={self.k})"


def vector_label(vector: int, n: int) -> str:
    """Coordinates x_1..x_n of a bitmask vector; bit i is coordinate i+1."""
    return "".join(str(vector >> i & 1) for i in range(n))
