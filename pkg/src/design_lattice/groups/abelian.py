"""Finitely generated abelian groups in invariant-factor form."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import prod

from sympy import factorint

from design_lattice.errors import DimensionMismatch, PreconditionError


@dataclass(frozen=True)
class AbelianGroup:
    """
    Z^free_rank x Z_d1 x ... x Z_dm with 2 <= d1 | d2 | ... | dm.
    """

    torsion: tuple[int, ...]
    free_rank: int = 0

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise PreconditionError(f"free rank must be nonnegative, got {self.free_rank}")
        for d in self.torsion:
            if d < 2:
                raise PreconditionError(f"invariant factor {d} is below 2")
        for a, b in zip(self.torsion, self.torsion[1:], strict=False):
            if b % a:
                raise PreconditionError(f"invariant factor {a} does not divide {b}")

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Number of elements, or None for an infinite group."""
        return prod(self.torsion) if self.is_finite else None

    @property
    def exponent(self) -> int:
        """Least e > 0 with e*x = 0 for all x; 0 when the group is infinite."""
        if not self.is_finite:
            return 0
        return self.torsion[-1] if self.torsion else 1

    def primary_factors(self) -> tuple[int, ...]:
        """Elementary divisors (prime powers), sorted."""
        factors = []
        for d in self.torsion:
            factors.extend(p**e for p, e in factorint(d).items())
        return tuple(sorted(factors))

    def describe(self, primary: bool = False) -> str:
        """
        Text form such as ``Z3 x Z3 x Z6`` or ``Z^2 x Z3``.

        Args:
            primary: Use elementary divisors instead of invariant factors.
        """
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        cyclic = self.primary_factors() if primary else self.torsion
        parts.extend(f"Z{d}" for d in cyclic)
        return " x ".join(parts) if parts else "trivial"

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.torsion), (0,) * self.free_rank)

    def element(self, torsion_coords: Sequence[int], free_coords: Sequence[int] = ()) -> GroupElement:
        """Build an element, reducing torsion coordinates into range."""
        if len(torsion_coords) != len(self.torsion):
            raise DimensionMismatch(len(self.torsion), len(torsion_coords))
        if len(free_coords) != self.free_rank:
            raise DimensionMismatch(self.free_rank, len(free_coords))
        return GroupElement(
            self,
            tuple(int(x) % d for x, d in zip(torsion_coords, self.torsion, strict=True)),
            tuple(int(x) for x in free_coords),
        )


@dataclass(frozen=True)
class GroupElement:
    """Element of an AbelianGroup; torsion coordinates are reduced."""

    group: AbelianGroup
    torsion_coords: tuple[int, ...]
    free_coords: tuple[int, ...] = ()

    def __add__(self, other: GroupElement) -> GroupElement:
        if other.group != self.group:
            raise PreconditionError("cannot add elements of different groups")
        return self.group.element(
            [a + b for a, b in zip(self.torsion_coords, other.torsion_coords, strict=True)],
            [a + b for a, b in zip(self.free_coords, other.free_coords, strict=True)],
        )

    def __neg__(self) -> GroupElement:
        return self.group.element(
            [-a for a in self.torsion_coords], [-a for a in self.free_coords]
        )

    def is_zero(self) -> bool:
        return not any(self.torsion_coords) and not any(self.free_coords)

    def __str__(self) -> str:
        coords = ",".join(str(x) for x in self.torsion_coords)
        if self.free_coords:
            free = ",".join(str(x) for x in self.free_coords)
            return f"({free};{coords})"
        return f"({coords})"
