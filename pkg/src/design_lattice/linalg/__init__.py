"""Exact integer linear algebra."""

from design_lattice.linalg.matrix import IntMatrix, MatrixModel
from design_lattice.linalg.modular import bitmask_rank, rank_over_gf
from design_lattice.linalg.normal_forms import (
    HermiteDecomposition,
    SmithDecomposition,
    determinant,
    extended_gcd,
    hermite_normal_form,
    lattice_contains,
    lattice_solve,
    rank_over_q,
    smith_normal_form,
)

__all__ = [
    "IntMatrix",
    "MatrixModel",
    "HermiteDecomposition",
    "SmithDecomposition",
    "bitmask_rank",
    "determinant",
    "extended_gcd",
    "hermite_normal_form",
    "lattice_contains",
    "lattice_solve",
    "rank_over_gf",
    "rank_over_q",
    "smith_normal_form",
]
