"""Zero-sum designs over GF(q) and Z_2^n."""

from design_lattice.boolean.counts import (
    CountMethod,
    CountTable,
    CountTableModel,
    alpha_double_factorial,
    alpha_product,
    alpha_table,
    block_counts,
    hamming_weight_enumerator,
)
from design_lattice.boolean.enumerate import (
    ZeroSumSearch,
    build_design,
    build_verified,
    count_zero_sum_subsets,
    zero_sum_blocks,
)
from design_lattice.boolean.field import FiniteField
from design_lattice.boolean.planes import (
    PlanesAuditReport,
    octuples_without_plane_pair,
    quadruples_are_planes_audit,
)
from design_lattice.boolean.reducibility import (
    IrreducibleReportModel,
    c_block,
    decompositions,
    irreducible_count,
    is_irreducible,
    is_reducible,
)
from design_lattice.boolean.spec import BooleanDesignSpec, Variant, vector_label

__all__ = [
    "CountMethod",
    "CountTable",
    "CountTableModel",
    "alpha_double_factorial",
    "alpha_product",
    "alpha_table",
    "block_counts",
    "hamming_weight_enumerator",
    "ZeroSumSearch",
    "build_design",
    "build_verified",
    "count_zero_sum_subsets",
    "zero_sum_blocks",
    "FiniteField",
    "PlanesAuditReport",
    "octuples_without_plane_pair",
    "quadruples_are_planes_audit",
    "IrreducibleReportModel",
    "c_block",
    "decompositions",
    "irreducible_count",
    "is_irreducible",
    "is_reducible",
    "BooleanDesignSpec",
    "Variant",
    "vector_label",
]
