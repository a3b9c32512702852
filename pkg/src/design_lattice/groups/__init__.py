"""The abelian group of a design and embeddability."""

from design_lattice.groups.abelian import AbelianGroup, GroupElement
from design_lattice.groups.embedding import (
    EmbeddingReportModel,
    EmbeddingResult,
    ExponentAuditReport,
    NonInjectivityWitness,
    embedding_group,
    embedding_report,
    exponent_audit,
    is_embeddable,
    non_injectivity_witness,
)
from design_lattice.groups.partition import block_partition_exists, find_block_partition

__all__ = [
    "AbelianGroup",
    "GroupElement",
    "EmbeddingReportModel",
    "EmbeddingResult",
    "ExponentAuditReport",
    "NonInjectivityWitness",
    "embedding_group",
    "embedding_report",
    "exponent_audit",
    "is_embeddable",
    "non_injectivity_witness",
    "block_partition_exists",
    "find_block_partition",
]
