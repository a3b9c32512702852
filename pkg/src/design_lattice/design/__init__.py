"""Incidence structures, design verification and transforms."""

from design_lattice.design.core import (
    Design,
    DesignParams,
    GramAuditReport,
    complement,
    derived,
    gram_audit,
    incidence_matrix,
    level_parameters,
    supplement,
    verify_design,
)
from design_lattice.design.io import (
    DesignModel,
    ParamsModel,
    design_from_json,
    design_to_json,
    load_design,
    params_to_model,
)
from design_lattice.design.library import builtin, complete_design, cyclic_development

__all__ = [
    "Design",
    "DesignParams",
    "GramAuditReport",
    "complement",
    "derived",
    "gram_audit",
    "incidence_matrix",
    "level_parameters",
    "supplement",
    "verify_design",
    "DesignModel",
    "ParamsModel",
    "design_from_json",
    "design_to_json",
    "load_design",
    "params_to_model",
    "builtin",
    "complete_design",
    "cyclic_development",
]
