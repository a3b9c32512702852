"""Utility modules."""

from design_lattice.utils.logging import audit_logger, setup_logging
from design_lattice.utils.metrics import record_audit, write_metrics

__all__ = [
    "audit_logger",
    "setup_logging",
    "record_audit",
    "write_metrics",
]
