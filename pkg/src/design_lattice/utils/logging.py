"""
Structured logging utilities.

Provides JSON logging with run ID propagation and an audit logger for
domain events (verifications, audits, enumerations, normal forms).
"""

from __future__ import annotations

import json
import logging
import sys
import uuid
from collections.abc import Sequence
from contextvars import ContextVar
from datetime import UTC, datetime
from typing import Any

from design_lattice.config import LOGGING

# Context variable for run ID propagation
run_id_var: ContextVar[str] = ContextVar("run_id", default="")


def generate_run_id() -> str:
    """Generate a unique run ID."""
    return uuid.uuid4().hex[:12]


class JSONFormatter(logging.Formatter):
    """JSON log formatter for structured logging."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as JSON."""
        log_data: dict[str, Any] = {
            "timestamp": datetime.now(UTC).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }

        run_id = run_id_var.get()
        if run_id:
            log_data["run_id"] = run_id

        if hasattr(record, "extra_data"):
            log_data.update(record.extra_data)

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_data, default=str)


def setup_logging(
    level: str | None = None,
    json_format: bool | None = None,
) -> None:
    """
    Configure logging for the application.

    Logs go to stderr; stdout is reserved for reports.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR).
        json_format: Whether to use JSON formatting.
    """
    log_level = getattr(logging, (level or LOGGING.LEVEL).upper(), logging.WARNING)
    use_json = LOGGING.JSON if json_format is None else json_format

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)

    if use_json:
        console_handler.setFormatter(JSONFormatter())
    else:
        console_handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )

    root_logger.addHandler(console_handler)


class AuditLogger:
    """
    Specialized logger for domain events.

    Every event carries an ``event`` key so log consumers can filter on it.
    """

    def __init__(self) -> None:
        """Initialize audit logger."""
        self._logger = logging.getLogger("design_lattice.audit")

    def _emit(self, level: int, message: str, **fields: Any) -> None:
        self._logger.log(level, message, extra={"extra_data": fields})

    def log_design_verified(self, t: int, v: int, k: int, r_t: int, b: int) -> None:
        """
        Log a successful t-design verification.

        Args:
            t: Strength.
            v: Number of points.
            k: Block size.
            r_t: Blocks through any t points.
            b: Number of blocks.
        """
        self._emit(
            logging.INFO,
            "Design verified",
            event="design_verified",
            t=t,
            v=v,
            k=k,
            r_t=r_t,
            b=b,
        )

    def log_audit(self, name: str, passed: bool, detail: dict[str, Any] | None = None) -> None:
        """
        Log the outcome of an exact audit.

        Args:
            name: Audit name (gram, exponent, planes, ...).
            passed: Whether every identity held.
            detail: Values the audit compared.
        """
        self._emit(
            logging.INFO if passed else logging.WARNING,
            "Audit passed" if passed else "Audit failed",
            event="audit",
            audit=name,
            passed=passed,
            **(detail or {}),
        )

    def log_enumeration(
        self,
        variant: str,
        v: int,
        k: int,
        scanned: int,
        found: int,
        duration_ms: float,
    ) -> None:
        """
        Log a finished zero-sum enumeration.

        Args:
            variant: Construction variant (field, affine, projective, dependent).
            v: Number of points.
            k: Subset size.
            scanned: Candidate prefixes examined.
            found: Blocks found.
            duration_ms: Wall time in milliseconds.
        """
        self._emit(
            logging.INFO,
            "Enumeration finished",
            event="enumeration",
            variant=variant,
            v=v,
            k=k,
            scanned=scanned,
            found=found,
            duration_ms=round(duration_ms, 2),
        )

    def log_normal_form(
        self,
        kind: str,
        rows: int,
        cols: int,
        rank: int,
        duration_ms: float,
    ) -> None:
        """
        Log a Hermite or Smith normal form computation.

        Args:
            kind: "hermite" or "smith".
            rows: Input row count.
            cols: Input column count.
            rank: Rank found.
            duration_ms: Wall time in milliseconds.
        """
        self._emit(
            logging.DEBUG,
            "Normal form computed",
            event="normal_form",
            kind=kind,
            rows=rows,
            cols=cols,
            rank=rank,
            duration_ms=round(duration_ms, 2),
        )

    def log_embedding(self, v: int, torsion: Sequence[int], free_rank: int, injective: bool) -> None:
        """
        Log the group computed for a design.

        Args:
            v: Number of points.
            torsion: Invariant factors.
            free_rank: Rank of the free part.
            injective: Whether distinct points stay distinct.
        """
        self._emit(
            logging.INFO,
            "Embedding computed",
            event="embedding",
            v=v,
            torsion=list(torsion),
            free_rank=free_rank,
            injective=injective,
        )


# Module-level audit logger instance
audit_logger = AuditLogger()
