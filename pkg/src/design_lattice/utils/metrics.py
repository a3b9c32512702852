"""
Prometheus metrics for batch runs.

Metrics live in a private registry and are written to a textfile on
request, for collection by a node-exporter style scraper.
"""

from __future__ import annotations

from pathlib import Path

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

REGISTRY = CollectorRegistry()


def _get_or_create_counter(name: str, description: str, labels: list[str]) -> Counter:
    """Get existing counter or create new one."""
    if name in REGISTRY._names_to_collectors:
        return REGISTRY._names_to_collectors[name]  # type: ignore
    return Counter(name, description, labels, registry=REGISTRY)


def _get_or_create_histogram(
    name: str, description: str, labels: list[str], buckets: list[float]
) -> Histogram:
    """Get existing histogram or create new one."""
    if name in REGISTRY._names_to_collectors:
        return REGISTRY._names_to_collectors[name]  # type: ignore
    return Histogram(name, description, labels, buckets=buckets, registry=REGISTRY)


SUBSETS_SCANNED = _get_or_create_counter(
    "designlattice_subsets_scanned_total",
    "Candidate subset prefixes examined during zero-sum enumeration",
    ["variant"],
)

BLOCKS_FOUND = _get_or_create_counter(
    "designlattice_blocks_found_total",
    "Blocks produced by zero-sum enumeration",
    ["variant"],
)

NORMAL_FORM_DURATION = _get_or_create_histogram(
    "designlattice_normal_form_duration_seconds",
    "Duration of Hermite and Smith normal form computations",
    ["kind"],
    [0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0],
)

AUDITS = _get_or_create_counter(
    "designlattice_audits_total",
    "Exact audits run, by name and outcome",
    ["audit", "outcome"],
)


def record_audit(name: str, passed: bool) -> None:
    """Count one audit outcome."""
    AUDITS.labels(audit=name, outcome="passed" if passed else "failed").inc()


def write_metrics(path: Path) -> None:
    """Write the registry in text exposition format."""
    path.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(path), REGISTRY)
