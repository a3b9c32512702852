"""
Pytest configuration and shared fixtures.

Provides the built-in designs, their verified parameters and a few file
fixtures for the unit and integration suites.
"""

from __future__ import annotations

import json
from collections.abc import Callable
from pathlib import Path

import pytest

from design_lattice.design.core import Design, DesignParams, verify_design
from design_lattice.design.io import design_to_json
from design_lattice.design.library import builtin

# ============================================================================
# Built-in designs
# ============================================================================


@pytest.fixture(scope="session")
def fano() -> Design:
    """The Fano plane 2-(7,3,1)."""
    return builtin("fano")


@pytest.fixture(scope="session")
def fano_params(fano: Design) -> DesignParams:
    return verify_design(fano, 2)


@pytest.fixture(scope="session")
def ag23_lines() -> Design:
    """Lines of the affine plane of order 3, in a fixed row order."""
    return builtin("ag23-lines")


@pytest.fixture(scope="session")
def ag23_parallel_pairs() -> Design:
    """Pairs of parallel lines of the affine plane of order 3."""
    return builtin("ag23-parallel-pairs")


@pytest.fixture(scope="session")
def sts13() -> Design:
    """Cyclic Steiner triple system on 13 points."""
    return builtin("sts13")


@pytest.fixture(scope="session")
def biplane11() -> Design:
    return builtin("biplane11")


@pytest.fixture(scope="session")
def triangle() -> Design:
    return builtin("triangle")


@pytest.fixture(scope="session")
def bqs8() -> Design:
    """Boolean quadruple system of order 8."""
    return builtin("boolean-quadruple-8")


@pytest.fixture(scope="session")
def bqs16() -> Design:
    """Boolean quadruple system of order 16."""
    return builtin("boolean-quadruple-16")


@pytest.fixture
def single_pair() -> Design:
    """One block {0,1} on two points."""
    return Design.create(2, [[0, 1]])


# ============================================================================
# Files
# ============================================================================


@pytest.fixture
def design_file(tmp_path: Path) -> Callable[..., Path]:
    """Write a design to a temporary JSON file and return its path."""

    def write(design: Design, name: str = "design.json") -> Path:
        path = tmp_path / name
        path.write_text(design_to_json(design), encoding="utf-8")
        return path

    return write


@pytest.fixture
def raw_design_file(tmp_path: Path) -> Callable[..., Path]:
    """Write an arbitrary JSON payload and return its path."""

    def write(payload: object, name: str = "raw.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return write


# ============================================================================
# Environment
# ============================================================================


@pytest.fixture
def clean_budget_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Ensure the enumeration budget is not forced through the environment."""
    monkeypatch.delenv("DESIGNLATTICE_BUDGET", raising=False)
