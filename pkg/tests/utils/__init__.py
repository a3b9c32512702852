"""Test utilities and helpers for design_lattice tests."""
