"""Tests for the zero-sum quadruple and octuple audits."""

import pytest

from design_lattice.boolean.planes import (
    affine_planes,
    octuples_without_plane_pair,
    quadruples_are_planes_audit,
    two_dimensional_subspaces,
)
from design_lattice.errors import BudgetExceeded, PreconditionError


class TestPlanes:
    """Tests for the plane enumeration."""

    @pytest.mark.parametrize("n,subspaces,planes", [(2, 1, 1), (3, 7, 14), (4, 35, 140), (5, 155, 1240)])
    def test_counts(self, n, subspaces, planes):
        """Test the numbers of subspaces and their cosets."""
        assert len(two_dimensional_subspaces(n)) == subspaces
        assert len(affine_planes(n)) == planes

    def test_subspaces_contain_zero(self):
        assert all(s[0] == 0 for s in two_dimensional_subspaces(3))


class TestQuadruplesAudit:
    """Tests for quadruples_are_planes_audit."""

    @pytest.mark.parametrize("n,expected", [(2, 1), (3, 14), (4, 140), (5, 1240)])
    def test_audit(self, n, expected):
        """Test that zero-sum quadruples are exactly the affine planes."""
        report = quadruples_are_planes_audit(n)
        assert report.quadruples == report.planes == expected
        assert report.to_dict()["passed"] is True

    def test_small_n(self):
        with pytest.raises(PreconditionError):
            quadruples_are_planes_audit(1)

    def test_explicit_budget(self):
        """Test that C(16, 4) = 1820 candidates need a budget of at least 1820."""
        with pytest.raises(BudgetExceeded) as exc_info:
            quadruples_are_planes_audit(4, budget=1819)
        assert exc_info.value.size == 1820
        assert quadruples_are_planes_audit(4, budget=1820).planes == 140


class TestOctuples:
    """Tests for octuples_without_plane_pair."""

    def test_every_octuple_of_z2_4_splits(self):
        """Test that each zero-sum 8-subset of Z_2^4 is two disjoint planes."""
        assert octuples_without_plane_pair(4) == []

    def test_z2_3(self):
        """Test the whole space of Z_2^3."""
        assert octuples_without_plane_pair(3) == []

    def test_budget(self):
        """Test that Z_2^6 is beyond the default budget."""
        with pytest.raises(BudgetExceeded):
            octuples_without_plane_pair(6)
