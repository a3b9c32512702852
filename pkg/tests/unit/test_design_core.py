"""Tests for design verification, transforms and the Gram audit."""

from dataclasses import replace
from itertools import combinations
from math import comb

import pytest

from design_lattice.boolean.enumerate import build_design
from design_lattice.boolean.spec import BooleanDesignSpec
from design_lattice.design.core import (
    Design,
    DesignParams,
    complement,
    derived,
    gram_audit,
    incidence_matrix,
    level_parameters,
    supplement,
    verify_design,
)
from design_lattice.errors import (
    AuditFailed,
    BudgetExceeded,
    EmptyFamily,
    IsolatedPoint,
    NonIntegral,
    NotADesign,
    PreconditionError,
)
from design_lattice.linalg.matrix import IntMatrix
from tests.utils.factories import DesignFactory
from tests.utils.helpers import block_sets

FIXTURES = ["fano", "ag23_lines", "ag23_parallel_pairs", "sts13", "biplane11", "triangle", "bqs8", "bqs16"]
STRENGTH = {"bqs8": 3, "bqs16": 3}


def blocks_through_subset(design: Design, subset: tuple[int, ...]) -> int:
    return sum(1 for block in design.blocks if set(subset) <= set(block))


class TestDesignConstruction:
    """Tests for canonical construction."""

    def test_create_canonicalizes(self):
        """Test that blocks and family are sorted."""
        design = Design.create(4, [[3, 1], [2, 0]])
        assert design.blocks == ((0, 2), (1, 3))
        assert design.k == 2
        assert design.b == 2

    def test_repeated_block_rejected(self):
        """Test that a block given twice is rejected."""
        with pytest.raises(PreconditionError):
            Design.create(3, [[0, 1], [1, 0]])

    def test_repeated_point_rejected(self):
        """Test that a block repeating a point is rejected."""
        with pytest.raises(PreconditionError):
            Design.create(3, [[0, 0]])

    def test_mixed_sizes_rejected(self):
        """Test that blocks of different sizes are rejected."""
        with pytest.raises(PreconditionError):
            Design.create(4, [[0, 1], [0, 1, 2]])

    def test_out_of_range_rejected(self):
        """Test that indices beyond v are rejected."""
        with pytest.raises(PreconditionError):
            Design.create(3, [[0, 3]])

    def test_empty_family_needs_k(self):
        """Test that an empty family requires an explicit block size."""
        with pytest.raises(PreconditionError):
            Design.create(3, [])
        assert DesignFactory.empty().is_degenerate

    def test_direct_constructor_requires_canonical(self):
        """Test that the raw constructor refuses unsorted families."""
        with pytest.raises(PreconditionError):
            Design(v=3, k=2, blocks=((1, 2), (0, 1)))

    def test_labels(self):
        """Test label lookup with and without labels."""
        design = Design.create(2, [[0, 1]], labels=["a", "b"])
        assert design.label(1) == "b"
        assert Design.create(2, [[0, 1]]).label(1) == "1"

    def test_block_masks(self, fano):
        """Test the bitmask view of blocks."""
        assert fano.block_masks[0] == 0b111


class TestVerifyDesign:
    """Tests for verify_design."""

    def test_fano(self, fano):
        """Test the Fano plane parameters."""
        params = verify_design(fano, 2)
        assert (params.t, params.v, params.k, params.r_t, params.b, params.r, params.lam) == (2, 7, 3, 1, 7, 3, 1)
        assert params.symmetric
        assert params.steiner
        assert params.describe() == "2-(7,3,1), b=7, r=3"

    def test_affine_plane(self, ag23_lines):
        """Test the twelve-line design on nine points."""
        params = verify_design(ag23_lines, 2)
        assert (params.t, params.v, params.k, params.r_t, params.b, params.r, params.lam) == (2, 9, 3, 1, 12, 4, 1)
        assert not params.symmetric

    def test_single_block(self, single_pair):
        """Test the complete design on two points."""
        params = verify_design(single_pair, 2)
        assert (params.t, params.v, params.k, params.r_t, params.b, params.r, params.lam) == (2, 2, 2, 1, 1, 1, 1)

    def test_parallel_pairs(self, ag23_parallel_pairs):
        """Test the 2-(9,6,5) design."""
        params = verify_design(ag23_parallel_pairs, 2)
        assert (params.r_t, params.b, params.r) == (5, 12, 8)

    def test_quadruple_system_is_three_design(self, bqs8):
        """Test the 3-(8,4,1) design of zero-sum quadruples."""
        params = verify_design(bqs8, 3)
        assert params.levels == (14, 7, 3, 1)
        assert params.lam == 3

    def test_lower_strength(self, fano):
        """Test that a 2-design also verifies at t=1 with no lambda."""
        params = verify_design(fano, 1)
        assert params.r_t == 3
        assert params.lam is None

    def test_missing_pair(self):
        """Test the witness for a pair covered by no block."""
        with pytest.raises(NotADesign) as exc_info:
            verify_design(DesignFactory.unbalanced(), 2)
        witness = exc_info.value.witness
        assert witness[0] == (1, 2)
        assert witness[1] == 0

    def test_unequal_replication(self):
        """Test that unequal point counts fail at t=1."""
        with pytest.raises(NotADesign):
            verify_design(DesignFactory.unbalanced(), 1)

    def test_empty_family(self):
        """Test that an empty family is rejected."""
        with pytest.raises(EmptyFamily):
            verify_design(DesignFactory.empty(), 2)

    @pytest.mark.parametrize("t", [0, 4])
    def test_strength_out_of_range(self, fano, t):
        """Test that t outside 1..k is rejected."""
        with pytest.raises(PreconditionError):
            verify_design(fano, t)

    @pytest.mark.parametrize("name", FIXTURES)
    def test_fixture_identities(self, request, name):
        """Test v*r == b*k and every level against exhaustive counting."""
        design = request.getfixturevalue(name)
        t = STRENGTH.get(name, 2)
        params = verify_design(design, t)
        assert params.v * params.r == params.b * params.k
        for s in range(1, t + 1):
            counts = {blocks_through_subset(design, sub) for sub in combinations(range(design.v), s)}
            assert counts == {level_parameters(params, s)}


class TestLevelParameters:
    """Tests for level_parameters."""

    def test_quadruple_levels(self, bqs8):
        """Test r_2, r_1 and b of the 3-(8,4,1) design."""
        params = verify_design(bqs8, 3)
        assert level_parameters(params, 2) == 3
        assert level_parameters(params, 1) == 7
        assert level_parameters(params, 0) == 14

    def test_fano_replication(self, fano_params):
        """Test r_1 of the Fano plane."""
        assert level_parameters(fano_params, 1) == 3
        assert level_parameters(fano_params, 2) == 1

    def test_non_integral(self):
        """Test that inconsistent parameters are reported."""
        params = DesignParams(t=2, v=8, k=3, r_t=1, b=0, r=0, lam=1)
        with pytest.raises(NonIntegral):
            level_parameters(params, 1)

    def test_out_of_range(self, fano_params):
        """Test that s above t is rejected."""
        with pytest.raises(PreconditionError):
            level_parameters(fano_params, 3)


class TestComplement:
    """Tests for the complementary design."""

    def test_fano(self, fano, fano_params):
        """Test that the Fano complement is a 2-(7,4,2) design."""
        result = complement(fano, fano_params)
        params = verify_design(result, 2)
        assert (params.k, params.r_t, params.b) == (4, 2, 7)
        assert params.r_t == fano_params.b - 2 * fano_params.r + fano_params.lam

    def test_single_block(self):
        """Test the complement of {0,1} on three points."""
        result = complement(Design.create(3, [[0, 1]]))
        assert result.blocks == ((2,),)

    @pytest.mark.parametrize("name", ["fano", "ag23_lines", "sts13", "biplane11", "bqs8"])
    def test_involution(self, request, name):
        """Test that complementing twice returns the design."""
        design = request.getfixturevalue(name)
        assert complement(complement(design)) == design

    def test_parallel_pairs_complement_lines(self, ag23_lines, ag23_parallel_pairs):
        """Test that the complement of a parallel pair is the third parallel line."""
        assert complement(ag23_parallel_pairs) == ag23_lines

    def test_full_block_rejected(self):
        """Test that k == v has no complement."""
        with pytest.raises(PreconditionError):
            complement(Design.create(3, [[0, 1, 2]]))


class TestSupplement:
    """Tests for the supplementary design."""

    def test_fano(self, fano, fano_params):
        """Test that the Fano supplement is a 2-(7,3,4) design with 28 blocks."""
        result = supplement(fano, fano_params)
        params = verify_design(result, 2)
        assert params.b == 28
        assert params.lam == comb(5, 1) - 1

    @pytest.mark.parametrize("name", ["fano", "ag23_lines", "biplane11"])
    def test_involution(self, request, name):
        """Test that the supplement of the supplement is the design."""
        design = request.getfixturevalue(name)
        assert supplement(supplement(design)) == design

    def test_commutes_with_complement(self, fano):
        """Test that supplement and complement commute on the Fano plane."""
        assert complement(supplement(fano)) == supplement(complement(fano))

    def test_complete_design_empty(self, triangle):
        """Test that the complete design has no supplement."""
        with pytest.raises(EmptyFamily):
            supplement(triangle)

    def test_budget(self, monkeypatch, sts13):
        """Test that an oversized enumeration is refused."""
        from design_lattice.design import core

        monkeypatch.setattr(core, "ENUMERATION", replace(core.ENUMERATION, BUDGET=100))
        with pytest.raises(BudgetExceeded):
            supplement(sts13)

    def test_explicit_budget(self, fano, fano_params):
        """Test that the budget argument caps C(v,k) = 35 for the Fano plane."""
        with pytest.raises(BudgetExceeded) as exc_info:
            supplement(fano, fano_params, budget=34)
        assert exc_info.value.size == 35
        assert supplement(fano, fano_params, budget=35).b == 28


class TestDerived:
    """Tests for the derived design."""

    def test_fano_at_zero(self, fano):
        """Test that the Fano plane derives to three disjoint pairs."""
        result = derived(fano, 0)
        assert result.v == 6
        assert result.blocks == ((0, 1), (2, 3), (4, 5))

    def test_quadruple_system_gives_fano(self, bqs8):
        """Test that the quadruple system derives at zero to the projective triples."""
        result = derived(bqs8, 0)
        params = verify_design(result, 2)
        assert (params.v, params.k, params.r_t, params.b) == (7, 3, 1, 7)
        assert result == build_design(BooleanDesignSpec.projective(3, 3))

    def test_isolated_point(self):
        """Test that a point in no block is rejected."""
        with pytest.raises(IsolatedPoint) as exc_info:
            derived(DesignFactory.with_isolated_point(), 3)
        assert exc_info.value.point == 3

    def test_point_out_of_range(self, fano):
        """Test that a point beyond v is rejected."""
        with pytest.raises(PreconditionError):
            derived(fano, 7)

    def test_labels_follow_points(self):
        """Test that labels drop the derived point."""
        design = Design.create(3, [[0, 1], [0, 2], [1, 2]], labels=["a", "b", "c"])
        result = derived(design, 1)
        assert result.labels == ("a", "c")
        assert block_sets(result) == {frozenset({0}), frozenset({1})}


class TestIncidenceMatrix:
    """Tests for the incidence matrix."""

    def test_single_block(self, single_pair):
        """Test the 1x2 matrix of a single pair."""
        assert incidence_matrix(single_pair) == IntMatrix.from_rows([[1, 1]])

    def test_affine_plane_rows(self, ag23_lines):
        """Test that rows are blocks and columns are points."""
        A = incidence_matrix(ag23_lines)
        assert A.shape == (12, 9)
        assert A.row(0) == (1, 1, 1, 0, 0, 0, 0, 0, 0)

    @pytest.mark.parametrize("name", ["fano", "ag23_lines", "sts13", "biplane11"])
    def test_row_and_column_sums(self, request, name):
        """Test that rows sum to k and columns to r."""
        design = request.getfixturevalue(name)
        params = verify_design(design, 2)
        A = incidence_matrix(design)
        assert all(sum(row) == params.k for row in A)
        assert all(sum(A.column(j)) == params.r for j in range(A.cols))


class TestGramAudit:
    """Tests for the Gram audit."""

    def test_fano(self, fano, fano_params):
        """Test A^T A = 2I + J with determinant 576."""
        report = gram_audit(fano, fano_params)
        assert report.determinant == 576
        assert report.symmetric
        assert report.gram[0, 0] == 3 and report.gram[0, 1] == 1

    def test_affine_plane(self, ag23_lines):
        """Test the affine-plane determinant."""
        report = gram_audit(ag23_lines, verify_design(ag23_lines, 2))
        assert report.determinant == 4 * 3 * 3**8
        assert not report.symmetric

    @pytest.mark.parametrize("name", ["ag23_parallel_pairs", "sts13", "biplane11", "triangle", "bqs8"])
    def test_passes_on_fixtures(self, request, name):
        """Test that every 2-design fixture passes."""
        design = request.getfixturevalue(name)
        report = gram_audit(design, verify_design(design, 2))
        assert report.determinant == report.expected_determinant

    def test_single_pair(self, single_pair):
        """Test the rank-one Gram matrix of a single pair."""
        report = gram_audit(single_pair, verify_design(single_pair, 2))
        assert report.gram == IntMatrix.from_rows([[1, 1], [1, 1]])
        assert report.determinant == 0

    def test_strength_one_rejected(self, fano):
        """Test that t < 2 is a precondition failure."""
        with pytest.raises(PreconditionError):
            gram_audit(fano, verify_design(fano, 1))

    def test_wrong_parameters_fail(self, fano, fano_params):
        """Test that wrong parameters give a witness entry."""
        with pytest.raises(AuditFailed) as exc_info:
            gram_audit(fano, replace(fano_params, lam=2))
        assert exc_info.value.witness["entry"] == (0, 1)

    def test_report_dict(self, fano, fano_params):
        """Test the serializable report."""
        data = gram_audit(fano, fano_params).to_dict()
        assert data["determinant"] == "576"
        assert data["passed"] is True
