"""
Golden path tests.

End-to-end checks across design construction, the normal forms and the
group computations, on the known designs with known answers.
"""

from math import comb

import pytest

from design_lattice.boolean.counts import CountMethod, block_counts
from design_lattice.boolean.enumerate import build_verified
from design_lattice.boolean.spec import BooleanDesignSpec
from design_lattice.design.core import complement, gram_audit, incidence_matrix, supplement, verify_design
from design_lattice.design.io import design_from_json, design_to_json
from design_lattice.design.library import builtin
from design_lattice.groups.embedding import (
    embedding_group,
    exponent_audit,
    is_embeddable,
    non_injectivity_witness,
)
from design_lattice.linalg.normal_forms import smith_normal_form


def nondegenerate(spec: BooleanDesignSpec):
    design, params = build_verified(spec)
    if design.is_degenerate:
        pytest.skip(f"{spec.describe()} has no blocks")
    return design, params


class TestKnownGroups:
    """Groups of the built-in designs."""

    GROUPS = [
        ("ag23-lines", (3, 3, 3), 0, True),
        ("ag23-parallel-pairs", (3, 3, 6), 0, True),
        ("fano", (2, 2, 6), 0, True),
        ("sts13", (3,), 0, False),
        ("triangle", (2,), 0, False),
    ]

    @pytest.mark.parametrize("name,torsion,free_rank,injective", GROUPS)
    def test_group(self, name, torsion, free_rank, injective):
        """Test the invariant factors, free rank and injectivity."""
        result = embedding_group(builtin(name))
        assert result.group.torsion == torsion
        assert result.group.free_rank == free_rank
        assert result.injective is injective

    def test_affine_plane_smith_diagonal(self, ag23_lines):
        """Test the full diagonal of the affine plane incidence matrix."""
        smith = smith_normal_form(incidence_matrix(ag23_lines))
        assert smith.diag == (1, 1, 1, 1, 1, 1, 3, 3, 3)


class TestEmbeddability:
    """Embeddability against the symmetric-design criterion."""

    def test_fano_complement(self, fano):
        """Test that the 2-(7,4,2) complement of the Fano plane embeds."""
        params = verify_design(fano, 2)
        comp = complement(fano, params)
        comp_params = verify_design(comp, 2)
        assert (comp_params.k, comp_params.r_t, comp_params.b) == (4, 2, 7)
        assert is_embeddable(comp)
        assert embedding_group(comp).injective

    def test_witness_and_decision_agree(self):
        """Test that a witness exists exactly when the design does not embed."""
        for name in ("fano", "biplane11", "sts13", "triangle", "ag23-lines"):
            design = builtin(name)
            assert (non_injectivity_witness(design) is None) is is_embeddable(design)


class TestExponentAudit:
    """The exponent divides k(r - lambda) on every fixture."""

    @pytest.mark.parametrize(
        "name", ["fano", "ag23-lines", "boolean-quadruple-8", "boolean-quadruple-16", "biplane11", "sts13"]
    )
    def test_builtins(self, name):
        design = builtin(name)
        report = exponent_audit(design, verify_design(design, 2))
        assert report.bound % report.exponent == 0

    @pytest.mark.parametrize("k", range(3, 7))
    def test_projective_three(self, k):
        """Test the nondegenerate projective designs of Z_2^3."""
        design, _ = nondegenerate(BooleanDesignSpec.projective(3, k))
        report = exponent_audit(design)
        assert report.bound % report.exponent == 0

    @pytest.mark.slow
    @pytest.mark.parametrize("k", range(3, 14))
    def test_projective_four(self, k):
        """Test the nondegenerate projective designs of Z_2^4."""
        design, _ = nondegenerate(BooleanDesignSpec.projective(4, k))
        report = exponent_audit(design)
        assert report.bound % report.exponent == 0

    @pytest.mark.parametrize("q,k", [(9, 3), (8, 4)])
    def test_field_designs(self, q, k):
        """Test the zero-sum designs over GF(9) and GF(8)."""
        design, params = build_verified(BooleanDesignSpec.field(q, k))
        report = exponent_audit(design, params)
        assert report.bound % report.exponent == 0


class TestGramAudit:
    """Determinant of A^T A on 2-designs."""

    @pytest.mark.parametrize("name", ["fano", "ag23-lines", "biplane11", "sts13"])
    def test_determinant(self, name):
        design = builtin(name)
        params = verify_design(design, 2)
        report = gram_audit(design, params)
        assert report.determinant == params.r * params.k * (params.r - params.lam) ** (params.v - 1)


class TestZeroSumDesigns:
    """Zero-sum constructions end to end."""

    def test_boolean_quadruples_match_builtin(self, bqs8):
        """Test that affine(3,4) is the built-in quadruple system."""
        design, params = build_verified(BooleanDesignSpec.affine(3, 4))
        assert set(design.blocks) == set(bqs8.blocks)
        assert params.t == 3

    @pytest.mark.parametrize("k", range(3, 7))
    def test_counts_match_enumeration(self, k):
        """Test the count table against built blocks and their supplements for n = 3."""
        table = block_counts(3, CountMethod.CLOSED_FORM)
        design, params = build_verified(BooleanDesignSpec.projective(3, k))
        assert design.b == table[k]
        if params is not None:
            assert supplement(design, params).b == comb(7, k) - table[k]

    def test_file_round_trip_keeps_group(self):
        """Test that a built design survives JSON and gives the same group."""
        design, _ = build_verified(BooleanDesignSpec.field(9, 3))
        restored = design_from_json(design_to_json(design))
        assert restored == design
        assert embedding_group(restored).group == embedding_group(design).group
