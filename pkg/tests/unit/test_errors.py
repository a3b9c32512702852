"""Tests for the exception hierarchy."""

import pytest

from design_lattice.errors import (
    AuditFailed,
    BudgetExceeded,
    DesignError,
    DesignFormatError,
    DesignLatticeError,
    DimensionMismatch,
    EmptyFamily,
    IsolatedPoint,
    NonIntegral,
    NotADesign,
    NotAZeroSumBlock,
    NotPrime,
    PreconditionError,
    SpecInvalid,
)


class TestExitCodes:
    """Tests for the exit-code flags."""

    @pytest.mark.parametrize(
        "error",
        [
            NotADesign(2, ((0, 1), 1, (1, 2), 0)),
            EmptyFamily(),
            IsolatedPoint(3),
            NonIntegral("r_1", 7, 2),
            AuditFailed("gram"),
            NotAZeroSumBlock([1, 2], "sum is not zero"),
            DesignFormatError("bad"),
        ],
    )
    def test_domain_errors_exit_1(self, error):
        """Test that domain failures map to exit status 1."""
        assert error.exit_code == 1
        assert isinstance(error, DesignLatticeError)

    @pytest.mark.parametrize(
        "error",
        [
            PreconditionError("bad"),
            NotPrime(4),
            DimensionMismatch(3, 2),
            SpecInvalid("k"),
            BudgetExceeded("x", 10, 5),
        ],
    )
    def test_usage_errors_exit_2(self, error):
        """Test that usage failures map to exit status 2."""
        assert error.exit_code == 2
        assert isinstance(error, PreconditionError)


class TestMessages:
    """Tests for structured fields and messages."""

    def test_not_a_design_witness(self):
        """Test that the witness is kept and readable."""
        error = NotADesign(2, ((0, 1), 1, (1, 2), 0))
        assert error.t == 2
        assert error.witness[2] == (1, 2)
        assert "[1, 2] lies in 0 blocks" in str(error)

    def test_design_errors_share_base(self):
        """Test the DesignError grouping."""
        for error in (EmptyFamily(), IsolatedPoint(0), NonIntegral("b", 1, 2)):
            assert isinstance(error, DesignError)

    def test_budget_message(self):
        """Test the budget message names both sizes."""
        error = BudgetExceeded("supplement", 500, 100)
        assert error.size == 500
        assert "500" in str(error) and "100" in str(error)

    def test_audit_failed_witness(self):
        """Test that the audit witness is included in the message."""
        error = AuditFailed("det", {"actual": 1})
        assert error.which == "det"
        assert "actual" in str(error)
