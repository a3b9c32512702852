"""Tests for design JSON models."""

import json

import pytest

from design_lattice.design.core import Design, verify_design
from design_lattice.design.io import (
    design_from_json,
    design_to_json,
    dump_design,
    load_design,
    params_to_model,
)
from design_lattice.errors import DesignFormatError


class TestDesignJson:
    """Tests for design serialization."""

    def test_round_trip(self, fano):
        """Test that a design survives serialization."""
        assert design_from_json(design_to_json(fano)) == fano

    def test_canonical_order(self):
        """Test that blocks are written in canonical order."""
        design = Design.create(4, [[3, 2], [1, 0]])
        data = json.loads(design_to_json(design))
        assert data["version"] == 1
        assert data["blocks"] == [[0, 1], [2, 3]]
        assert "labels" not in data

    def test_labels_kept(self, bqs8):
        """Test that labels travel with the design."""
        data = json.loads(design_to_json(bqs8))
        assert data["labels"][1] == "100"
        assert design_from_json(design_to_json(bqs8)).labels == bqs8.labels

    def test_empty_family_keeps_k(self):
        """Test that an empty family keeps its block size."""
        design = Design.create(5, [], k=3)
        assert design_from_json(design_to_json(design)) == design

    def test_unsorted_input_accepted(self):
        """Test that readers canonicalize blocks."""
        design = design_from_json('{"version": 1, "v": 3, "blocks": [[2, 1], [1, 0]]}')
        assert design.blocks == ((0, 1), (1, 2))

    @pytest.mark.parametrize(
        "payload",
        [
            {"version": 1, "v": 3, "blocks": [[0, 3]]},
            {"version": 1, "v": 3, "blocks": [[0, -1]]},
            {"version": 1, "v": 3, "blocks": [[0, 1], [1, 0]]},
            {"version": 2, "v": 3, "blocks": [[0, 1]]},
            {"version": 1, "v": 0, "blocks": []},
            {"version": 1, "v": 3, "blocks": [[0, 1]], "labels": ["a"]},
            {"version": 1, "v": 3, "blocks": [[0, 1], [0, 1, 2]]},
            {"version": 1, "v": 3, "blocks": [[0, 0]]},
            {"version": 1, "v": 3, "blocks": []},
        ],
    )
    def test_invalid_payloads(self, payload):
        """Test that malformed designs are rejected."""
        with pytest.raises(DesignFormatError):
            design_from_json(json.dumps(payload))

    def test_not_json(self):
        """Test that non-JSON text is rejected."""
        with pytest.raises(DesignFormatError):
            design_from_json("blocks: 1 2 3")


class TestDesignFiles:
    """Tests for reading and writing files."""

    def test_dump_and_load(self, tmp_path, sts13):
        """Test a file round trip."""
        path = tmp_path / "sts13.json"
        dump_design(sts13, path)
        assert load_design(path) == sts13

    def test_missing_file(self, tmp_path):
        """Test that an unreadable path is a format error."""
        with pytest.raises(DesignFormatError):
            load_design(tmp_path / "absent.json")

    def test_fixture_writer(self, raw_design_file):
        """Test loading a handwritten file."""
        path = raw_design_file({"version": 1, "v": 2, "blocks": [[0, 1]]})
        assert load_design(path).b == 1


class TestParamsModel:
    """Tests for parameter serialization."""

    def test_lambda_alias(self, fano):
        """Test that lambda is written under its own name."""
        data = params_to_model(verify_design(fano, 2)).model_dump(by_alias=True)
        assert data["lambda"] == 1
        assert data["levels"] == [7, 3, 1]
        assert data["symmetric"] is True

    def test_no_lambda_at_strength_one(self, fano):
        """Test that lambda is null for t=1."""
        assert params_to_model(verify_design(fano, 1)).lam is None
