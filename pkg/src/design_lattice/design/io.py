"""
JSON wire models for designs and their parameters.

Designs travel as ``{"version": 1, "v": 7, "blocks": [[0,1,2], ...]}`` with
optional ``labels`` and ``k``. The ``k`` key lets an empty family keep its
block size across a round trip.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, ValidationError, model_validator

from design_lattice.design.core import Design, DesignParams
from design_lattice.errors import DesignFormatError, PreconditionError

logger = logging.getLogger(__name__)


class DesignModel(BaseModel):
    """Serialized design."""

    version: Literal[1] = 1
    v: int = Field(..., ge=1, description="Number of points")
    blocks: list[list[int]] = Field(default_factory=list)
    labels: list[str] | None = None
    k: int | None = Field(default=None, ge=1, description="Block size, needed when blocks is empty")

    @model_validator(mode="after")
    def _check_indices(self) -> DesignModel:
        seen: set[tuple[int, ...]] = set()
        for block in self.blocks:
            for p in block:
                if not 0 <= p < self.v:
                    raise ValueError(f"point {p} outside 0..{self.v - 1}")
            key = tuple(sorted(block))
            if key in seen:
                raise ValueError(f"duplicate block {list(key)}")
            seen.add(key)
        if self.labels is not None and len(self.labels) != self.v:
            raise ValueError(f"{len(self.labels)} labels for {self.v} points")
        return self


class ParamsModel(BaseModel):
    """Serialized DesignParams."""

    t: int
    v: int
    k: int
    r_t: int
    b: int
    r: int
    lam: int | None = Field(default=None, alias="lambda", serialization_alias="lambda")
    levels: list[int]
    symmetric: bool
    steiner: bool

    model_config = {"populate_by_name": True}


def design_to_model(design: Design) -> DesignModel:
    return DesignModel(
        v=design.v,
        blocks=[list(block) for block in design.blocks],
        labels=list(design.labels) if design.labels is not None else None,
        k=design.k,
    )


def design_from_model(model: DesignModel) -> Design:
    try:
        return Design.create(model.v, model.blocks, labels=model.labels, k=model.k)
    except PreconditionError as e:
        raise DesignFormatError(str(e)) from e


def design_to_json(design: Design) -> str:
    """Canonical JSON text of a design."""
    return design_to_model(design).model_dump_json(exclude_none=True)


def design_from_json(text: str) -> Design:
    """
    Parse a design from JSON.

    Raises:
        DesignFormatError: On malformed JSON, out-of-range indices,
            duplicate blocks or mixed block sizes.
    """
    try:
        model = DesignModel.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        raise DesignFormatError(f"invalid design JSON: {first.get('msg', 'validation error')}") from e
    return design_from_model(model)


def load_design(path: Path) -> Design:
    """Read a design JSON file."""
    logger.debug("Reading design from %s", path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DesignFormatError(f"cannot read {path}: {e.strerror}") from e
    return design_from_json(text)


def dump_design(design: Design, path: Path) -> None:
    path.write_text(design_to_json(design) + "\n", encoding="utf-8")


def params_to_model(params: DesignParams) -> ParamsModel:
    return ParamsModel(
        t=params.t,
        v=params.v,
        k=params.k,
        r_t=params.r_t,
        b=params.b,
        r=params.r,
        lam=params.lam,
        levels=list(params.levels),
        symmetric=params.symmetric,
        steiner=params.steiner,
    )
