"""
Exact integer matrices.

IntMatrix stores Python integers in a read-only numpy object array, so
every product and elimination step is carried out with arbitrary
precision. Nothing here ever casts to a fixed-width dtype.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator

from design_lattice.errors import DesignFormatError, DimensionMismatch

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def as_object_array(rows: Iterable[Iterable[int]], cols: int | None = None) -> np.ndarray:
    """Build a 2-D object array of Python ints from nested iterables."""
    data = [[int(x) for x in row] for row in rows]
    if not data:
        return np.zeros((0, cols or 0), dtype=object)
    width = len(data[0])
    if any(len(row) != width for row in data):
        raise DimensionMismatch(width, next(len(row) for row in data if len(row) != width))
    array = np.empty((len(data), width), dtype=object)
    for i, row in enumerate(data):
        array[i, :] = row
    return array


class IntMatrix:
    """Immutable dense matrix of exact integers."""

    __slots__ = ("_data",)

    def __init__(self, data: np.ndarray) -> None:
        """
        Wrap a 2-D array.

        Args:
            data: Any 2-D integer-valued array; it is copied to dtype=object.
        """
        if data.ndim != 2:
            raise DimensionMismatch(2, data.ndim)
        array = np.empty(data.shape, dtype=object)
        for index, x in np.ndenumerate(data):
            array[index] = int(x)
        array.flags.writeable = False
        self._data = array

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        """Build a matrix from a list of rows (``cols`` fixes the width when empty)."""
        return cls(as_object_array(rows, cols))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        """Return the rows x cols zero matrix."""
        array = np.empty((rows, cols), dtype=object)
        array.fill(0)
        return cls(array)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        """Return the n x n identity."""
        return cls(identity_array(n))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: int, cols: int) -> IntMatrix:
        """Return a rows x cols matrix with ``entries`` on the main diagonal."""
        array = np.empty((rows, cols), dtype=object)
        array.fill(0)
        for i, d in enumerate(entries):
            array[i, i] = int(d)
        return cls(array)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entries(self) -> tuple[tuple[int, ...], ...]:
        """Return the entries as nested tuples (row-major)."""
        return tuple(tuple(int(x) for x in row) for row in self._data.tolist())

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._data[i, :].tolist())

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._data[:, j].tolist())

    def to_array(self) -> np.ndarray:
        """Return a writable object-array copy."""
        return self._data.copy()

    def __getitem__(self, key: tuple[int, int]) -> int:
        return int(self._data[key])

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.entries())

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------

    def transpose(self) -> IntMatrix:
        return IntMatrix(self._data.T)

    @property
    def T(self) -> IntMatrix:  # noqa: N802
        return self.transpose()

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(self.cols, other.rows)
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix(self._data.dot(other._data))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(self.rows * self.cols, other.rows * other.cols)
        return IntMatrix(self._data + other._data)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(self.rows * self.cols, other.rows * other.cols)
        return IntMatrix(self._data - other._data)

    def scale(self, factor: int) -> IntMatrix:
        return IntMatrix(self._data * int(factor))

    def vector_product(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Return the row vector ``vector @ self``."""
        if len(vector) != self.rows:
            raise DimensionMismatch(self.rows, len(vector))
        out = [0] * self.cols
        for coefficient, row in zip(vector, self._data.tolist(), strict=True):
            if coefficient:
                for j, x in enumerate(row):
                    out[j] += coefficient * x
        return tuple(out)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._data.flat)

    def max_abs(self) -> int:
        return max((abs(int(x)) for x in self._data.flat), default=0)

    # ------------------------------------------------------------------
    # Comparison and display
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._data == other._data))

    def __hash__(self) -> int:
        return hash((self.shape, self.entries()))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries()]})"

    def __str__(self) -> str:
        if not self.rows:
            return f"[] ({self.rows}x{self.cols})"
        width = max(len(str(x)) for x in self._data.flat) if self._data.size else 1
        lines = (" ".join(str(x).rjust(width) for x in row) for row in self.entries())
        return "\n".join(f"[{line}]" for line in lines)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_model(self) -> MatrixModel:
        return MatrixModel(
            rows=self.rows,
            cols=self.cols,
            entries=[[_encode_int(x) for x in row] for row in self.entries()],
        )

    def to_json(self) -> str:
        return self.to_model().model_dump_json()

    @classmethod
    def from_model(cls, model: MatrixModel) -> IntMatrix:
        entries = [[int(x) for x in row] for row in model.entries]
        if len(entries) != model.rows:
            raise DesignFormatError(f"matrix declares {model.rows} rows, found {len(entries)}")
        if any(len(row) != model.cols for row in entries):
            raise DesignFormatError(f"matrix rows must have {model.cols} entries")
        return cls.from_rows(entries, model.cols)

    @classmethod
    def from_json(cls, text: str) -> IntMatrix:
        try:
            model = MatrixModel.model_validate_json(text)
        except ValidationError as e:
            raise DesignFormatError(f"invalid matrix JSON: {e.error_count()} error(s)") from e
        return cls.from_model(model)


def identity_array(n: int) -> np.ndarray:
    """Writable n x n identity as an object array."""
    array = np.empty((n, n), dtype=object)
    array.fill(0)
    for i in range(n):
        array[i, i] = 1
    return array


def _encode_int(x: int) -> int | str:
    """Integers outside the signed 64-bit range travel as decimal strings."""
    return x if INT64_MIN <= x <= INT64_MAX else str(x)


class MatrixModel(BaseModel):
    """Matrix JSON: ``{"rows": r, "cols": c, "entries": [[...], ...]}``."""

    rows: int = Field(..., ge=0)
    cols: int = Field(..., ge=0)
    entries: list[list[int | str]]

    @field_validator("entries")
    @classmethod
    def _decimal_strings(cls, value: list[list[Any]]) -> list[list[int | str]]:
        for row in value:
            for x in row:
                if isinstance(x, str) and not x.lstrip("-").isdigit():
                    raise ValueError(f"{x!r} is not a decimal integer")
        return value
