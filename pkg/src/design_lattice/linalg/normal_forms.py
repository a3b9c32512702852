"""
Hermite and Smith normal forms over the integers.

Both algorithms run row and column operations on object arrays of Python
ints and accumulate the unimodular transforms alongside, so that

    U @ M == H                  (Hermite, row style)
    U @ M @ V == S              (Smith)

hold exactly for every input.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from design_lattice.errors import DimensionMismatch, PreconditionError
from design_lattice.linalg.matrix import IntMatrix, identity_array
from design_lattice.utils.logging import audit_logger
from design_lattice.utils.metrics import NORMAL_FORM_DURATION

logger = logging.getLogger(__name__)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HermiteDecomposition:
    """Row-style Hermite form H = U @ M with U unimodular."""

    H: IntMatrix
    U: IntMatrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis(self) -> IntMatrix:
        """Nonzero rows of H: a basis of the row lattice."""
        return IntMatrix.from_rows([self.H.row(i) for i in range(self.rank)], self.H.cols)


def hermite_normal_form(M: IntMatrix) -> HermiteDecomposition:
    """
    Compute the row-style Hermite normal form.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), and zero rows come last.

    Args:
        M: Any integer matrix.

    Returns:
        HermiteDecomposition with U @ M == H.
    """
    start = time.perf_counter()
    m, n = M.shape
    H = M.to_array()
    U = identity_array(m)
    pivots: list[int] = []
    row = 0

    for col in range(n):
        if row == m:
            break
        for i in range(row + 1, m):
            b = H[i, col]
            if b == 0:
                continue
            a = H[row, col]
            g, x, y = extended_gcd(a, b)
            # [[x, y], [-b/g, a/g]] has determinant 1
            p, q = -b // g, a // g
            top_h, low_h = H[row].copy(), H[i].copy()
            H[row], H[i] = x * top_h + y * low_h, p * top_h + q * low_h
            top_u, low_u = U[row].copy(), U[i].copy()
            U[row], U[i] = x * top_u + y * low_u, p * top_u + q * low_u

        pivot = H[row, col]
        if pivot == 0:
            continue
        if pivot < 0:
            H[row] = -H[row]
            U[row] = -U[row]
            pivot = -pivot
        for i in range(row):
            factor = H[i, col] // pivot
            if factor:
                H[i] -= factor * H[row]
                U[i] -= factor * U[row]
        pivots.append(col)
        row += 1

    elapsed = time.perf_counter() - start
    NORMAL_FORM_DURATION.labels(kind="hermite").observe(elapsed)
    audit_logger.log_normal_form("hermite", m, n, len(pivots), elapsed * 1000)
    return HermiteDecomposition(H=IntMatrix(H), U=IntMatrix(U), pivots=tuple(pivots))


def _hermite_pivots(H: IntMatrix) -> list[tuple[int, int]]:
    """(row, pivot column) for each nonzero row, checking the staircase shape."""
    pivots: list[tuple[int, int]] = []
    last = -1
    for i in range(H.rows):
        row = H.row(i)
        col = next((j for j, x in enumerate(row) if x != 0), None)
        if col is None:
            continue
        if col <= last:
            raise PreconditionError("matrix is not in row echelon form")
        pivots.append((i, col))
        last = col
    return pivots


def lattice_solve(H: IntMatrix, x: Sequence[int]) -> tuple[int, ...] | None:
    """
    Express ``x`` as an integer combination of the rows of a Hermite form.

    Back-substitution against the pivots: each pivot entry fixes its
    coefficient, and any remainder or leftover means x is outside the lattice.

    Args:
        H: Matrix in row echelon form (for instance a Hermite form).
        x: Target vector of length H.cols.

    Returns:
        Coefficients c (one per row of H, zero for zero rows) with c @ H == x,
        or None when x is not in the row lattice.
    """
    if len(x) != H.cols:
        raise DimensionMismatch(H.cols, len(x))
    residual = [int(v) for v in x]
    coefficients = [0] * H.rows
    for i, col in _hermite_pivots(H):
        pivot = H[i, col]
        if residual[col] % pivot:
            return None
        c = residual[col] // pivot
        if c:
            coefficients[i] = c
            for j, h in enumerate(H.row(i)):
                residual[j] -= c * h
    if any(residual):
        return None
    return tuple(coefficients)


def lattice_contains(H: IntMatrix, x: Sequence[int]) -> bool:
    """Return True iff ``x`` lies in the integer row span of the Hermite form H."""
    return lattice_solve(H, x) is not None


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """Diagonal form S = U @ A @ V with unimodular U and V."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix
    diag: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Nonzero diagonal entries greater than one."""
        return tuple(d for d in self.diag if d > 1)


def _smallest_nonzero(A: np.ndarray, t: int) -> tuple[int, int] | None:
    """Position of the smallest nonzero |entry| in A[t:, t:]; ties go to lowest row, then column."""
    best: tuple[int, int] | None = None
    best_value = 0
    rows, cols = np.nonzero(A[t:, t:] != 0)
    for i, j in zip(rows.tolist(), cols.tolist(), strict=True):
        value = abs(A[t + i, t + j])
        if best is None or value < best_value:
            best, best_value = (t + i, t + j), value
            if value == 1:
                break
    return best


def _swap_rows(A: np.ndarray, i: int, j: int) -> None:
    if i != j:
        A[[i, j]] = A[[j, i]]


def _swap_cols(A: np.ndarray, i: int, j: int) -> None:
    if i != j:
        A[:, [i, j]] = A[:, [j, i]]


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """
    Compute the Smith normal form with both transforms.

    The pivot is always the smallest nonzero entry of the remaining
    submatrix, which keeps intermediate coefficients small. Divisibility
    d_i | d_(i+1) is repaired by folding an offending row into the pivot row.

    Args:
        M: Any integer matrix.

    Returns:
        SmithDecomposition with U @ M @ V == S, diagonal entries nonnegative,
        each dividing the next, zeros last.
    """
    start = time.perf_counter()
    m, n = M.shape
    A = M.to_array()
    U = identity_array(m)
    V = identity_array(n)
    diag: list[int] = []

    for t in range(min(m, n)):
        position = _smallest_nonzero(A, t)
        if position is None:
            break
        _swap_rows(A, t, position[0])
        _swap_rows(U, t, position[0])
        _swap_cols(A, t, position[1])
        _swap_cols(V, t, position[1])

        while True:
            pivot = A[t, t]
            below = A[t + 1 :, t]
            if np.any(below != 0):
                q = below // pivot
                A[t + 1 :] -= np.outer(q, A[t])
                U[t + 1 :] -= np.outer(q, U[t])
            right = A[t, t + 1 :]
            if np.any(right != 0):
                q = right // pivot
                A[:, t + 1 :] -= np.outer(A[:, t], q)
                V[:, t + 1 :] -= np.outer(V[:, t], q)

            # Remainders are smaller than the pivot; promote the smallest and repeat.
            leftover = [(abs(A[i, t]), i, t) for i in range(t + 1, m) if A[i, t] != 0]
            leftover += [(abs(A[t, j]), t, j) for j in range(t + 1, n) if A[t, j] != 0]
            if leftover:
                _, i, j = min(leftover)
                if j == t:
                    _swap_rows(A, t, i)
                    _swap_rows(U, t, i)
                else:
                    _swap_cols(A, t, j)
                    _swap_cols(V, t, j)
                continue

            offending = np.nonzero(A[t + 1 :, t + 1 :] % A[t, t] != 0)[0]
            if offending.size:
                i = t + 1 + int(offending[0])
                A[t] += A[i]
                U[t] += U[i]
                continue
            break

        if A[t, t] < 0:
            A[t] = -A[t]
            U[t] = -U[t]
        diag.append(int(A[t, t]))

    diag.extend([0] * (min(m, n) - len(diag)))
    elapsed = time.perf_counter() - start
    NORMAL_FORM_DURATION.labels(kind="smith").observe(elapsed)
    audit_logger.log_normal_form("smith", m, n, sum(1 for d in diag if d), elapsed * 1000)
    logger.debug("Smith diagonal %s", diag)
    return SmithDecomposition(
        S=IntMatrix.diagonal(diag, m, n),
        U=IntMatrix(U),
        V=IntMatrix(V),
        diag=tuple(diag),
    )


# ---------------------------------------------------------------------------
# Determinant and rank
# ---------------------------------------------------------------------------


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise DimensionMismatch(M.rows, M.cols)
    n = M.rows
    if n == 0:
        return 1
    A = [list(row) for row in M.entries()]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // previous
        previous = A[k][k]
    return sign * A[n - 1][n - 1]


def rank_over_q(M: IntMatrix) -> int:
    """Rank over the rationals (equal to the Hermite rank)."""
    return hermite_normal_form(M).rank
