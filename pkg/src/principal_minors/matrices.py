"""Symmetric matrices over exact rationals and exact determinants.

Determinants use fraction-free Bareiss elimination (exact division at
every step, polynomial bit growth) with direct cofactor formulas for
sizes up to 3.  A complex floating variant backs the numeric
reconstruction mode only; nothing in the algebraic core touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import Scalar, as_scalar


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricMatrix:
    """An n x n symmetric matrix; entries are exact scalars (or complex
    floats in the numeric reconstruction variant)."""

    n: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("size must be positive")
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries must be an n x n grid")
        for i in range(self.n):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"not symmetric at ({i},{j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SymmetricMatrix":
        n = len(rows)
        return cls(n, tuple(tuple(as_scalar(v) for v in row) for row in rows))

    @classmethod
    def diagonal(cls, values: Sequence) -> "SymmetricMatrix":
        n = len(values)
        vals = [as_scalar(v) for v in values]
        return cls(n, tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "SymmetricMatrix":
        return cls(n, tuple(tuple(0 for _ in range(n)) for _ in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[Scalar]]:
        return [list(r) for r in self.entries]

    def block_diag(self, other: "SymmetricMatrix") -> "SymmetricMatrix":
        n, m = self.n, other.n
        rows = [[self.entries[i][j] if j < n else 0 for j in range(n + m)] for i in range(n)]
        rows += [[0 if j < n else other.entries[i][j - n] for j in range(n + m)] for i in range(m)]
        return SymmetricMatrix.from_rows(rows)

    def relabel(self, perm: Sequence[int]) -> "SymmetricMatrix":
        """Conjugate by the permutation matrix: entry (i,j) moves to
        (perm[i], perm[j]).  perm is 0-based."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a bijection of 0..n-1")
        rows = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(self.n):
                rows[perm[i]][perm[j]] = self.entries[i][j]
        return SymmetricMatrix.from_rows(rows)

    def conjugate_signs(self, signs: Sequence[int]) -> "SymmetricMatrix":
        """D A D for the diagonal D = diag(signs), signs in {+1, -1}."""
        if len(signs) != self.n or any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be n values in {+1,-1}")
        return SymmetricMatrix(
            self.n,
            tuple(
                tuple(signs[i] * signs[j] * self.entries[i][j] for j in range(self.n))
                for i in range(self.n)
            ),
        )

    def is_integer(self) -> bool:
        return all(isinstance(v, int) for row in self.entries for v in row)

    def det(self) -> Scalar:
        return det_exact(self.rows())

    def inverse(self) -> "SymmetricMatrix":
        """Exact inverse via Gauss-Jordan elimination."""
        n = self.n
        aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv_p = 1 / aug[col][col]
            aug[col] = [v * inv_p for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return SymmetricMatrix.from_rows([row[n:] for row in aug])


def det_exact(rows: list[list[Scalar]]) -> Scalar:
    """Exact determinant; Bareiss for size >= 4, cofactors below."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows[0]
        d, e, f = rows[1]
        g, h, i = rows[2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return _bareiss(rows)


def _bareiss(rows: list[list[Scalar]]) -> Scalar:
    # Fraction-free elimination: m[i][j] <- (m[i][j]*pivot - m[i][k]*m[k][j]) / prev,
    # where the division is exact over any integral domain.
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            lead = row_i[k]
            if isinstance(pivot, int) and isinstance(prev, int):
                for j in range(k + 1, n):
                    num = row_i[j] * pivot - lead * row_k[j]
                    row_i[j] = num // prev if isinstance(num, int) else num / prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - lead * row_k[j]) / prev
            row_i[k] = 0
        prev = pivot
    result = sign * m[n - 1][n - 1]
    if isinstance(result, Fraction) and result.denominator == 1:
        return result.numerator
    return result


def det_complex(rows: list[list[complex]]) -> complex:
    """LU determinant with partial pivoting, for the numeric mode."""
    m = [list(map(complex, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1.0 + 0.0j
    det = 1.0 + 0.0j
    for k in range(n):
        pivot = max(range(k, n), key=lambda r: abs(m[r][k]))
        if m[pivot][k] == 0:
            return 0.0j
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k + 1, n):
                m[i][j] -= f * m[k][j]
    return det
