"""Seeded random inputs for experiments and randomized suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .matrices import SymmetricMatrix
from .polynomials import GroupElement, Matrix2
from .scalars import normalize


def random_symmetric_matrix(n: int, rng: random.Random, low: int = -9, high: int = 9,
                            nonzero_offdiag: bool = False) -> SymmetricMatrix:
    """Random integer symmetric matrix with entries in [low, high]."""
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randint(low, high)
        for j in range(i + 1, n):
            v = rng.randint(low, high)
            while nonzero_offdiag and v == 0:
                v = rng.randint(low, high)
            rows[i][j] = rows[j][i] = v
    return SymmetricMatrix.from_rows(rows)


def random_special_matrix2(rng: random.Random, bound: int = 4) -> Matrix2:
    """Random rational 2x2 matrix of determinant exactly 1."""
    a = 0
    while a == 0:
        a = rng.randint(-bound, bound)
    b = rng.randint(-bound, bound)
    c = rng.randint(-bound, bound)
    d = normalize(Fraction(1 + b * c, a))
    return ((a, b), (c, d))


def random_special_element(n: int, rng: random.Random, permute: bool = False) -> GroupElement:
    """Random group element with determinant-1 factor matrices and an
    optional random factor permutation."""
    matrices = tuple(random_special_matrix2(rng) for _ in range(n))
    perm = list(range(n))
    if permute:
        rng.shuffle(perm)
    return GroupElement(n, matrices, tuple(perm))
