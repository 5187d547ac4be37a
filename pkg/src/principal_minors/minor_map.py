"""The principal-minor map and its structural identities.

phi sends [A, t] to the vector with coordinate t^(n-|I|) * det(A_I) at
the binary index I, where A_I keeps row/column k exactly when i_k = 1
and the empty minor is 1.  The 2^n minors are computed as independent
submatrix determinants.
"""

from __future__ import annotations

from fractions import Fraction

from .indices import BinaryIndex, MinorVector
from .matrices import SingularMatrixError, SymmetricMatrix, det_complex, det_exact
from .scalars import Scalar, as_scalar, normalize


def principal_minor(matrix: SymmetricMatrix, index: BinaryIndex) -> Scalar:
    """det of the principal submatrix selected by the set bits of index."""
    if index.n != matrix.n:
        raise ValueError(f"index has n={index.n}, matrix has n={matrix.n}")
    return _minor_by_encoding(matrix, index.encoding)


def _minor_by_encoding(matrix: SymmetricMatrix, enc: int) -> Scalar:
    keep = [k for k in range(matrix.n) if (enc >> k) & 1]
    sub = [[matrix.entries[i][j] for j in keep] for i in keep]
    return det_exact(sub)


def minor_vector(matrix: SymmetricMatrix, t=1) -> MinorVector:
    """phi([A, t]) in coordinates: all 2^n principal minors, scaled by
    t^(n-|I|)."""
    t = as_scalar(t)
    n = matrix.n
    coords = []
    for enc in range(1 << n):
        value = _minor_by_encoding(matrix, enc)
        power = n - bin(enc).count("1")
        if t != 1:
            value = value * t**power
        coords.append(normalize(value) if isinstance(value, Fraction) else value)
    return MinorVector(n, tuple(coords))


def tensor_product(z1: MinorVector, z2: MinorVector) -> MinorVector:
    """Coordinate at the concatenated index (J, K) is z1[J] * z2[K]."""
    n = z1.n + z2.n
    coords = [0] * (1 << n)
    for k_enc in range(1 << z2.n):
        right = z2.coords[k_enc]
        base = k_enc << z1.n
        if right == 0:
            continue
        for j_enc in range(1 << z1.n):
            coords[base | j_enc] = z1.coords[j_enc] * right
    return MinorVector(n, tuple(coords))


def reversed_minors(matrix: SymmetricMatrix) -> MinorVector:
    """Minor vector of A^(-1), computed without inverting: coordinate at
    I is det(A_complement(I)) / det(A)."""
    d = matrix.det()
    if d == 0:
        raise SingularMatrixError("matrix is singular")
    n = matrix.n
    full = (1 << n) - 1
    coords = []
    for enc in range(1 << n):
        value = Fraction(_minor_by_encoding(matrix, full ^ enc), d)
        coords.append(normalize(value))
    return MinorVector(n, tuple(coords))


def numeric_minor_vector(entries: list[list[complex]]) -> list[complex]:
    """Complex-float minors in encoding order (numeric reconstruction)."""
    n = len(entries)
    out = []
    for enc in range(1 << n):
        keep = [k for k in range(n) if (enc >> k) & 1]
        out.append(det_complex([[entries[i][j] for j in keep] for i in keep]))
    return out
