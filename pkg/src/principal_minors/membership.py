"""Deciding whether a length-2^n vector is a vector of principal minors.

Three methods:
  basis       evaluate every entry of the degree-4 module basis; all
              zeros certifies membership over the complex numbers, any
              nonzero value is a non-membership certificate.
  reconstruct rebuild a symmetric matrix from the |I| <= 2 coordinates,
              resolve off-diagonal signs against the |I| = 3
              coordinates, verify all 2^n minors.
  prefilter   recursive necessary condition: split off one factor at a
              time and check honest 2x2x2 hyperdeterminants at the
              bottom.  Sound for rejection only.
"""

from __future__ import annotations

import cmath
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

from .hyperdet import cayley_hyperdet, hd_basis
from .indices import MinorVector
from .matrices import SymmetricMatrix, det_complex, det_exact
from .minor_map import minor_vector, numeric_minor_vector
from .polynomials import act_point, evaluate
from .sampling import random_special_element
from .scalars import Scalar, normalize, sqrt_exact

VERDICT_MEMBER = "member"
VERDICT_NON_MEMBER = "non-member"
VERDICT_INDETERMINATE = "indeterminate"

EXIT_MEMBER = 0
EXIT_NON_MEMBER = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3


# -- certificates and reports -----------------------------------------

@dataclass(frozen=True)
class BasisViolation:
    """Basis entry index (generation order) with its nonzero value."""
    entry_index: int
    value: Scalar


@dataclass(frozen=True)
class MatrixCertificate:
    """z equals scale * minor_vector(matrix, 1) for the certified point."""
    matrix: SymmetricMatrix
    scale: Scalar


@dataclass(frozen=True)
class MinorMismatch:
    encoding: int
    expected: Scalar
    actual: Scalar


@dataclass(frozen=True)
class NoConsistentSigns:
    pass


@dataclass(frozen=True)
class NonSquareEntry:
    i: int
    j: int
    value: Scalar


@dataclass(frozen=True)
class PrefilterViolation:
    value: Scalar


@dataclass(frozen=True)
class MembershipReport:
    n: int
    verdict: str
    method: str
    certificate: object = None
    chart_moves: int = 0

    @property
    def exit_code(self) -> int:
        return {
            VERDICT_MEMBER: EXIT_MEMBER,
            VERDICT_NON_MEMBER: EXIT_NON_MEMBER,
            VERDICT_INDETERMINATE: EXIT_INDETERMINATE,
        }[self.verdict]


# -- reconstruction ----------------------------------------------------

class ReconstructionError(Exception):
    pass


class ZeroLeadingCoordinateError(ReconstructionError):
    """The open-chart assumption z_[0..0] != 0 is required."""


class NonSquareEntryError(ReconstructionError):
    def __init__(self, i: int, j: int, value: Scalar):
        super().__init__(
            f"a_{i + 1},{i + 1}*a_{j + 1},{j + 1} - z offset {value} is not a rational "
            "square; try numeric mode (complex off-diagonals)"
        )
        self.i, self.j, self.value = i, j, value


class NoConsistentSignsError(ReconstructionError):
    def __init__(self):
        super().__init__("no off-diagonal sign pattern matches the |I|=3 coordinates")


class MinorMismatchError(ReconstructionError):
    def __init__(self, encoding: int, expected, actual):
        super().__init__(f"minor at encoding {encoding}: expected {expected}, got {actual}")
        self.encoding, self.expected, self.actual = encoding, expected, actual


def _spanning_forest(n: int, edges: list[tuple[int, int]]
                     ) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest, cycles = [], []
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri == rj:
            cycles.append((i, j))
        else:
            parent[ri] = rj
            forest.append((i, j))
    return forest, cycles


def reconstruct(z: MinorVector, mode: str = "exact", tol: float = 1e-9) -> SymmetricMatrix:
    """Build a symmetric matrix whose principal minors are z / z_[0..0].

    Diagonal entries come from the |I| = 1 coordinates, off-diagonal
    magnitudes from |I| = 2, signs are gauge-fixed to be nonnegative on
    a spanning forest of the nonzero-off-diagonal graph (the D A D
    freedom) and the remaining 2^cycles patterns are filtered by the
    |I| = 3 coordinates, then fully verified.
    """
    if mode not in ("exact", "numeric"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "numeric":
        return _reconstruct_numeric(z, tol)
    n = z.n
    z0 = z[0]
    if z0 == 0:
        raise ZeroLeadingCoordinateError("leading coordinate z_[0..0] is zero")
    w = [normalize(Fraction(c) / z0) for c in z.coords]
    diag = [w[1 << i] for i in range(n)]
    mag: dict[tuple[int, int], Scalar] = {}
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            s = diag[i] * diag[j] - w[(1 << i) | (1 << j)]
            if s == 0:
                continue
            root = sqrt_exact(s)
            if root is None:
                raise NonSquareEntryError(i, j, s)
            mag[(i, j)] = root
            edges.append((i, j))
    forest, cycles = _spanning_forest(n, edges)

    triples = [
        ((1 << i) | (1 << j) | (1 << k), (i, j, k))
        for i, j, k in combinations(range(n), 3)
    ]
    first_full_mismatch: Optional[MinorMismatchError] = None
    any_triple_survivor = False
    for signs in product((1, -1), repeat=len(cycles)):
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]
        for i, j in forest:
            rows[i][j] = rows[j][i] = mag[(i, j)]
        for (i, j), s in zip(cycles, signs):
            rows[i][j] = rows[j][i] = s * mag[(i, j)]
        ok = True
        for enc, (i, j, k) in triples:
            sub = [[rows[a][b] for b in (i, j, k)] for a in (i, j, k)]
            if det_exact(sub) != w[enc]:
                ok = False
                break
        if not ok:
            continue
        any_triple_survivor = True
        candidate = SymmetricMatrix.from_rows(rows)
        mismatch = None
        for enc in range(1 << n):
            keep = [k for k in range(n) if (enc >> k) & 1]
            if len(keep) <= 3:
                continue
            value = det_exact([[rows[a][b] for b in keep] for a in keep])
            if value != w[enc]:
                mismatch = MinorMismatchError(enc, w[enc], value)
                break
        if mismatch is None:
            return candidate
        if first_full_mismatch is None:
            first_full_mismatch = mismatch
    if any_triple_survivor:
        raise first_full_mismatch
    raise NoConsistentSignsError()


def _reconstruct_numeric(z: MinorVector, tol: float) -> SymmetricMatrix:
    n = z.n
    z0 = complex(z[0]) if not isinstance(z[0], complex) else z[0]
    if abs(z0) <= tol:
        raise ZeroLeadingCoordinateError("leading coordinate z_[0..0] is zero")
    w = [complex(c) / z0 for c in z.coords]
    diag = [w[1 << i] for i in range(n)]
    mag: dict[tuple[int, int], complex] = {}
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            s = diag[i] * diag[j] - w[(1 << i) | (1 << j)]
            if abs(s) <= tol:
                continue
            mag[(i, j)] = cmath.sqrt(s)
            edges.append((i, j))
    forest, cycles = _spanning_forest(n, edges)
    first_full_mismatch: Optional[MinorMismatchError] = None
    any_triple_survivor = False
    triple_sets = list(combinations(range(n), 3))
    for signs in product((1, -1), repeat=len(cycles)):
        rows = [[0j] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]
        for i, j in forest:
            rows[i][j] = rows[j][i] = mag[(i, j)]
        for (i, j), s in zip(cycles, signs):
            rows[i][j] = rows[j][i] = s * mag[(i, j)]
        ok = True
        for i, j, k in triple_sets:
            enc = (1 << i) | (1 << j) | (1 << k)
            sub = [[rows[a][b] for b in (i, j, k)] for a in (i, j, k)]
            if abs(det_complex(sub) - w[enc]) > tol:
                ok = False
                break
        if not ok:
            continue
        any_triple_survivor = True
        minors = numeric_minor_vector(rows)
        mismatch = None
        for enc in range(1 << n):
            if abs(minors[enc] - w[enc]) > tol:
                mismatch = MinorMismatchError(enc, w[enc], minors[enc])
                break
        if mismatch is None:
            return SymmetricMatrix(n, tuple(tuple(r) for r in rows))
        if first_full_mismatch is None:
            first_full_mismatch = mismatch
    if any_triple_survivor:
        raise first_full_mismatch
    raise NoConsistentSignsError()


# -- recursive prefilter -----------------------------------------------

def _split_half(z: MinorVector, factor: int, bit_value: int) -> MinorVector:
    n = z.n
    bit = 1 << (factor - 1)
    low_mask = bit - 1
    coords = []
    for enc in range(1 << (n - 1)):
        full = ((enc & ~low_mask) << 1) | (bit if bit_value else 0) | (enc & low_mask)
        coords.append(z.coords[full])
    return MinorVector(n - 1, tuple(coords))


def _prefilter_violation(z: MinorVector) -> Optional[Scalar]:
    n = z.n
    if n < 3:
        return None
    if n == 3:
        value = evaluate(cayley_hyperdet(3, (1, 2, 3)), z)
        return value if value != 0 else None
    for factor in range(1, n + 1):
        for bit_value in (0, 1):
            half = _split_half(z, factor, bit_value)
            if half.is_zero():
                continue
            violation = _prefilter_violation(half)
            if violation is not None:
                return violation
    return None


def recursive_prefilter(z: MinorVector) -> bool:
    """Necessary condition only: True means no recursive 2x2x2
    hyperdeterminant obstruction was found, not membership."""
    if z.is_zero():
        raise ValueError("zero vector")
    return _prefilter_violation(z) is None


# -- membership --------------------------------------------------------

def is_member(z: MinorVector, method: str = "basis", *,
              rng: Optional[random.Random] = None,
              max_chart_moves: int = 8) -> MembershipReport:
    """Decide membership and attach a certificate.

    n <= 2 vectors are members unconditionally (the map is surjective
    there).  With method="reconstruct" and a zero leading coordinate,
    random determinant-1 moves are applied to reach the open chart.
    """
    if z.is_zero():
        raise ValueError("zero vector")
    n = z.n
    if n <= 2:
        certificate = None
        if method == "reconstruct" and z[0] != 0:
            try:
                matrix = reconstruct(z, "exact")
                certificate = MatrixCertificate(matrix, z[0])
            except ReconstructionError:
                certificate = None
        return MembershipReport(n, VERDICT_MEMBER, method, certificate)
    if method == "basis":
        basis = hd_basis(n)
        for index, entry in enumerate(basis.entries):
            value = evaluate(entry.polynomial, z)
            if value != 0:
                return MembershipReport(
                    n, VERDICT_NON_MEMBER, method, BasisViolation(index, value)
                )
        return MembershipReport(n, VERDICT_MEMBER, method)
    if method == "reconstruct":
        moves = 0
        current = z
        rng = rng or random.Random(0)
        while current[0] == 0 and moves < max_chart_moves:
            g = random_special_element(n, rng)
            current = act_point(g, current)
            moves += 1
        if current[0] == 0:
            return MembershipReport(n, VERDICT_INDETERMINATE, method, None, moves)
        try:
            matrix = reconstruct(current, "exact")
        except NonSquareEntryError as err:
            return MembershipReport(
                n, VERDICT_INDETERMINATE, method,
                NonSquareEntry(err.i, err.j, err.value), moves,
            )
        except NoConsistentSignsError:
            return MembershipReport(n, VERDICT_NON_MEMBER, method, NoConsistentSigns(), moves)
        except MinorMismatchError as err:
            return MembershipReport(
                n, VERDICT_NON_MEMBER, method,
                MinorMismatch(err.encoding, err.expected, err.actual), moves,
            )
        return MembershipReport(
            n, VERDICT_MEMBER, method, MatrixCertificate(matrix, current[0]), moves
        )
    if method == "prefilter":
        violation = _prefilter_violation(z)
        if violation is not None:
            return MembershipReport(
                n, VERDICT_NON_MEMBER, method, PrefilterViolation(violation)
            )
        return MembershipReport(n, VERDICT_INDETERMINATE, method)
    raise ValueError(f"unknown method {method!r}")


# -- sign-flip experiment ----------------------------------------------

@dataclass(frozen=True)
class SignFlipProfile:
    n: int
    counts: tuple[tuple[int, int], ...]  # (agreement count, number of patterns)
    patterns_checked: int

    @property
    def distinct_counts(self) -> set[int]:
        return {c for c, _ in self.counts}

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)


def _sign_flip_counts(entries: tuple[tuple[Scalar, ...], ...],
                      base: tuple[Scalar, ...],
                      pairs: Sequence[tuple[int, int]],
                      mask_range: tuple[int, int]) -> dict[int, int]:
    n = len(entries)
    histogram: dict[int, int] = {}
    for mask in range(*mask_range):
        rows = [list(r) for r in entries]
        for bit, (i, j) in enumerate(pairs):
            if (mask >> bit) & 1:
                rows[i][j] = -rows[i][j]
                rows[j][i] = -rows[j][i]
        agree = 0
        for enc in range(1 << n):
            keep = [k for k in range(n) if (enc >> k) & 1]
            value = det_exact([[rows[a][b] for b in keep] for a in keep])
            if value == base[enc]:
                agree += 1
        histogram[agree] = histogram.get(agree, 0) + 1
    return histogram


# Below this many patterns a process pool costs more than it saves.
_POOL_THRESHOLD = 1 << 12


def sign_flip_profile(matrix: SymmetricMatrix, workers: Optional[int] = None
                      ) -> SignFlipProfile:
    """Flip the off-diagonal signs in every possible combination and
    record how many principal minors agree with the original."""
    n = matrix.n
    if n > 6:
        raise ValueError("size too large: 2^(n(n-1)/2) patterns beyond n=6")
    pairs = list(combinations(range(n), 2))
    total = 1 << len(pairs)
    base = minor_vector(matrix, 1).coords
    if workers and workers > 1 and total >= _POOL_THRESHOLD:
        chunk = (total + workers - 1) // workers
        ranges = [(k, min(k + chunk, total)) for k in range(0, total, chunk)]
        histogram: dict[int, int] = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _sign_flip_counts,
                [matrix.entries] * len(ranges),
                [base] * len(ranges),
                [pairs] * len(ranges),
                ranges,
            )
            for part in parts:
                for count, freq in part.items():
                    histogram[count] = histogram.get(count, 0) + freq
    else:
        histogram = _sign_flip_counts(matrix.entries, base, pairs, (0, total))
    counts = tuple(sorted(histogram.items()))
    return SignFlipProfile(n, counts, total)
