"""Sparse polynomials in the 2^n tensor coordinates X^I.

Weight convention (fixed throughout): the basis vector x^0 of each
factor carries weight -1 and x^1 carries weight +1, so the variable X^I
contributes +1 to weight component k when i_k = 1 and -1 otherwise.
The lowering derivation in factor k sends X^(i_k=0) to X^(i_k=1) and
X^(i_k=1) to 0 (scalar fixed to 1), hence raises weight component k by
2; raising is the transpose.  Under this convention highest weight
vectors carry the numerically smallest weights.

Monomials are packed into single ints: the (index encoding, exponent)
pairs, sorted by encoding, occupy 19-bit blocks (14 bits of encoding,
5 of exponent).  This caps n at 14 and exponents at 31, and makes
hashing and comparison cheap in the basis-generation loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, gcd, lcm
from typing import Iterable, Iterator, Sequence

from .indices import BinaryIndex, MinorVector
from .scalars import Scalar, as_scalar, normalize

ENC_BITS = 14
EXP_BITS = 5
PAIR_BITS = ENC_BITS + EXP_BITS
PAIR_MASK = (1 << PAIR_BITS) - 1
EXP_MASK = (1 << EXP_BITS) - 1
MAX_FACTORS = ENC_BITS

Weight = tuple[int, ...]


def pack_monomial(pairs: Iterable[tuple[int, int]]) -> int:
    """Pack (encoding, exponent) pairs, sorted by encoding, into an int."""
    key = 0
    for pos, (enc, exp) in enumerate(sorted(pairs)):
        if not 1 <= exp <= EXP_MASK:
            raise ValueError(f"exponent {exp} out of range")
        key |= ((enc << EXP_BITS) | exp) << (PAIR_BITS * pos)
    return key


def unpack_monomial(key: int) -> tuple[tuple[int, int], ...]:
    pairs = []
    while key:
        block = key & PAIR_MASK
        pairs.append((block >> EXP_BITS, block & EXP_MASK))
        key >>= PAIR_BITS
    return tuple(pairs)


def monomial_degree(key: int) -> int:
    d = 0
    while key:
        d += key & EXP_MASK
        key >>= PAIR_BITS
    return d


def monomial_mul(k1: int, k2: int) -> int:
    exps: dict[int, int] = {}
    for key in (k1, k2):
        while key:
            block = key & PAIR_MASK
            enc = block >> EXP_BITS
            exps[enc] = exps.get(enc, 0) + (block & EXP_MASK)
            key >>= PAIR_BITS
    return pack_monomial(exps.items())


def grlex_key(key: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Graded-lex sort key: total degree, then the sorted pair tuple."""
    return (monomial_degree(key), unpack_monomial(key))


class TensorPolynomial:
    """Immutable sparse polynomial with exact coefficients.

    Terms map packed monomials to nonzero scalars; the empty monomial
    (key 0) is the constant slot.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict[int, Scalar] | None = None):
        if not 1 <= n <= MAX_FACTORS:
            raise ValueError(f"factor count must be in 1..{MAX_FACTORS}")
        object.__setattr__(self, "n", n)
        clean: dict[int, Scalar] = {}
        if terms:
            for key, coeff in terms.items():
                coeff = normalize(coeff) if isinstance(coeff, Fraction) else coeff
                if coeff != 0:
                    clean[key] = coeff
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorPolynomial is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "TensorPolynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value) -> "TensorPolynomial":
        return cls(n, {0: as_scalar(value)})

    @classmethod
    def variable(cls, n: int, index: "BinaryIndex | int") -> "TensorPolynomial":
        enc = index.encoding if isinstance(index, BinaryIndex) else index
        if not 0 <= enc < (1 << n):
            raise ValueError(f"encoding {enc} out of range for n={n}")
        return cls(n, {pack_monomial([(enc, 1)]): 1})

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[Iterable[tuple[int, int]], Scalar]]
                   ) -> "TensorPolynomial":
        acc: dict[int, Scalar] = {}
        for pairs, coeff in terms:
            pairs = tuple(pairs)
            for enc, _ in pairs:
                if not 0 <= enc < (1 << n):
                    raise ValueError(f"encoding {enc} out of range for n={n}")
            key = pack_monomial(pairs)
            acc[key] = acc.get(key, 0) + as_scalar(coeff)
        return cls(n, acc)

    # -- inspection --------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            return 0
        return max(monomial_degree(k) for k in self._terms)

    def is_homogeneous(self) -> bool:
        degrees = {monomial_degree(k) for k in self._terms}
        return len(degrees) <= 1

    def terms(self) -> Iterator[tuple[tuple[tuple[int, int], ...], Scalar]]:
        """Terms in graded-lex order (deterministic)."""
        for key in sorted(self._terms, key=grlex_key):
            yield unpack_monomial(key), self._terms[key]

    def coefficient(self, pairs: Iterable[tuple[int, int]]) -> Scalar:
        return self._terms.get(pack_monomial(pairs), 0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TensorPolynomial)
                and self.n == other.n and self._terms == other._terms)

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for pairs, coeff in self.terms():
            factors = "*".join(
                f"X{BinaryIndex.from_encoding(self.n, enc)}" + (f"^{e}" if e > 1 else "")
                for enc, e in pairs
            )
            parts.append(f"{coeff}" if not factors else f"{coeff}*{factors}")
        return " + ".join(parts)

    # -- arithmetic --------------------------------------------------

    def _check_same_space(self, other: "TensorPolynomial"):
        if self.n != other.n:
            raise ValueError(f"factor counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        self._check_same_space(other)
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, 0) + coeff
        return TensorPolynomial(self.n, acc)

    def __neg__(self) -> "TensorPolynomial":
        return TensorPolynomial(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "TensorPolynomial":
        if isinstance(other, TensorPolynomial):
            self._check_same_space(other)
            acc: dict[int, Scalar] = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    key = monomial_mul(k1, k2)
                    acc[key] = acc.get(key, 0) + c1 * c2
            return TensorPolynomial(self.n, acc)
        scalar = as_scalar(other)
        return TensorPolynomial(self.n, {k: scalar * c for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TensorPolynomial":
        if exponent < 0:
            raise ValueError("negative power")
        result = TensorPolynomial.constant(self.n, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- normalization -----------------------------------------------

    def leading_key(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=grlex_key)

    def normalized(self) -> "TensorPolynomial":
        """Rescale to integer content 1 with positive leading coefficient."""
        if self.is_zero():
            return self
        denom = lcm(*(Fraction(c).denominator for c in self._terms.values()))
        numer = gcd(*(Fraction(c * denom).numerator for c in self._terms.values()))
        scale = Fraction(denom, numer)
        if self._terms[self.leading_key()] < 0:
            scale = -scale
        return self * scale


def evaluate(poly: TensorPolynomial, point: "MinorVector | Sequence[Scalar]") -> Scalar:
    """Substitute point coordinates for the variables X^I, exactly."""
    if isinstance(point, MinorVector):
        if point.n != poly.n:
            raise ValueError(f"point has n={point.n}, polynomial has n={poly.n}")
        values = point.coords
    else:
        values = tuple(point)
        if len(values) != (1 << poly.n):
            raise ValueError(f"expected {1 << poly.n} coordinates")
    total: Scalar = 0
    for key, coeff in poly._terms.items():
        term = coeff
        while key:
            block = key & PAIR_MASK
            value = values[block >> EXP_BITS]
            if value == 0:
                term = 0
                break
            exp = block & EXP_MASK
            term = term * (value if exp == 1 else value**exp)
            key >>= PAIR_BITS
        total = total + term
    return normalize(total) if isinstance(total, Fraction) else total


def monomial_weight(key: int, n: int) -> Weight:
    w = [0] * n
    while key:
        block = key & PAIR_MASK
        enc = block >> EXP_BITS
        exp = block & EXP_MASK
        for k in range(n):
            w[k] += exp if (enc >> k) & 1 else -exp
        key >>= PAIR_BITS
    return tuple(w)


def weight_of(poly: TensorPolynomial) -> Weight:
    """The common weight of all monomials; error if they disagree."""
    if poly.is_zero():
        raise ValueError("zero polynomial has no weight")
    weight = None
    for key in poly._terms:
        w = monomial_weight(key, poly.n)
        if weight is None:
            weight = w
        elif w != weight:
            raise ValueError(f"not a weight vector: monomial weights {weight} and {w} differ")
    return weight


def _derivation(poly: TensorPolynomial, factor: int, from_bit: int) -> TensorPolynomial:
    # Leibniz extension of the variable map X^(i_k=from) -> X^(i_k flipped),
    # X^(i_k=1-from) -> 0.
    if not 1 <= factor <= poly.n:
        raise ValueError(f"factor {factor} out of range 1..{poly.n}")
    bit = 1 << (factor - 1)
    acc: dict[int, Scalar] = {}
    for key, coeff in poly._terms.items():
        pairs = unpack_monomial(key)
        for pos, (enc, exp) in enumerate(pairs):
            if ((enc & bit) != 0) != (from_bit == 1):
                continue
            exps: dict[int, int] = dict(pairs)
            if exp == 1:
                del exps[enc]
            else:
                exps[enc] = exp - 1
            target = enc ^ bit
            exps[target] = exps.get(target, 0) + 1
            new_key = pack_monomial(exps.items())
            acc[new_key] = acc.get(new_key, 0) + coeff * exp
    return TensorPolynomial(poly.n, acc)


def lower(poly: TensorPolynomial, factor: int) -> TensorPolynomial:
    """Lowering derivation in one factor; adds 2 to that weight component."""
    return _derivation(poly, factor, from_bit=0)


def raise_(poly: TensorPolynomial, factor: int) -> TensorPolynomial:
    """Raising derivation in one factor; subtracts 2 from that weight component."""
    return _derivation(poly, factor, from_bit=1)


def is_highest_weight(poly: TensorPolynomial) -> bool:
    return not poly.is_zero() and all(raise_(poly, k).is_zero() for k in range(1, poly.n + 1))


# -- group action ----------------------------------------------------

Matrix2 = tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]


def _det2(m: Matrix2) -> Scalar:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _inv2(m: Matrix2) -> Matrix2:
    d = Fraction(_det2(m))
    if d == 0:
        raise ValueError("singular factor matrix")
    return (
        (normalize(m[1][1] / d), normalize(-m[0][1] / d)),
        (normalize(-m[1][0] / d), normalize(m[0][0] / d)),
    )


@dataclass(frozen=True)
class GroupElement:
    """One 2x2 invertible matrix per factor plus a factor permutation.

    The permutation is stored 0-based: factor i moves to permutation[i].
    """

    n: int
    factor_matrices: tuple[Matrix2, ...]
    permutation: tuple[int, ...]

    def __post_init__(self):
        if len(self.factor_matrices) != self.n:
            raise ValueError("need one 2x2 matrix per factor")
        for m in self.factor_matrices:
            if _det2(m) == 0:
                raise ValueError("singular factor matrix")
        if sorted(self.permutation) != list(range(self.n)):
            raise ValueError("permutation must be a bijection of 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        eye: Matrix2 = ((1, 0), (0, 1))
        return cls(n, (eye,) * n, tuple(range(n)))

    @classmethod
    def from_matrices(cls, matrices: Sequence[Matrix2]) -> "GroupElement":
        n = len(matrices)
        mats = tuple(tuple(tuple(as_scalar(v) for v in row) for row in m) for m in matrices)
        return cls(n, mats, tuple(range(n)))

    @classmethod
    def from_permutation(cls, n: int, permutation: Sequence[int]) -> "GroupElement":
        eye: Matrix2 = ((1, 0), (0, 1))
        return cls(n, (eye,) * n, tuple(permutation))

    @property
    def is_special(self) -> bool:
        """True when every factor matrix has determinant 1."""
        return all(_det2(m) == 1 for m in self.factor_matrices)


def _permute_encoding(enc: int, perm: Sequence[int]) -> int:
    # Bit p of the result is bit perm[p] of enc.
    out = 0
    for p, image in enumerate(perm):
        if (enc >> image) & 1:
            out |= 1 << p
    return out


def _invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, image in enumerate(perm):
        inv[image] = i
    return tuple(inv)


def act_point(g: GroupElement, z: MinorVector) -> MinorVector:
    """Apply each factor matrix by contraction, then permute factors."""
    if g.n != z.n:
        raise ValueError(f"group element has n={g.n}, point has n={z.n}")
    coords = list(z.coords)
    size = 1 << z.n
    for k in range(z.n):
        m = g.factor_matrices[k]
        bit = 1 << k
        for enc in range(size):
            if enc & bit:
                continue
            lo, hi = coords[enc], coords[enc | bit]
            coords[enc] = m[0][0] * lo + m[0][1] * hi
            coords[enc | bit] = m[1][0] * lo + m[1][1] * hi
    if g.permutation != tuple(range(z.n)):
        coords = [coords[_permute_encoding(enc, g.permutation)] for enc in range(size)]
    return MinorVector(z.n, tuple(normalize(c) if isinstance(c, Fraction) else c
                                  for c in coords))


def apply_factor_matrix(poly: TensorPolynomial, factor: int, m: Matrix2) -> TensorPolynomial:
    """Substitute X^(i_k=b) -> m[b][0] X^(i_k=0) + m[b][1] X^(i_k=1)."""
    if not 1 <= factor <= poly.n:
        raise ValueError(f"factor {factor} out of range 1..{poly.n}")
    bit = 1 << (factor - 1)
    acc: dict[int, Scalar] = {}
    for key, coeff in poly._terms.items():
        partial: dict[int, Scalar] = {0: coeff}
        for enc, exp in unpack_monomial(key):
            b = 1 if enc & bit else 0
            a0, a1 = m[b][0], m[b][1]
            lo, hi = enc & ~bit, enc | bit
            branch: list[tuple[int, Scalar]] = []
            for j in range(exp + 1):
                c = comb(exp, j) * a0 ** (exp - j) * a1**j
                if c == 0:
                    continue
                pairs = []
                if exp - j:
                    pairs.append((lo, exp - j))
                if j:
                    pairs.append((hi, j))
                branch.append((pack_monomial(pairs), c))
            nxt: dict[int, Scalar] = {}
            for pk, pc in partial.items():
                for bk, bc in branch:
                    mk = monomial_mul(pk, bk)
                    nxt[mk] = nxt.get(mk, 0) + pc * bc
            partial = nxt
        for mk, mc in partial.items():
            acc[mk] = acc.get(mk, 0) + mc
    return TensorPolynomial(poly.n, acc)


def _rename_variables(poly: TensorPolynomial, enc_map: Sequence[int]) -> TensorPolynomial:
    acc: dict[int, Scalar] = {}
    for key, coeff in poly._terms.items():
        pairs = [(enc_map[enc], exp) for enc, exp in unpack_monomial(key)]
        new_key = pack_monomial(pairs)
        acc[new_key] = acc.get(new_key, 0) + coeff
    return TensorPolynomial(poly.n, acc)


def act(g: GroupElement, poly: TensorPolynomial) -> TensorPolynomial:
    """Dual action on polynomials: evaluate(act(g,p), act_point(g,z)) ==
    evaluate(p, z) for every p and z."""
    if g.n != poly.n:
        raise ValueError(f"group element has n={g.n}, polynomial has n={poly.n}")
    out = poly
    for k in range(1, g.n + 1):
        out = apply_factor_matrix(out, k, _inv2(g.factor_matrices[k - 1]))
    if g.permutation != tuple(range(g.n)):
        inv = _invert_permutation(g.permutation)
        size = 1 << g.n
        enc_map = [_permute_encoding(enc, inv) for enc in range(size)]
        out = _rename_variables(out, enc_map)
    return out


# -- polarization ----------------------------------------------------

def _multiset_assignments(counts: list[int], slots: int) -> Iterator[tuple[int, ...]]:
    # All sequences over vector ids with the exact multiplicity profile.
    if slots == 0:
        yield ()
        return
    for i, c in enumerate(counts):
        if c:
            counts[i] -= 1
            for rest in _multiset_assignments(counts, slots - 1):
                yield (i,) + rest
            counts[i] += 1


def polarize_eval(poly: TensorPolynomial, vectors: Sequence[MinorVector]) -> Scalar:
    """The symmetric multilinear form attached to a degree-d polynomial,
    evaluated on d vectors.

    Convention: group the inputs into distinct vectors w_1..w_k with
    multiplicities beta and return the coefficient of t^beta in
    p(t_1 w_1 + ... + t_k w_k).  On pairwise-distinct inputs this is the
    plain coefficient of t_1...t_d; on d equal inputs it equals the
    direct evaluation p(v), with no stray d! factor.
    """
    d = poly.degree()
    if len(vectors) != d:
        raise ValueError(f"need exactly {d} vectors, got {len(vectors)}")
    for v in vectors:
        if v.n != poly.n:
            raise ValueError("vector factor count mismatch")
    if d == 0:
        return poly._terms.get(0, 0)
    distinct: list[MinorVector] = []
    counts: list[int] = []
    for v in vectors:
        for i, w in enumerate(distinct):
            if w.coords == v.coords:
                counts[i] += 1
                break
        else:
            distinct.append(v)
            counts.append(1)
    total: Scalar = 0
    for key, coeff in poly._terms.items():
        if monomial_degree(key) != d:
            continue
        occurrences: list[int] = []
        k = key
        while k:
            block = k & PAIR_MASK
            occurrences.extend([block >> EXP_BITS] * (block & EXP_MASK))
            k >>= PAIR_BITS
        mono_sum: Scalar = 0
        for assignment in _multiset_assignments(counts, d):
            prod: Scalar = coeff
            for enc, vec_id in zip(occurrences, assignment):
                value = distinct[vec_id].coords[enc]
                if value == 0:
                    prod = 0
                    break
                prod = prod * value
            mono_sum = mono_sum + prod
        total = total + mono_sum
    return normalize(total) if isinstance(total, Fraction) else total


def linear_subspace_vanishes(poly: TensorPolynomial, basis: Sequence[MinorVector]) -> bool:
    """True iff the polarization vanishes on every multiset of size d
    drawn from the basis, i.e. iff poly vanishes on the whole span."""
    if not basis:
        raise ValueError("basis must be nonempty")
    d = poly.degree()
    for combo in combinations_with_replacement(basis, d):
        if polarize_eval(poly, list(combo)) != 0:
            return False
    return True


def split_by_top_variable(poly: TensorPolynomial
                          ) -> tuple[TensorPolynomial, TensorPolynomial, TensorPolynomial]:
    """Write poly = a * (X^[1..1])^2 + b * X^[1..1] + c with a, b, c free
    of the top variable.  Errors if the top degree exceeds 2."""
    top = (1 << poly.n) - 1
    buckets: list[dict[int, Scalar]] = [{}, {}, {}]
    for key, coeff in poly._terms.items():
        exps = dict(unpack_monomial(key))
        e = exps.pop(top, 0)
        if e > 2:
            raise ValueError(f"degree {e} > 2 in the top variable")
        stripped = pack_monomial(exps.items())
        bucket = buckets[e]
        bucket[stripped] = bucket.get(stripped, 0) + coeff
    c, b, a = (TensorPolynomial(poly.n, bk) for bk in buckets)
    return a, b, c


def augment(poly: TensorPolynomial, gamma: tuple[Scalar, Scalar]) -> TensorPolynomial:
    """Append a factor contracted against the linear form gamma:
    X^I -> gamma[0] X^(I,0) + gamma[1] X^(I,1).  With gamma = (1, 0) this
    re-expresses poly on n+1 factors with a trailing zero bit."""
    g0, g1 = as_scalar(gamma[0]), as_scalar(gamma[1])
    new_bit = 1 << poly.n
    acc: dict[int, Scalar] = {}
    for key, coeff in poly._terms.items():
        partial: dict[int, Scalar] = {0: coeff}
        for enc, exp in unpack_monomial(key):
            branch: list[tuple[int, Scalar]] = []
            for j in range(exp + 1):
                c = comb(exp, j) * g0 ** (exp - j) * g1**j
                if c == 0:
                    continue
                pairs = []
                if exp - j:
                    pairs.append((enc, exp - j))
                if j:
                    pairs.append((enc | new_bit, j))
                branch.append((pack_monomial(pairs), c))
            nxt: dict[int, Scalar] = {}
            for pk, pc in partial.items():
                for bk, bc in branch:
                    mk = monomial_mul(pk, bk)
                    nxt[mk] = nxt.get(mk, 0) + pc * bc
            partial = nxt
        for mk, mc in partial.items():
            acc[mk] = acc.get(mk, 0) + mc
    return TensorPolynomial(poly.n + 1, acc)
