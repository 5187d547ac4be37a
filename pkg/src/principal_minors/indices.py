"""Binary multi-indices and dense length-2^n coordinate vectors.

An index I = [i_1, ..., i_n] selects rows/columns of a matrix and labels
the tensor coordinate X^I.  The integer encoding sum_k i_k * 2^(k-1)
(factor 1 = least significant bit) is part of the file-format contract;
every dense vector stores coordinates in encoding order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .scalars import Scalar, as_scalar


@dataclass(frozen=True)
class BinaryIndex:
    """A length-n bit vector; immutable and hashable."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("factor count must be positive")
        if len(self.bits) != self.n or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"bits must be {self.n} values in {{0,1}}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BinaryIndex":
        bits = tuple(bits)
        return cls(len(bits), bits)

    @classmethod
    def from_encoding(cls, n: int, encoding: int) -> "BinaryIndex":
        if not 0 <= encoding < (1 << n):
            raise ValueError(f"encoding {encoding} out of range for n={n}")
        return cls(n, tuple((encoding >> k) & 1 for k in range(n)))

    @property
    def encoding(self) -> int:
        enc = 0
        for k, b in enumerate(self.bits):
            enc |= b << k
        return enc

    def cardinality(self) -> int:
        """|I| = number of set bits."""
        return sum(self.bits)

    def complement(self) -> "BinaryIndex":
        return BinaryIndex(self.n, tuple(1 - b for b in self.bits))

    def concat(self, other: "BinaryIndex") -> "BinaryIndex":
        """Concatenated index (self, other); self occupies factors 1..n."""
        return BinaryIndex(self.n + other.n, self.bits + other.bits)

    def __str__(self) -> str:
        return "[" + ",".join(str(b) for b in self.bits) + "]"


def all_indices(n: int) -> Iterator[BinaryIndex]:
    """All 2^n indices in encoding order."""
    for enc in range(1 << n):
        yield BinaryIndex.from_encoding(n, enc)


def complement(index: BinaryIndex) -> BinaryIndex:
    return index.complement()


def cardinality(index: BinaryIndex) -> int:
    return index.cardinality()


@dataclass(frozen=True)
class MinorVector:
    """Dense vector of 2^n exact coordinates in encoding order."""

    n: int
    coords: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.coords) != (1 << self.n):
            raise ValueError(f"expected {1 << self.n} coordinates, got {len(self.coords)}")

    @classmethod
    def from_values(cls, n: int, values: Sequence) -> "MinorVector":
        return cls(n, tuple(as_scalar(v) for v in values))

    @classmethod
    def unit(cls, n: int, index: "BinaryIndex | int") -> "MinorVector":
        """Coordinate vector e_I."""
        enc = index if isinstance(index, int) else index.encoding
        return cls(n, tuple(1 if e == enc else 0 for e in range(1 << n)))

    def __getitem__(self, index: "BinaryIndex | int") -> Scalar:
        if isinstance(index, BinaryIndex):
            if index.n != self.n:
                raise ValueError(f"index has n={index.n}, vector has n={self.n}")
            return self.coords[index.encoding]
        return self.coords[index]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def scale(self, factor) -> "MinorVector":
        factor = as_scalar(factor)
        return MinorVector.from_values(self.n, [factor * c for c in self.coords])
