from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from principal_minors import BinaryIndex, MinorVector, all_indices


def test_complement_examples():
    assert BinaryIndex.from_bits([0, 0, 0]).complement().bits == (1, 1, 1)
    assert BinaryIndex.from_bits([1, 0, 1]).complement().bits == (0, 1, 0)


def test_complement_is_involution_n4():
    for idx in all_indices(4):
        assert idx.complement().complement() == idx


def test_cardinality_examples():
    assert BinaryIndex.from_bits([0, 0, 0]).cardinality() == 0
    assert BinaryIndex.from_bits([1, 1, 1]).cardinality() == 3
    assert BinaryIndex.from_bits([1, 0, 1, 0]).cardinality() == 2


def test_encoding_is_little_endian():
    # factor 1 = least significant bit
    assert BinaryIndex.from_bits([1, 0, 0]).encoding == 1
    assert BinaryIndex.from_bits([0, 0, 1]).encoding == 4


def test_encode_decode_roundtrip_all_n_up_to_8():
    for n in range(1, 9):
        for enc in range(1 << n):
            assert BinaryIndex.from_encoding(n, enc).encoding == enc


def test_bad_bits_rejected():
    with pytest.raises(ValueError):
        BinaryIndex.from_bits([0, 2, 0])
    with pytest.raises(ValueError):
        BinaryIndex(3, (0, 1))
    with pytest.raises(ValueError):
        BinaryIndex.from_encoding(3, 8)


@given(st.integers(1, 6), st.data())
def test_minor_vector_access_by_index_matches_encoding(n, data):
    coords = data.draw(
        st.lists(st.integers(-9, 9), min_size=1 << n, max_size=1 << n)
    )
    z = MinorVector.from_values(n, coords)
    for idx in all_indices(n):
        assert z[idx] == z[idx.encoding]


def test_minor_vector_length_enforced():
    with pytest.raises(ValueError):
        MinorVector.from_values(2, [1, 2, 3])


def test_unit_vector():
    z = MinorVector.unit(3, 5)
    assert z[5] == 1 and sum(1 for c in z.coords if c != 0) == 1


def test_concat_places_second_factor_in_high_bits():
    j = BinaryIndex.from_bits([1, 0])
    k = BinaryIndex.from_bits([1])
    assert j.concat(k).encoding == 1 + (1 << 2)
