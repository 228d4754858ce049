from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqschub.combinatorics import (check_index_seq, format_index, from_bitstring, index_sets,
                                   parse_index, pieri_support, shifted, to_bitstring,
                                   up_moves, weight)


def brute_support(I, h):
    k = len(I)
    out = []
    for H in product(range(h + 1), repeat=k):
        if sum(H) != h:
            continue
        if all(I[j] + H[j] < I[j + 1] for j in range(k - 1)):
            out.append(H)
    return sorted(out)


def test_weight_examples():
    assert weight((1, 2, 3)) == 0
    assert weight((2, 3, 5)) == 4
    assert weight((1, 3)) == 1


def test_support_examples():
    assert pieri_support((1, 3, 4), 0) == [(0, 0, 0)]
    assert pieri_support((1, 2), 1) == [(0, 1)]
    assert sorted(pieri_support((1, 3), 1)) == [(0, 1), (1, 0)]
    assert sorted(pieri_support((1, 3), 2)) == [(0, 2), (1, 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_support_matches_brute_force(n):
    for k in range(1, n + 1):
        for I in index_sets(k, n):
            for h in range(2 * n + 1):
                got = pieri_support(I, h)
                assert sorted(got) == brute_support(I, h)
                images = [shifted(I, H) for H in got]
                assert len(set(images)) == len(images)
                for K in images:
                    assert all(a < b for a, b in zip(K, K[1:]))
                    assert weight(K) == weight(I) + h


def test_index_sets_order():
    assert index_sets(2, 4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    basis = index_sets(3, 6)
    assert len(basis) == 20
    assert basis == sorted(basis, key=lambda I: (weight(I), I))


def test_index_text_form():
    assert parse_index("1,3") == (1, 3)
    assert parse_index(" 2, 5 ,7") == (2, 5, 7)
    assert format_index((1, 3)) == "1,3"
    for bad in ("", "3,1", "1,1", "0,2", "a,b"):
        with pytest.raises(ValueError):
            parse_index(bad)
    with pytest.raises(ValueError):
        check_index_seq((2, 2))


def test_bitstrings():
    assert to_bitstring((1, 3), 4) == "0101"
    assert to_bitstring((1, 2, 3), 5) == "00011"
    for I in index_sets(2, 4):
        assert from_bitstring(to_bitstring(I, 4)) == I
    with pytest.raises(ValueError):
        to_bitstring((1, 5), 4)
    assert sorted(up_moves("0101")) == ["0110", "1001"]


@settings(max_examples=50, deadline=None)
@given(st.sets(st.integers(1, 9), min_size=1, max_size=5))
def test_bitstring_round_trip(entries):
    I = tuple(sorted(entries))
    assert from_bitstring(to_bitstring(I, 9)) == I
