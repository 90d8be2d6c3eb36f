from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from tmzv.exactnum import binom
from tmzv.words import (
    WordClass,
    classify,
    d_x,
    d_y,
    depth,
    enumerate_indices,
    format_index,
    index_of_word,
    is_admissible,
    is_h0,
    is_h1,
    parse_index,
    weight,
    word_of_index,
    words_of_length,
)

from strategies import indices, words


def test_word_of_index_examples():
    assert word_of_index((2, 1)) == "xyy"
    assert word_of_index((3,)) == "xxy"
    assert word_of_index(()) == ""


def test_index_of_word_examples():
    assert index_of_word("xyy") == (2, 1)
    assert index_of_word("yyy") == (1, 1, 1)
    with pytest.raises(ValueError):
        index_of_word("xyx")


def test_classify_examples():
    assert classify("xy") == WordClass.H0
    assert classify("yxy") == WordClass.H1_ONLY
    assert classify("yx") == WordClass.HT_ONLY
    assert classify("") == WordClass.H0


def test_enumerate_examples():
    assert enumerate_indices(4, 2, True) == [(2, 2), (3, 1)]
    assert enumerate_indices(3, 3, True) == []
    assert enumerate_indices(3, 2) == [(1, 2), (2, 1)]


def _compositions(k, n):
    # oracle: stars and bars through cut positions
    out = []
    for cuts in itertools.combinations(range(1, k), n - 1):
        b = (0,) + cuts + (k,)
        out.append(tuple(b[i + 1] - b[i] for i in range(n)))
    return sorted(out)


def test_enumerate_against_oracle_and_counts():
    for k in range(1, 11):
        for n in range(1, k + 1):
            allk = enumerate_indices(k, n)
            assert allk == _compositions(k, n)
            assert len(allk) == binom(k - 1, n - 1)
            adm = enumerate_indices(k, n, True)
            assert adm == [c for c in allk if c[0] >= 2]
            if k > n:
                assert len(adm) == binom(k - 2, n - 1)


def test_roundtrip_and_counts_to_weight_10():
    for k in range(1, 11):
        for n in range(1, k + 1):
            for idx in enumerate_indices(k, n):
                w = word_of_index(idx)
                assert index_of_word(w) == idx
                assert len(w) == weight(idx) and d_y(w) == depth(idx)


@given(words(0, 8))
def test_predicates_consistent(w):
    assert is_h0(w) == (classify(w) == WordClass.H0)
    assert is_h1(w) == (w == "" or w.endswith("y"))
    assert d_x(w) + d_y(w) == len(w)
    if is_h1(w):
        assert word_of_index(index_of_word(w)) == w


@given(indices)
def test_admissible_and_text(k):
    assert is_admissible(k) == (k[0] >= 2)
    assert parse_index(format_index(k)) == k


def test_words_of_length():
    assert sorted(words_of_length(2)) == ["xx", "xy", "yx", "yy"]


def test_parse_index_rejects():
    with pytest.raises(ValueError):
        parse_index("2,0")
    with pytest.raises(ValueError):
        parse_index("a")
