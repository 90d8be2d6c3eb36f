from __future__ import annotations

import json
from functools import lru_cache
from itertools import product as iproduct

import pytest
from hypothesis import given, settings

from tmzv.algebra import (
    DomainError,
    Element,
    concat,
    power,
    shuffle,
    stuffle,
    tshuffle,
    tstuffle,
)
from tmzv.exactnum import T, ZERO
from tmzv.maps import S_map
from tmzv.words import is_h0, words_of_length

from strategies import elements, h1_words, words

W, Z = Element.word, Element.z


# -- independent oracles ----------------------------------------------------------


@lru_cache(maxsize=None)
def _shuffle_oracle(u: str, v: str):
    # choose the positions of u's letters among |u|+|v| slots
    from itertools import combinations
    from collections import Counter

    n = len(u) + len(v)
    out = Counter()
    for pos in combinations(range(n), len(u)):
        it_u, it_v, s = iter(u), iter(v), []
        pset = set(pos)
        for i in range(n):
            s.append(next(it_u) if i in pset else next(it_v))
        out["".join(s)] += 1
    return out


def shuffle_oracle(u: str, v: str) -> Element:
    return Element({w: c for w, c in _shuffle_oracle(u, v).items()})


def _stuffle_idx(a, b):
    # quasi-shuffle of integer tuples, returns {tuple: count}
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out = {}
    for head, rest in (((a[0],), _stuffle_idx(a[1:], b)), ((b[0],), _stuffle_idx(a, b[1:])), ((a[0] + b[0],), _stuffle_idx(a[1:], b[1:]))):
        for k, c in rest.items():
            out[head + k] = out.get(head + k, 0) + c
    return out


def stuffle_oracle(a, b) -> Element:
    return Element.sum(Z(*k).scale(c) for k, c in _stuffle_idx(tuple(a), tuple(b)).items())


# -- reference examples ------------------------------------------------------------------


def test_concat_examples():
    assert concat(W("xy"), W("y")) == W("xyy")
    assert concat(Element.one(), W("xyx")) == W("xyx")
    assert concat(W("x") + W("y"), W("y")) == W("xy") + W("yy")


def test_tshuffle_examples():
    assert tshuffle(W("y"), W("y")) == W("yy").scale(2) - W("xy").scale(2 * T)
    assert tshuffle(W("x"), W("y")) == W("xy") + W("yx") - W("xx").scale(T)
    assert tshuffle(Element.one(), W("xyy")) == W("xyy")


def test_tstuffle_examples():
    assert tstuffle(Z(1), Z(1)) == Z(1, 1).scale(2) + Z(2).scale(1 - 2 * T)
    expected = Z(1, 1, 1).scale(3) + (Z(1, 2) + Z(2, 1)).scale(1 - 2 * T) + Z(3).scale(T * T - T)
    assert tstuffle(Z(1, 1), Z(1)) == expected
    assert tstuffle(Element.one(), Z(2, 1)) == Z(2, 1)


def test_tstuffle_rejects_non_h1():
    with pytest.raises(DomainError):
        tstuffle(W("yx"), Z(1))
    with pytest.raises(DomainError):
        stuffle(Z(1), W("x"))


def test_power_examples():
    assert power(W("y"), 2, "shuffle") == W("yy").scale(2)
    assert power(Z(2), 2, "concat") == W("xyxy")
    assert power(Z(1), 3, "concat") == W("yyy")
    assert power(Z(3), 0, "tstuffle") == Element.one()


def test_depth_one_stuffle():
    for k in range(1, 7):
        for l in range(1, 7):
            assert tstuffle(Z(k), Z(l)) == Z(k, l) + Z(l, k) + Z(k + l).scale(1 - 2 * T)


def test_classical_products_match_oracles():
    ws = [w for L in range(0, 4) for w in words_of_length(L)]
    for u, v in iproduct(ws, ws):
        assert shuffle(W(u), W(v)) == shuffle_oracle(u, v)
    idx = [(1,), (2,), (1, 1), (2, 1), (1, 3), (3,), (1, 1, 2)]
    for a, b in iproduct(idx, idx):
        assert stuffle(Z(*a), Z(*b)) == stuffle_oracle(a, b)


def test_specialisation_p0_on_pairs():
    ws = [w for L in range(0, 6) for w in words_of_length(L)]
    h1 = [w for w in ws if w == "" or w.endswith("y")]
    for u in ws:
        for v in ws:
            if len(u) + len(v) <= 6:
                assert tshuffle(W(u), W(v), p=0) == shuffle(W(u), W(v))
    for u in h1:
        for v in h1:
            if len(u) + len(v) <= 6:
                assert tstuffle(W(u), W(v), p=0) == stuffle(W(u), W(v))


def test_p1_stuffle_is_star_stuffle():
    # with p = 1 the diagonal coefficient is -1: z_k * z_l = z_k z_l + z_l z_k - z_{k+l}
    assert tstuffle(Z(2), Z(3), p=1) == Z(2, 3) + Z(3, 2) - Z(5)


def test_h0_closure():
    h0 = [w for L in range(0, 6) for w in words_of_length(L) if is_h0(w)]
    for u in h0:
        for v in h0:
            if len(u) + len(v) <= 6:
                for prod in (tshuffle, tstuffle):
                    assert prod(W(u), W(v)).in_h0()


def test_json_roundtrip():
    a = Z(2, 1).scale(1 - 2 * T) + W("yx")
    doc = json.loads(json.dumps(a.to_json()))
    assert Element.from_json(doc) == a
    assert doc[0]["word"] <= doc[-1]["word"] or len(doc[0]["word"]) < len(doc[-1]["word"])


def test_canonical_zero_coefficients_dropped():
    a = W("xy") - W("xy")
    assert a == Element.zero() and len(a) == 0
    assert Element({"xy": ZERO}) == Element.zero()


# -- properties ---------------------------------------------------------------------


@given(elements(words(0, 4)), elements(words(0, 4)))
def test_tshuffle_commutative(a, b):
    assert tshuffle(a, b) == tshuffle(b, a)


@given(elements(h1_words(4)), elements(h1_words(4)))
def test_tstuffle_commutative(a, b):
    assert tstuffle(a, b) == tstuffle(b, a)


@settings(max_examples=30)
@given(words(0, 3), words(0, 3), words(0, 3))
def test_tshuffle_associative(u, v, w):
    a, b, c = W(u), W(v), W(w)
    assert tshuffle(tshuffle(a, b), c) == tshuffle(a, tshuffle(b, c))


@settings(max_examples=30)
@given(h1_words(3), h1_words(3), h1_words(3))
def test_tstuffle_associative(u, v, w):
    a, b, c = W(u), W(v), W(w)
    assert tstuffle(tstuffle(a, b), c) == tstuffle(a, tstuffle(b, c))


@given(elements(words(0, 4)), elements(words(0, 4)), elements(words(0, 3)))
def test_tshuffle_bilinear(a, b, c):
    assert tshuffle(a + b, c) == tshuffle(a, c) + tshuffle(b, c)


@given(elements(h1_words(4)), elements(h1_words(4)))
def test_tshuffle_via_conjugation(a, b):
    # independent route: S_t intertwines the t-products with the classical ones
    assert S_map(tshuffle(a, b)) == shuffle(S_map(a), S_map(b))
    assert S_map(tstuffle(a, b)) == stuffle(S_map(a), S_map(b))


@given(h1_words(4), h1_words(4))
def test_unit_laws(u, v):
    assert tshuffle(Element.one(), W(u)) == W(u)
    assert tstuffle(W(v), Element.one()) == W(v)
