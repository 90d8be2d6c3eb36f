from __future__ import annotations

import pytest
from hypothesis import given, settings

from tmzv.algebra import DomainError, Element, product
from tmzv.exactnum import T
from tmzv.maps import S_map
from tmzv.regularize import decompose, letter_count_sum, reg, reg_sum_word
from tmzv.words import is_h0, is_h1, words_of_length

from strategies import elements, h1_words

W, Z = Element.word, Element.z
H1_6 = [w for L in range(0, 7) for w in words_of_length(L) if is_h1(w)]


def test_decompose_examples():
    assert decompose(Z(2)).components == (Z(2),)
    d = decompose(W("y"))
    assert d[0] == Element.zero() and d[1] == Element.one()
    d = decompose(W("yxy"))
    assert (d[0], d[1]) == (Z(2, 1).scale(-2), Z(2))
    assert d[5] == Element.zero()


def test_reg_examples():
    assert reg(W("yxy"), "shuffle") == Z(2, 1).scale(-2)
    assert reg(W("yxy"), "stuffle") == -Z(2, 1) - Z(3)
    assert reg(Z(3, 1, 2), "shuffle") == Z(3, 1, 2)


def test_t_reg_examples():
    assert reg(W("yxy"), "tshuffle") == Z(2, 1).scale(-2) + Z(3).scale(3 * T)
    assert reg(W("yxy"), "tstuffle") == -Z(2, 1) + Z(3).scale(2 * T - 1)


def test_reg_sum_word_examples():
    assert reg_sum_word(1, 1) == W("xy")
    assert reg_sum_word(1, 2) == -W("xyy")
    assert reg_sum_word(2, 1) == W("xxy")


def test_letter_count_sum_only_h1():
    s = letter_count_sum(2, 2)
    assert all(w.endswith("y") for w, _ in s.items()) and len(s) == 3


def test_rejects_non_h1():
    with pytest.raises(DomainError):
        reg(W("yx"))
    with pytest.raises(ValueError):
        decompose(W("y"), "concat")


@pytest.mark.parametrize("prod", ["shuffle", "stuffle", "tshuffle", "tstuffle"])
def test_reconstruction(prod):
    for w in H1_6:
        d = decompose(W(w), prod)
        assert d.reconstruct() == W(w)
        assert all(c.in_h0() for c in d.components)


def test_classical_closed_form():
    for k in range(1, 8):
        for n in range(1, 9 - k):
            expect = W("x" * k + "y" * n).scale((-1) ** (n - 1))
            assert reg_sum_word(k, n) == expect


def test_conjugation_identity():
    for w in (w for w in H1_6 if len(w) <= 5):
        assert reg(W(w), "tshuffle") == S_map(reg(S_map(W(w)), "shuffle"), -T)
        assert reg(W(w), "tstuffle") == S_map(reg(S_map(W(w)), "stuffle"), -T)


def test_identity_on_h0():
    for w in H1_6:
        if is_h0(w):
            for prod in ("shuffle", "stuffle", "tshuffle", "tstuffle"):
                assert reg(W(w), prod) == W(w)


@settings(max_examples=25)
@given(elements(h1_words(3), 2), elements(h1_words(3), 2))
def test_reg_is_homomorphism(a, b):
    for prod in ("shuffle", "stuffle", "tshuffle", "tstuffle"):
        lhs = reg(product(prod, a, b), prod)
        rhs = product(prod, reg(a, prod), reg(b, prod))
        assert lhs == rhs
