from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from tmzv.algebra import Element, concat, shuffle, stuffle, tshuffle, tstuffle
from tmzv.exactnum import T
from tmzv.maps import (
    S_map,
    S_tilde,
    del_n,
    del_n_t,
    delta_v_trunc,
    sigma_auto,
    sigma_m_op,
    tau_dual,
)
from tmzv.words import is_h0, is_h1, words_of_length

from strategies import elements, h1_words, words

W, Z = Element.word, Element.z
WORDS5 = [w for L in range(0, 6) for w in words_of_length(L)]


def test_sigma_auto_examples():
    assert sigma_auto(W("y")) == W("x").scale(T) + W("y")
    assert sigma_auto(W("xy")) == W("xx").scale(T) + W("xy")
    assert sigma_auto(W("xyyx"), p=0) == W("xyyx")


def test_S_map_examples():
    assert S_map(Z(2)) == Z(2)
    assert S_map(W("yy")) == W("yy") + W("xy").scale(T)
    assert S_map(W("xyy")) == W("xyy") + W("xxy").scale(T)


def test_S_tilde_examples():
    assert S_tilde(W("xy")) == W("xy") + W("xx").scale(T)
    assert S_tilde(W("x")) == W("x")
    assert S_tilde(Element.one()) == Element.one()


def test_tau_examples():
    assert tau_dual(W("xy")) == W("xy")
    assert tau_dual(W("xxy")) == W("xyy")
    assert tau_dual(Element.one()) == Element.one()


def test_del_examples():
    assert del_n(W("x"), 1) == W("xy")
    assert del_n(W("xy"), 1) == W("xyy") - W("xxy")
    assert del_n(Element.one(), 3) == Element.zero()


def test_del_t_examples():
    assert del_n_t(Z(2), 1, p=0) == Z(2, 1) - Z(3)
    assert del_n_t(Z(2), 1) == Z(2, 1) - Z(3).scale(1 + T)
    assert del_n_t(Element.one(), 2) == Element.zero()


def test_del_t_closed_form_on_x():
    # x (x - t x + y)^(n-1) y
    for n in range(1, 5):
        mid = Element.one()
        step = W("x").scale(1 - T) + W("y")
        for _ in range(n - 1):
            mid = concat(mid, step)
        assert del_n_t(W("x"), n) == concat(concat(W("x"), mid), W("y"))


def test_sigma_m_examples():
    assert sigma_m_op(Z(2), 1) == Z(3)
    assert sigma_m_op(Z(2), 1, barred=True) == Z(2, 1)
    assert sigma_m_op(Z(2), 0) == Z(2) == sigma_m_op(Z(2), 0, barred=True)
    assert sigma_m_op(Z(2, 1), 1) == Z(3, 1) + Z(2, 2)


def test_delta_v_examples():
    levels = delta_v_trunc(W("xy"), 2)
    assert levels[0] == W("xy")
    assert delta_v_trunc(W("x"), 1)[1] == W("xy")
    assert levels[1] == W("xyy") - W("xxy")


def test_delta_v_is_exp_of_log():
    # degree-2 part of exp(d1 v + d2 v^2 / 2) is d1 d1 / 2 + d2 / 2
    a = W("xyy")
    expect = del_n(del_n(a, 1), 1).scale(Fraction(1, 2)) + del_n(a, 2).scale(Fraction(1, 2))
    assert delta_v_trunc(a, 2)[2] == expect


def test_composition_and_inverse():
    for w in WORDS5:
        a = W(w)
        assert S_map(S_map(a, T), -T) == a
        for s in (2, Fraction(-1, 3)):
            assert S_map(S_map(a, T), s) == S_map(a, T + s)


def test_tau_involution_and_anti():
    ws = [w for L in range(0, 7) for w in words_of_length(L)]
    for w in ws:
        assert tau_dual(tau_dual(W(w))) == W(w)
    for u in WORDS5[:31]:
        for v in WORDS5[:15]:
            assert tau_dual(concat(W(u), W(v))) == concat(tau_dual(W(v)), tau_dual(W(u)))


def test_homomorphism_on_h1_pairs():
    h1 = [w for L in range(0, 5) for w in words_of_length(L) if is_h1(w)]
    for u in h1:
        for v in h1:
            a, b = W(u), W(v)
            assert S_map(tshuffle(a, b)) == shuffle(S_map(a), S_map(b))
            assert S_map(tstuffle(a, b)) == stuffle(S_map(a), S_map(b))


def test_S_preserves_h1_and_h0():
    for w in WORDS5:
        img = S_map(W(w))
        if is_h1(w):
            assert img.in_h1()
        if is_h0(w):
            assert img.in_h0()


def test_S_tilde_factorisation():
    for w in WORDS5:
        assert S_tilde(W(w)) == S_map(sigma_auto(W(w)), -T)


def test_left_S_tilde_derivation():
    ws = [w for L in range(1, 5) for w in words_of_length(L)]
    for u in ws:
        for v in ws:
            if len(u) + len(v) > 5:
                continue
            for n in (1, 2, 3):
                lhs = del_n_t(concat(W(u), W(v)), n)
                twisted = S_tilde(del_n_t(S_tilde(W(u)), n), -T)
                assert lhs == concat(twisted, W(v)) + concat(W(u), del_n_t(W(v), n))


def test_hoffman_bridge():
    h1 = [w for L in range(0, 6) for w in words_of_length(L) if is_h1(w)]
    for w in h1:
        assert del_n_t(W(w), 1) == tshuffle(W("y"), W(w)) - tstuffle(W("y"), W(w))


@given(words(0, 4), words(0, 4), st.integers(1, 3))
def test_leibniz(u, v, n):
    assert del_n(concat(W(u), W(v)), n) == concat(del_n(W(u), n), W(v)) + concat(W(u), del_n(W(v), n))


@given(elements(words(0, 5)))
def test_sigma_auto_concat_hom(a):
    b = W("xy") + W("y")
    assert sigma_auto(concat(a, b)) == concat(sigma_auto(a), sigma_auto(b))


@settings(max_examples=30)
@given(elements(h1_words(4)), st.integers(0, 2))
def test_sigma_t_conjugation(a, m):
    assert sigma_m_op(a, m, p=T) == S_map(sigma_m_op(S_map(a), m), -T)
