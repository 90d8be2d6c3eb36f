from __future__ import annotations

import json
from fractions import Fraction
from math import comb

from hypothesis import given
from hypothesis import strategies as st

from tmzv.exactnum import ONE, T, ZERO, TPoly, as_tpoly, bernoulli, binom, tpoly_eval

from strategies import rationals, tpolys


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_recurrence_oracle():
    # independent oracle: B_n from the explicit double sum over Stirling-type terms
    def explicit(n):
        return sum(
            Fraction((-1) ** v * comb(k, v) * v**n, k + 1) for k in range(n + 1) for v in range(k + 1)
        )

    for n in range(2, 16):
        assert bernoulli(n) == explicit(n)


def test_bernoulli_odd_vanish():
    assert all(bernoulli(2 * k + 1) == 0 for k in range(1, 21))


def test_binom():
    assert binom(4, 2) == 6
    assert binom(3, 5) == 0
    assert binom(10, 5) == 252
    assert binom(-2, 1) == 0
    assert binom(4, -1) == 0


def test_tpoly_eval_examples():
    c4 = 6 * (4 * T**3 - 6 * T**2 + 4 * T - 1)
    assert tpoly_eval(2 * T - 1, 1) == 1
    assert tpoly_eval(2 * T - 1, 0) == -1
    # 3! * ((1/2)^4 - (-1/2)^4) vanishes
    assert tpoly_eval(c4, Fraction(1, 2)) == 0
    assert tpoly_eval(c4, 2) == 6 * (2**4 - 1)


def test_tpoly_no_zero_coefficients():
    p = TPoly({0: 1, 3: 0, 2: Fraction(0)})
    assert list(p.items()) == [(0, 1)]
    assert (T - T) == ZERO
    assert ZERO.degree < 0
    assert (T**3 + 1).degree == 3


def test_tpoly_printing():
    assert str(2 * T - 1) == "2t - 1"
    assert (1 - 2 * T).compact() == "1-2t"
    assert (T * T - T).compact() == "-t+t^2"


def test_tpoly_json_roundtrip():
    p = TPoly({0: Fraction(-1, 3), 4: 2})
    doc = json.loads(json.dumps(p.to_json()))
    assert TPoly.from_json(doc) == p


@given(rationals, rationals, rationals, rationals)
def test_rational_exact(a, b, c, d):
    assert (a + b) * c == a * c + b * c
    if d:
        assert (a / d) * d == a


@given(tpolys, tpolys, tpolys)
def test_tpoly_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * ONE == p
    assert p - p == ZERO


@given(tpolys, tpolys, rationals)
def test_eval_is_ring_hom(p, q, c):
    assert tpoly_eval(p * q, c) == tpoly_eval(p, c) * tpoly_eval(q, c)
    assert tpoly_eval(p + q, c) == tpoly_eval(p, c) + tpoly_eval(q, c)


@given(tpolys, tpolys)
def test_compose(p, q):
    assert tpoly_eval(p.compose(q), 3) == tpoly_eval(p, tpoly_eval(q, 3))


@given(st.integers(-5, 5))
def test_as_tpoly_const(n):
    assert as_tpoly(n) == TPoly.const(n)
