from __future__ import annotations

import json
import math

import pytest

from tmzv.algebra import Element, stuffle, tstuffle
from tmzv.exactnum import T, TPoly, tpoly_eval
from tmzv.numeric import EvalConfig
from tmzv.relations import (
    C_tilde,
    C_value,
    b_k,
    build_N,
    c_Pi,
    catalog,
    coeff_c,
    coeff_d,
    partitions,
    run_catalog,
    run_one,
    weight_C,
    word_identity,
    zeta_identity,
)
from tmzv.relations.zeta_identities import tol_for

Z = Element.z
ZETA3 = 1.2020569031595942


def test_coeff_examples():
    assert coeff_c(2) == 2 * T - 1
    assert coeff_c(1) == TPoly.const(1)
    assert coeff_c(4) == 6 * (4 * T**3 - 6 * T**2 + 4 * T - 1)
    assert coeff_d(0) == TPoly()
    assert coeff_d(2) == 2 * T - 1
    assert coeff_d(3) == 3 * T**2 - 3 * T + 1


def test_coeff_c_degree_and_lead():
    for m in range(1, 13):
        c = coeff_c(m)
        assert c.degree == m - 1 and c[m - 1] == math.factorial(m)


def test_recurrences():
    for m in range(2, 13):
        lhs = coeff_c(m + 1)
        rhs = m * (2 * T - 1) * coeff_c(m) - m * (m - 1) * (T * T - T) * coeff_c(m - 1)
        assert lhs == rhs
    for m in range(1, 13):
        assert coeff_d(m + 1) == (2 * T - 1) * coeff_d(m) - (T * T - T) * coeff_d(m - 1)


def test_endpoints():
    for m in range(1, 13):
        assert tpoly_eval(coeff_c(m), 0) == math.factorial(m - 1) * (-1) ** (m - 1)
        assert tpoly_eval(coeff_c(m), 1) == math.factorial(m - 1)


def test_partitions():
    assert partitions(2) == (((1, 2),), ((1,), (2,)))
    bell = [1, 2, 5, 15, 52, 203, 877]
    for n, b in enumerate(bell, 1):
        ps = partitions(n)
        assert len(ps) == b
        for blocks in ps:
            flat = sorted(i for blk in blocks for i in blk)
            assert flat == list(range(1, n + 1))
            assert [blk[0] for blk in blocks] == sorted(blk[0] for blk in blocks)
    with pytest.raises(ValueError):
        partitions(11)


def test_c_Pi_example():
    assert c_Pi(((1, 2), (3, 4), (5,))) == (2 * T - 1) ** 2


def test_weight_C():
    for k in range(1, 8):
        assert weight_C((k,)) == (2**k, 2**k - 1)
    assert C_value((2, 1)) - C_value((1,)) == C_tilde((2, 1))


def test_b_k():
    assert b_k((4, 3)) == math.comb(2, 2) + math.comb(2, 2)
    assert b_k((2,)) == 0


def test_build_N():
    assert build_N(2, 2, 5) == Z(5, 5)
    assert build_N(3, 2, 1) == Z(1, 2) + Z(2, 1)
    assert build_N(2, 1, 2) == Z(4)


def test_symmetric_sum_depth_two():
    k1, k2 = 2, 3
    inst = word_identity("symmetric_sum", k=[k1, k2])
    assert inst.lhs == Z(k1, k2) + Z(k2, k1)
    assert inst.rhs == tstuffle(Z(k1), Z(k2)) + Z(k1 + k2).scale(coeff_c(2))


def test_dm_sum_example():
    k = 3
    inst = word_identity("dm_sum", a=k, b=k, n=2)
    assert inst.lhs == inst.rhs == Z(k, k).scale(2)


def test_S_ast_inverse_example():
    k = 2
    # S(z_k^2) = z_k^2 + z_2k and z_k * z_k = 2 z_k^2 + z_2k
    assert stuffle(Z(k), Z(k)) == Z(k, k).scale(2) + Z(2 * k)
    assert word_identity("S_ast_inverse", k=k, n=2).check().passed


def test_unknown_names():
    with pytest.raises(KeyError):
        word_identity("nope")
    with pytest.raises(KeyError):
        zeta_identity("nope")
    with pytest.raises(ValueError):
        word_identity("sum_formula_word", k=2, n=3)


def test_sum_formula_zeta_example():
    inst = zeta_identity("sum_formula", k=3, n=2)
    assert abs(inst.rhs.coeff(0) - ZETA3) < 1e-8 and abs(inst.rhs.coeff(1) - ZETA3) < 1e-8
    assert inst.check().residual < 1e-3
    inst = zeta_identity("sum_formula", k=4, n=2)
    d0 = (inst.lhs - inst.rhs).coeff(0)
    assert abs(d0) < 1e-3 and abs(inst.rhs.coeff(0) - math.pi**4 / 90) < 1e-10


def test_weighted_sum_n2_example():
    inst = zeta_identity("weighted_sum_n2", k=3)
    assert abs(inst.rhs.coeff(0) - 4 * ZETA3) < 1e-8 and abs(inst.rhs.coeff(1) - 4 * ZETA3) < 1e-8
    assert inst.check().residual < 1e-3


def test_sum_formula_both_forms_agree_exactly():
    for k in range(3, 8):
        for n in range(1, k):
            a = zeta_identity("sum_formula", k=k, n=n, form="binomial_t").rhs
            b = zeta_identity("sum_formula", k=k, n=n, form="shifted").rhs
            assert (a - b).max_abs() < 1e-9


def test_zeta_level_rejects_bad_params():
    with pytest.raises(ValueError):
        zeta_identity("symmetric_sum_zeta", k=[1, 2])
    with pytest.raises(ValueError):
        zeta_identity("sum_formula", k=3, n=2, form="other")


def test_tolerance_scaling():
    assert tol_for("sum_formula", EvalConfig(M=20000)) == 5 * tol_for("sum_formula", EvalConfig())


def test_report_schema():
    r = run_one("dm_sum", {"a": 2, "b": 1, "n": 3})
    doc = r.to_json()
    assert set(doc) == {"name", "params", "level", "pass", "max_abs_residual"}
    assert doc["max_abs_residual"] == "exact" and doc["pass"] is True
    assert "wall_ms" in r.to_json(with_time=True)
    z = run_one("eval_2k", {"k": 1, "n": 2}).to_json()
    assert z["level"] == "zeta" and isinstance(z["max_abs_residual"], float)


def test_catalog_deterministic_and_green():
    a, b = catalog(4), catalog(4)
    assert a == b and len(a) > 100
    results = run_catalog(a)
    bad = [(r.name, r.params, r.residual) for r in results if not r.passed]
    assert not bad
    dumped = json.dumps([r.to_json() for r in results], sort_keys=True)
    assert dumped == json.dumps([r.to_json() for r in run_catalog(a)], sort_keys=True)


def test_second_third_agree():
    for k in range(1, 9):
        for n in range(1, k + 1):
            assert word_identity("Nkn_second_third", k=k, n=n, a=2).check().passed
