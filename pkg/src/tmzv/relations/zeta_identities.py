"""Numeric identities between interpolated multiple zeta values.

Both sides are polynomials in ``t`` with float coefficients, evaluated with the
same truncation so the systematic bias of the nested sums mostly cancels. A
check passes when every coefficient of ``lhs - rhs`` is below the tolerance.
"""
from __future__ import annotations

from itertools import permutations
from typing import Dict, Optional

from ..algebra import Element, tshuffle, tstuffle
from ..exactnum import ONE, T, TPoly, ZERO, binom
from ..maps import del_n_t, sigma_m_op
from ..numeric import (
    DEFAULT,
    LAMBDA,
    EvalConfig,
    NumPolyTT,
    Z_reg_eval,
    Zt_eval,
    Zt_index,
    _beta_sum,
    _odd_sum,
    closed_form_2k,
    mzv_eval,
    rho_apply,
)
from ..regularize import reg
from ..words import enumerate_indices
from .coefficients import C_tilde, C_tilde_trunc, b_k, c_Pi, partitions
from .instance import IdentityInstance

__all__ = ["zeta_identity", "ZETA_IDENTITIES", "DEFAULT_TOL", "tol_for"]

# absolute tolerance per t-coefficient at M = 100000
DEFAULT_TOL = {
    "sum_formula": 1e-2,
    "symmetric_sum_zeta": 1e-2,
    "weighted_sum": 1e-2,
    "weighted_sum_n2": 1e-3,
    "height_one_zeta": 1e-2,
    "eval_2k": 1e-4,
    "zetat_k_star": 1e-2,
    "restricted_sum": 1e-2,
    "restricted_sum_word": 1e-2,
    "eds_rho": 1e-2,
    "eds_shuffle_T": 1e-2,
    "eds_reg": 1e-2,
    "eds_derivation": 1e-2,
    "eds_sigma": 1e-2,
}


def tol_for(name: str, cfg: EvalConfig) -> float:
    """Tolerances are pinned for ``M = 100000``; shorter sums get five times the slack."""
    base = DEFAULT_TOL[name]
    return base if cfg.M >= 100_000 else 5 * base


def _zeta_times(p: TPoly, k, cfg) -> NumPolyTT:
    v, e = mzv_eval(k, cfg)
    return NumPolyTT.from_tpoly(p, v, e * max((abs(float(c)) for _, c in p.items()), default=0))


def _sum(polys) -> NumPolyTT:
    out = NumPolyTT()
    for p in polys:
        out = out + p
    return out


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _inst(name, params, lhs, rhs, cfg, tol=None) -> IdentityInstance:
    return IdentityInstance(name, params, "zeta", lhs, rhs, tol=tol if tol is not None else tol_for(name, cfg))


# -- sum formulas ----------------------------------------------------------------


def sum_formula(k: int, n: int, form: str = "binomial_t", cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    """Sum of ``zeta^t`` over admissible indices of weight ``k``, depth ``n``.

    ``form="binomial_t"`` uses ``sum_i C(k-1, i) t^i (1-t)^(n-1-i)``;
    ``form="shifted"`` uses ``sum_i C(k-i-1, n-i) t^(n-i)``.
    """
    _need(k > n >= 1, "need k > n >= 1")
    lhs = Zt_eval(Element.sum(Element.z(*c) for c in enumerate_indices(k, n, True)), cfg)
    if form == "binomial_t":
        p = sum((T**i * (ONE - T) ** (n - 1 - i) * binom(k - 1, i) for i in range(n)), ZERO)
    elif form == "shifted":
        p = sum((T ** (n - i) * binom(k - i - 1, n - i) for i in range(1, n + 1)), ZERO)
    else:
        raise ValueError(f"unknown form {form!r}")
    return _inst("sum_formula", {"k": k, "n": n, "form": form}, lhs, _zeta_times(p, (k,), cfg), cfg, tol)


def symmetric_sum_zeta(k, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    k = (k,) if isinstance(k, int) else tuple(k)
    _need(len(k) >= 1 and min(k) >= 2, "all parts must be >= 2")
    n = len(k)
    lhs = _sum(Zt_index([k[i] for i in perm], cfg) for perm in permutations(range(n)))
    parts = []
    for blocks in partitions(n):
        val, err = 1.0, 0.0
        for b in blocks:
            v, e = mzv_eval((sum(k[i - 1] for i in b),), cfg)
            err = err * abs(v) + e * abs(val) + err * e
            val *= v
        parts.append(NumPolyTT.from_tpoly(c_Pi(blocks), val, err))
    return _inst("symmetric_sum_zeta", {"k": list(k)}, lhs, _sum(parts), cfg, tol)


def weighted_sum(k: int, n: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    _need(k > n >= 2, "need k > n >= 2")
    z = Element.z
    parts = [z(*c).scale(C_tilde_trunc(c)) for c in enumerate_indices(k, n, True)]
    parts += [
        z(*c).scale(-T * (C_tilde(c) - C_tilde_trunc(c))) for c in enumerate_indices(k, n - 1, True)
    ]
    if n > 2:
        parts += [z(*c).scale((T - T * T) * b_k(c)) for c in enumerate_indices(k, n - 2, True)]
    lhs = Zt_eval(Element.sum(parts), cfg)
    p = ZERO
    for i in range(1, n - 1):
        p = p + T**i * (ONE - T) ** (n - 1 - i) * (k * binom(k - 1, i) - (k - n + 1) * binom(k - 1, i - 1))
    p = p + (ONE - T) ** (n - 1) * k + T ** (n - 1) * binom(k - 1, n - 1)
    return _inst("weighted_sum", {"k": k, "n": n}, lhs, _zeta_times(p, (k,), cfg), cfg, tol)


def weighted_sum_n2(k: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    _need(k >= 3, "need k >= 3")
    lhs = Zt_eval(Element.sum(Element.z(c[0], c[1]).scale(2 ** c[0]) for c in enumerate_indices(k, 2, True)), cfg)
    p = ONE * (k + 1) + T * (2**k - 4)
    return _inst("weighted_sum_n2", {"k": k}, lhs, _zeta_times(p, (k,), cfg), cfg, tol)


def height_one_zeta(k: int, l: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    _need(k >= 1 and l >= 1, "need k, l >= 1")
    lhs = Zt_index((k + 1,) + (1,) * (l - 1), cfg)
    parts = []
    for j in range(1, min(k, l) + 1):
        for ks in enumerate_indices(k, j):
            for ls in enumerate_indices(l, j):
                geo = sum((T**e for e in range(ls[-1])), ZERO)  # (1 - t^l) / (1 - t)
                idx = tuple(a + b for a, b in zip(ks, ls))
                parts.append(_zeta_times(geo * (-1) ** (j - 1), idx, cfg))
    return _inst("height_one_zeta", {"k": k, "l": l}, lhs, _sum(parts), cfg, tol)


# -- even arguments ---------------------------------------------------------------


def eval_2k(k: int, n: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    _need(k >= 1 and n >= 1, "need k, n >= 1")
    lhs = Zt_index((2 * k,) * n, cfg)
    return _inst("eval_2k", {"k": k, "n": n}, lhs, closed_form_2k(k, n), cfg, tol)


def zetat_k_star(k: int, n: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    _need(k >= 2 and n >= 1, "need k >= 2, n >= 1")
    star = cfg.star()
    lhs = Zt_index((k,) * n, cfg)
    parts = [_zeta_times(ONE, (k,) * n, star)]
    for j in range(2, n + 1):
        sv, se = mzv_eval((k,) * (n - j), star)
        for m in range(1, j // 2 + 1):
            coef = T ** (j - 2 * m) * (T - 1) ** m
            for c in enumerate_indices(j, m):
                if min(c) >= 2:
                    v, e = mzv_eval(tuple(i * k for i in c), cfg)
                    parts.append(NumPolyTT.from_tpoly(coef, v * sv, e * abs(sv) + se * abs(v)))
    return _inst("zetat_k_star", {"k": k, "n": n}, lhs, _sum(parts), cfg, tol)


def restricted_sum(m: int, k: int, n: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    _need(m >= 1 and k >= n >= 1, "need m >= 1 and k >= n >= 1")
    lhs = _sum(Zt_index(tuple(2 * m * c for c in idx), cfg) for idx in enumerate_indices(k, n))
    pref = LAMBDA ** (2 * k * m) / 4 ** (k * m)
    coeffs: Dict[tuple, complex] = {}
    for i in range(1, n + 1):
        inner = 0j
        for j in range(0, k - i + 1):
            inner += binom(k - j, i) * _beta_sum(m, m * j) * _odd_sum(m, m * (k - j))
        c = inner * (-1) ** i * binom(k - i, k - n) * pref
        key = (n - i, 0)
        coeffs[key] = coeffs.get(key, 0) + c
    rhs = NumPolyTT(coeffs).real()
    return _inst("restricted_sum", {"m": m, "k": k, "n": n}, lhs, rhs, cfg, tol)


def restricted_sum_word(k: int, n: int, a: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    _need(k >= n >= 1 and a >= 2, "need k >= n >= 1 and a >= 2")
    lhs = _sum(Zt_index(tuple(a * c for c in idx), cfg) for idx in enumerate_indices(k, n))
    star = cfg.star()
    parts = []
    for j in range(k):
        p = ZERO
        for i in range(1, min(n, k - j) + 1):
            p = p + T ** (n - i) * ((-1) ** (k - i - j) * binom(k - i, k - n) * binom(k - j, i))
        if p:
            sv, se = mzv_eval((a,) * j, star)
            v, e = mzv_eval((a,) * (k - j), cfg)
            parts.append(NumPolyTT.from_tpoly(p, sv * v, se * abs(v) + e * abs(sv)))
    return _inst("restricted_sum_word", {"k": k, "n": n, "a": a}, lhs, _sum(parts), cfg, tol)


# -- extended double shuffle instances -------------------------------------------


def _el(w) -> Element:
    return w if isinstance(w, Element) else Element.word(w)


def eds_rho(w1: str, cfg: EvalConfig = DEFAULT, tol=None, deformed: bool = True, at=None) -> IdentityInstance:
    """Shuffle-regularized value minus ``rho`` of the stuffle-regularized one, at ``T = 0``.

    ``at`` substitutes a number for ``t`` before comparing; ``None`` compares every t-coefficient.
    """
    a = _el(w1)
    sh, st = ("tshuffle", "tstuffle") if deformed else ("shuffle", "stuffle")
    lhs = Z_reg_eval(a, sh, cfg).at_T0()
    rhs = rho_apply(Z_reg_eval(a, st, cfg), cfg).at_T0()
    params = {"w1": w1, "deformed": deformed}
    if at is not None:
        lhs, rhs = lhs.subs_t(at), rhs.subs_t(at)
        params["at"] = at
    return _inst("eds_rho", params, lhs, rhs, cfg, tol)


def eds_shuffle_T(w1: str, w0: str, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    """Shuffle-regularized value of ``w1 sh_t w0 - w1 st_t w0`` vanishes as a polynomial in T."""
    a, b = _el(w1), _el(w0)
    lhs = Z_reg_eval(tshuffle(a, b) - tstuffle(a, b), "tshuffle", cfg)
    return _inst("eds_shuffle_T", {"w1": w1, "w0": w0}, lhs, NumPolyTT(), cfg, tol)


def eds_reg(w1: str, w0: str, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    """``Z^t(reg_t(w1 sh_t w0 - w1 st_t w0)) = 0``."""
    a, b = _el(w1), _el(w0)
    lhs = Zt_eval(reg(tshuffle(a, b) - tstuffle(a, b), "tshuffle"), cfg)
    return _inst("eds_reg", {"w1": w1, "w0": w0}, lhs, NumPolyTT(), cfg, tol)


def eds_derivation(w0: str, n: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    lhs = Zt_eval(del_n_t(_el(w0), n), cfg)
    return _inst("eds_derivation", {"w0": w0, "n": n}, lhs, NumPolyTT(), cfg, tol)


def eds_sigma(w0: str, m: int, cfg: EvalConfig = DEFAULT, tol=None) -> IdentityInstance:
    a = _el(w0)
    diff = sigma_m_op(a, m, p=T) - sigma_m_op(a, m, barred=True, p=T)
    return _inst("eds_sigma", {"w0": w0, "m": m}, Zt_eval(diff, cfg), NumPolyTT(), cfg, tol)


ZETA_IDENTITIES = {
    "sum_formula": sum_formula,
    "symmetric_sum_zeta": symmetric_sum_zeta,
    "weighted_sum": weighted_sum,
    "weighted_sum_n2": weighted_sum_n2,
    "height_one_zeta": height_one_zeta,
    "eval_2k": eval_2k,
    "zetat_k_star": zetat_k_star,
    "restricted_sum": restricted_sum,
    "restricted_sum_word": restricted_sum_word,
    "eds_rho": eds_rho,
    "eds_shuffle_T": eds_shuffle_T,
    "eds_reg": eds_reg,
    "eds_derivation": eds_derivation,
    "eds_sigma": eds_sigma,
}


def zeta_identity(name: str, cfg: Optional[EvalConfig] = None, **params) -> IdentityInstance:
    try:
        builder = ZETA_IDENTITIES[name]
    except KeyError:
        raise KeyError(f"unknown zeta identity {name!r}") from None
    return builder(cfg=cfg or DEFAULT, **params)
