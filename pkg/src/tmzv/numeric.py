"""Floating-point evaluation of multiple zeta values and their interpolations.

Nested sums are truncated at ``M`` and computed by a prefix-sum recursion in
numpy, so an index of depth ``n`` costs ``O(n M)``. Depth one uses an
Euler-Maclaurin tail instead. Error estimates compare the value at ``M`` with
the value at ``M/2``; they are heuristics, not bounds.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .algebra import DomainError, Element
from .exactnum import Fraction, TPoly, bernoulli, binom
from .maps import S_map
from .regularize import decompose
from .words import Index, index_of_word, is_admissible, is_h0

__all__ = [
    "EvalConfig",
    "NumPolyTT",
    "mzv_eval",
    "zeta_single",
    "Z_eval",
    "Zt_eval",
    "Zt_index",
    "zetat_by_contractions",
    "Z_reg_eval",
    "rho_apply",
    "closed_form_2k",
    "zeta_2k_power",
    "zeta_star_2k_power",
    "euler_zeta_even",
    "LAMBDA",
    "rho_root",
    "beta_even",
]

LAMBDA = 2j * math.pi


@dataclass(frozen=True)
class EvalConfig:
    """Truncation settings. ``strict=False`` evaluates star sums (non-strict inequalities)."""

    M: int = 100_000
    M_single: int = 1000
    strict: bool = True

    def __post_init__(self):
        if self.M < 10 or self.M_single < 10:
            raise ValueError("M and M_single must be >= 10")

    def star(self) -> "EvalConfig":
        return EvalConfig(self.M, self.M_single, False)


DEFAULT = EvalConfig()


# -- numeric polynomials in t and T ---------------------------------------------


class NumPolyTT:
    """Polynomial in ``t`` and ``T`` with float/complex coefficients and an error estimate."""

    __slots__ = ("coeffs", "err")

    def __init__(self, coeffs: Dict[Tuple[int, int], complex] | None = None, err: float = 0.0):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}
        self.err = float(err)

    @classmethod
    def const(cls, c, err: float = 0.0) -> "NumPolyTT":
        return cls({(0, 0): c}, err)

    @classmethod
    def from_tpoly(cls, p: TPoly, scale=1.0, err: float = 0.0) -> "NumPolyTT":
        return cls({(e, 0): float(v) * scale for e, v in p.items()}, err)

    def __add__(self, other: "NumPolyTT") -> "NumPolyTT":
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, 0) + v
        return NumPolyTT(c, self.err + other.err)

    def __neg__(self) -> "NumPolyTT":
        return NumPolyTT({k: -v for k, v in self.coeffs.items()}, self.err)

    def __sub__(self, other: "NumPolyTT") -> "NumPolyTT":
        return self + (-other)

    def scale(self, c) -> "NumPolyTT":
        return NumPolyTT({k: v * c for k, v in self.coeffs.items()}, self.err * abs(c))

    def __mul__(self, other) -> "NumPolyTT":
        if isinstance(other, NumPolyTT):
            c: Dict[Tuple[int, int], complex] = {}
            for (i1, j1), v1 in self.coeffs.items():
                for (i2, j2), v2 in other.coeffs.items():
                    k = (i1 + i2, j1 + j2)
                    c[k] = c.get(k, 0) + v1 * v2
            err = self.err * other.max_abs() + other.err * self.max_abs() + self.err * other.err
            return NumPolyTT(c, err)
        if isinstance(other, TPoly):
            return self * NumPolyTT.from_tpoly(other)
        return self.scale(other)

    __rmul__ = __mul__

    def max_abs(self) -> float:
        return max((abs(v) for v in self.coeffs.values()), default=0.0)

    def t_degree(self) -> int:
        return max((i for i, _ in self.coeffs), default=0)

    def T_degree(self) -> int:
        return max((j for _, j in self.coeffs), default=0)

    def at_T0(self) -> "NumPolyTT":
        return NumPolyTT({k: v for k, v in self.coeffs.items() if k[1] == 0}, self.err)

    def subs_t(self, c) -> "NumPolyTT":
        out: Dict[Tuple[int, int], complex] = {}
        for (i, j), v in self.coeffs.items():
            out[(0, j)] = out.get((0, j), 0) + v * c**i
        return NumPolyTT(out, self.err * max(1.0, abs(c)) ** self.t_degree())

    def coeff(self, i: int, j: int = 0):
        return self.coeffs.get((i, j), 0.0)

    def real(self, tol: float = 1e-8) -> "NumPolyTT":
        """Drop imaginary parts, complaining if any exceeds ``tol``."""
        out = {}
        for k, v in self.coeffs.items():
            if isinstance(v, complex):
                if abs(v.imag) > tol:
                    raise ArithmeticError(f"imaginary part {v.imag:.3e} at {k} does not cancel")
                v = v.real
            out[k] = v
        return NumPolyTT(out, self.err)

    def to_json(self):
        terms = []
        for (i, j), v in sorted(self.coeffs.items()):
            v = complex(v)
            terms.append({"t": i, "T": j, "re": v.real, "im": v.imag})
        return {"terms": terms, "err": self.err}

    @classmethod
    def from_json(cls, obj) -> "NumPolyTT":
        c = {}
        for d in obj["terms"]:
            v = complex(d["re"], d["im"])
            c[(d["t"], d["T"])] = v if v.imag else v.real
        return cls(c, obj.get("err", 0.0))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), v in sorted(self.coeffs.items()):
            mono = "".join(s for s in (f"t^{i}" if i > 1 else "t" if i else "",
                                      f"T^{j}" if j > 1 else "T" if j else "") if s)
            val = f"{v.real:.12g}" if not isinstance(v, complex) or not v.imag else f"({v:.12g})"
            parts.append(f"{val}*{mono}" if mono else val)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"NumPolyTT({self}, err={self.err:.2e})"


# -- nested sums ---------------------------------------------------------------


def _nested(k: Index, M: int, strict: bool) -> Tuple[float, float]:
    m = np.arange(1, M + 1, dtype=np.float64)
    f = m ** (-float(k[-1]))
    for kk in reversed(k[:-1]):
        c = np.cumsum(f)
        if strict:
            c = np.concatenate(([0.0], c[:-1]))
        f = c * m ** (-float(kk))
    half = M // 2
    full = math.fsum(f)
    return full, math.fsum(f[:half])


def _em_single(k: int, M: int) -> float:
    m = np.arange(M, 0, -1, dtype=np.float64)
    s = math.fsum(m ** (-float(k)))
    return s + M ** (1.0 - k) / (k - 1) - 0.5 * M ** (-float(k)) + k * M ** (-k - 1.0) / 12


@lru_cache(maxsize=None)
def zeta_single(k: int, M_single: int = 1000) -> Tuple[float, float]:
    """Riemann zeta at an integer ``k >= 2`` with an Euler-Maclaurin tail."""
    if k < 2:
        raise DomainError(f"zeta({k}) diverges")
    v = _em_single(k, M_single)
    return v, 2 * abs(v - _em_single(k, max(10, M_single // 2)))


@lru_cache(maxsize=None)
def _mzv_cached(k: Index, M: int, M_single: int, strict: bool) -> Tuple[float, float]:
    if len(k) == 1:
        return zeta_single(k[0], M_single)
    full, half = _nested(k, M, strict)
    return full, 2 * abs(full - half)


def mzv_eval(k: Sequence[int], cfg: EvalConfig = DEFAULT) -> Tuple[float, float]:
    """``(value, error_estimate)`` of the (star, if ``cfg.strict`` is false) MZV at ``k``."""
    k = tuple(k)
    if not k:
        return 1.0, 0.0
    if not is_admissible(k):
        raise DomainError(f"index {k} is not admissible (first part must be >= 2)")
    return _mzv_cached(k, cfg.M, cfg.M_single, cfg.strict)


def Z_eval(a: Element, cfg: EvalConfig = DEFAULT) -> NumPolyTT:
    """Apply ``z_k1...z_kn -> zeta(k1,...,kn)`` linearly; ``t`` stays a variable."""
    out: Dict[Tuple[int, int], float] = {}
    err = 0.0
    for w, c in a.items():
        if not is_h0(w):
            raise DomainError(f"Z is defined on words starting with x and ending in y; got {w!r}")
        v, e = mzv_eval(index_of_word(w), cfg)
        for i, q in c.items():
            fq = float(q)
            out[(i, 0)] = out.get((i, 0), 0.0) + fq * v
            err += abs(fq) * e
    return NumPolyTT(out, err)


def Zt_eval(a: Element, cfg: EvalConfig = DEFAULT) -> NumPolyTT:
    """Interpolated values: ``Z o S_t``."""
    return Z_eval(S_map(a), cfg)


def Zt_index(k: Sequence[int], cfg: EvalConfig = DEFAULT) -> NumPolyTT:
    return Zt_eval(Element.z(*k), cfg)


def zetat_by_contractions(k: Sequence[int], cfg: EvalConfig = DEFAULT) -> NumPolyTT:
    """Interpolated value straight from the definition: sum over comma/plus patterns."""
    k = tuple(k)
    if not is_admissible(k):
        raise DomainError(f"index {k} is not admissible")
    n = len(k)
    out: Dict[Tuple[int, int], float] = {}
    err = 0.0
    for pattern in iproduct((False, True), repeat=n - 1):
        parts = [k[0]]
        for plus, kk in zip(pattern, k[1:]):
            if plus:
                parts[-1] += kk
            else:
                parts.append(kk)
        v, e = mzv_eval(parts, cfg)
        key = (n - len(parts), 0)
        out[key] = out.get(key, 0.0) + v
        err += e
    return NumPolyTT(out, err)


def Z_reg_eval(a: Element, product: str = "shuffle", cfg: EvalConfig = DEFAULT) -> NumPolyTT:
    """Regularized value as a polynomial in ``T`` (and ``t``).

    For ``shuffle``/``stuffle`` the components are evaluated with ``Z``; for the
    deformed products with ``Z o S_t``.
    """
    dec = decompose(a, product)
    ev = Zt_eval if product.startswith("t") else Z_eval
    out = NumPolyTT()
    for j, comp in enumerate(dec.components):
        if comp:
            part = ev(comp, cfg)
            out = out + NumPolyTT({(i, j): v for (i, _), v in part.coeffs.items()}, part.err)
    return out


def _A_series(order: int, cfg: EvalConfig) -> Tuple[List[float], float]:
    """Coefficients of ``exp(sum_{n>=2} (-1)^n zeta(n) u^n / n)`` up to ``u^order``."""
    g = [0.0] * (order + 1)
    err = 0.0
    for n in range(2, order + 1):
        v, e = zeta_single(n, cfg.M_single)
        g[n] = (-1) ** n * v / n
        err += e
    # exp of a power series: a' = g' a
    a = [0.0] * (order + 1)
    a[0] = 1.0
    for m in range(1, order + 1):
        a[m] = sum(j * g[j] * a[m - j] for j in range(1, m + 1)) / m
    return a, err


def rho_apply(q: NumPolyTT, cfg: EvalConfig = DEFAULT) -> NumPolyTT:
    """The operator with ``e^{Tu} -> A(u) e^{Tu}``, applied ``t``-coefficientwise."""
    deg = q.T_degree()
    alpha, aerr = _A_series(deg + 1, cfg)
    out: Dict[Tuple[int, int], complex] = {}
    for (i, n), c in q.coeffs.items():
        for j in range(n + 1):
            if alpha[j]:
                f = math.perm(n, j) * alpha[j]
                key = (i, n - j)
                out[key] = out.get(key, 0) + f * c
    return NumPolyTT(out, q.err * (1 + sum(abs(x) for x in alpha)) + aerr * q.max_abs())


# -- closed forms ---------------------------------------------------------------


def rho_root(k: int, power: int) -> complex:
    """``exp(pi i / k) ** power`` computed from the reduced angle."""
    r = power % (2 * k)
    return cmath.exp(1j * math.pi * r / k)


def beta_even(m: int) -> Fraction:
    """``B_{2m} (2 - 4^m)``."""
    return bernoulli(2 * m) * (2 - 4**m)


def euler_zeta_even(n: int) -> float:
    """``-B_{2n} lambda^{2n} / (2 (2n)!)`` with ``lambda = 2 pi i``."""
    v = -float(bernoulli(2 * n)) / (2 * math.factorial(2 * n)) * LAMBDA ** (2 * n)
    return v.real


def _weak_comps(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_comps(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _odd_sum(k: int, total: int) -> complex:
    """``sum_{n_0+..+n_{k-1}=total} rho_k^{2 sum l n_l} / prod (2 n_l + 1)!``."""
    s = 0j
    for ns in _weak_comps(total, k):
        w = Fraction(1)
        for n in ns:
            w /= math.factorial(2 * n + 1)
        s += float(w) * rho_root(k, 2 * sum(l * n for l, n in enumerate(ns)))
    return s


@lru_cache(maxsize=None)
def _beta_sum(k: int, total: int) -> complex:
    """``sum_{m_0+..+m_{k-1}=total} rho_k^{2 sum l m_l} prod beta_{2m_l} / (2 m_l)!``."""
    s = 0j
    for ms in _weak_comps(total, k):
        w = Fraction(1)
        for m in ms:
            w *= beta_even(m) / math.factorial(2 * m)
        if w:
            s += float(w) * rho_root(k, 2 * sum(l * m for l, m in enumerate(ms)))
    return s


def zeta_2k_power(k: int, n: int) -> float:
    """``zeta({2k}^n)`` in closed form."""
    v = (-1) ** n * _odd_sum(k, n * k) * LAMBDA ** (2 * n * k) / 4 ** (n * k)
    return _real(v)


def zeta_star_2k_power(k: int, n: int) -> float:
    """``zeta*({2k}^n)`` in closed form."""
    v = _beta_sum(k, n * k) * LAMBDA ** (2 * n * k) / 4 ** (n * k)
    return _real(v)


def _real(v: complex, tol: float = 1e-8) -> float:
    scale = max(1.0, abs(v))
    if abs(v.imag) > tol * scale:
        raise ArithmeticError(f"imaginary part {v.imag:.3e} does not cancel")
    return v.real


def closed_form_2k(k: int, n: int) -> NumPolyTT:
    """``zeta^t({2k}^n)`` as a polynomial in ``t`` from Bernoulli numbers and roots of unity."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    pref = LAMBDA ** (2 * n * k) / 4 ** (n * k)
    out: Dict[Tuple[int, int], complex] = {}
    for i in range(n + 1):
        j = n - i
        # the (n_l) and (m_l) sums factor, and so does the root-of-unity weight
        inner = _odd_sum(k, i * k) * _beta_sum(k, j * k)
        c = inner * pref
        # (t-1)^i t^j
        for e in range(i + 1):
            key = (j + e, 0)
            out[key] = out.get(key, 0) + c * binom(i, e) * (-1) ** (i - e)
    return NumPolyTT(out).real()
