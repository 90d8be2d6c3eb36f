"""Exact identities between elements of the word algebra.

Each builder returns an :class:`IdentityInstance` whose two sides are built by
independent routes: one side usually by the products and maps of the engine,
the other from an explicit combinatorial expansion.
"""
from __future__ import annotations

from itertools import permutations
from typing import Callable, Dict, List

from ..algebra import Element, power, shuffle, stuffle, tshuffle, tstuffle
from ..exactnum import ONE, T, TPoly, ZERO, binom
from ..maps import S_map, del_n_t, delta_v_trunc, sigma_m_op
from ..regularize import letter_count_sum, reg
from ..words import enumerate_indices
from .coefficients import C_tilde, C_tilde_trunc, b_k, build_N, c_Pi, coeff_d, partitions
from .instance import IdentityInstance

__all__ = ["word_identity", "WORD_IDENTITIES"]

z = Element.z
ONE_EL = Element.one()


def _zsum(indices, coeff: Callable[[tuple], object] = lambda k: 1) -> Element:
    parts = []
    for k in indices:
        c = coeff(k)
        if c:
            parts.append(z(*k).scale(c))
    return Element.sum(parts)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _index(k) -> tuple:
    k = (int(k),) if isinstance(k, int) else tuple(int(v) for v in k)
    _need(len(k) > 0 and all(v >= 1 for v in k), f"bad index {k}")
    return k


# -- symmetric sums, Hoffman, sum formula -------------------------------


def symmetric_sum(k) -> IdentityInstance:
    k = _index(k)
    n = len(k)
    _need(n <= 6, "depth must be <= 6")
    lhs = Element.sum(z(*(k[i] for i in perm)) for perm in permutations(range(n)))
    parts = []
    for blocks in partitions(n):
        prod = ONE_EL
        for b in blocks:
            prod = tstuffle(prod, z(sum(k[i - 1] for i in b)))
        parts.append(prod.scale(c_Pi(blocks)))
    return IdentityInstance("symmetric_sum", {"k": list(k)}, "word", lhs, Element.sum(parts))


def hoffman(k) -> IdentityInstance:
    k = _index(k)
    n = len(k)
    w = z(*k)
    lhs = del_n_t(w, 1)
    parts = []
    for i in range(n):
        pre, post = k[:i], k[i + 1:]
        for j in range(2, k[i] + 1):
            parts.append(z(*pre, j, k[i] + 1 - j, *post))
        delta = 1 if i == n - 1 else 0
        parts.append(z(*pre, k[i] + 1, *post).scale(-(ONE + T * (k[i] + delta - 2))))
    for i in range(n - 1):
        parts.append(z(*k[:i], k[i] + k[i + 1] + 1, *k[i + 2:]).scale(T - T * T))
    return IdentityInstance("hoffman", {"k": list(k)}, "word", lhs, Element.sum(parts))


def sum_formula_word(k: int, n: int) -> IdentityInstance:
    _need(k > n >= 1, "need k > n >= 1")
    base = z(k - n + 1)
    lhs = sigma_m_op(base, n - 1, barred=True, p=T) - sigma_m_op(base, n - 1, p=T)
    x, y = Element.word("x"), Element.word("y")
    parts = [z(k).scale(-1)]
    for i in range(1, n + 1):
        mid = shuffle(power(x, k - i - 1), power(y, i - 1))
        parts.append((x * mid * y).scale((-T) ** (n - i) * binom(k - i - 1, n - i)))
    return IdentityInstance("sum_formula_word", {"k": k, "n": n}, "word", lhs, Element.sum(parts))


def shuffle_reg_sum(k: int, n: int) -> IdentityInstance:
    _need(k >= 1 and n >= 1, "need k, n >= 1")
    lhs = reg(letter_count_sum(k, n), "tshuffle")
    parts = []
    for i in range(1, n + 1):
        idx = [c for c in enumerate_indices(k + n, i) if c[0] >= k + 1]
        parts.append(_zsum(idx, lambda c: binom(c[0], k + 1)).scale(T ** (n - i) * (-1) ** (i - 1)))
    return IdentityInstance("shuffle_reg_sum", {"k": k, "n": n}, "word", lhs, Element.sum(parts))


# -- height one ---------------------------------------------------------


def _kernel_coeffs(K: int, L: int) -> Dict[tuple, Element]:
    """Coefficients ``G[a, b]`` of ``u^a v^b`` in the rational kernel, ``a <= K, b <= L``.

    The kernel is ``(1 - xu - xv + x((1-t)x + y)uv)^(-1) x (1 - txv)^(-1) y``;
    the first factor obeys ``B = 1 + X B`` with ``X`` the bracketed series.
    """
    x = Element.word("x")
    xq = x * (x.scale(ONE - T) + Element.word("y"))
    B: Dict[tuple, Element] = {}
    for a in range(K + 1):
        for b in range(L + 1):
            if a == 0 and b == 0:
                B[a, b] = ONE_EL
                continue
            parts = []
            if a:
                parts.append(x * B[a - 1, b])
            if b:
                parts.append(x * B[a, b - 1])
            if a and b:
                parts.append((xq * B[a - 1, b - 1]).scale(-1))
            B[a, b] = Element.sum(parts)
    G = {}
    for a in range(K + 1):
        for b in range(L + 1):
            G[a, b] = Element.sum(
                (B[a, b - i] * Element.word("x" * (i + 1) + "y")).scale(T**i) for i in range(b + 1)
            )
    return G


def height_one(k: int, l: int) -> IdentityInstance:
    _need(k >= 1 and l >= 1, "need k, l >= 1")
    G = _kernel_coeffs(k - 1, l - 1)
    parts = []
    for d in range(l):
        src = G[k - 1, l - 1 - d]
        if src:
            parts.append(delta_v_trunc(src, d, p=T)[d])
    lhs = Element.sum(parts)
    rhs = Element.word("x" * k + "y" * l)
    return IdentityInstance("height_one", {"k": k, "l": l}, "word", lhs, rhs, truncation=(k - 1, l - 1))


# -- weighted sums ------------------------------------------------------


def _pairs(k: int, n: int):
    """``(l, (k_1..k_{n-1}))`` with ``l + sum = k``, ``k_1 >= 2``."""
    for l in range(1, k):
        for rest in enumerate_indices(k - l, n - 1, admissible=True):
            yield l, rest


def weighted_stuffle(k: int, n: int) -> IdentityInstance:
    _need(k > n >= 2, "need k > n >= 2")
    lhs = Element.sum(tstuffle(z(l), z(*r)) for l, r in _pairs(k, n))
    I = enumerate_indices(k, n)
    parts = [
        _zsum(enumerate_indices(k, n, True)).scale(n),
        _zsum(c for c in I if c[0] == 1),
        _zsum(c for c in I if c[1] == 1).scale(-1),
        _zsum(enumerate_indices(k, n - 1, True)).scale((ONE - 2 * T) * (k - n)),
    ]
    if n > 2:
        parts.append(_zsum(enumerate_indices(k, n - 2, True), b_k).scale(T * T - T))
    return IdentityInstance("weighted_stuffle", {"k": k, "n": n}, "word", lhs, Element.sum(parts))


def tshuffle_1_n(l: int, k) -> IdentityInstance:
    k = _index(k)
    _need(l >= 1, "need l >= 1")
    n = len(k) + 1
    lhs = tshuffle(z(l), z(*k))
    parts = []
    for i in range(1, n):
        total = l + sum(k[:i])
        tail = k[i:]
        for alpha in enumerate_indices(total, i + 1):
            c = binom(alpha[i - 1] - 1, k[i - 1] - alpha[i])
            for j in range(i - 1):
                c *= binom(alpha[j] - 1, k[j] - 1)
            if c:
                parts.append(z(*alpha, *tail).scale(c))
                parts.append(z(*alpha[: i - 1], alpha[i - 1] + alpha[i], *tail).scale(-T * c))
    for alpha in enumerate_indices(l + sum(k), n):
        c = 1
        for j in range(n - 1):
            c *= binom(alpha[j] - 1, k[j] - 1)
        if c:
            parts.append(z(*alpha).scale(c))
            parts.append(z(*alpha[: n - 2], alpha[n - 2] + alpha[n - 1]).scale(-T * c))
    return IdentityInstance("tshuffle_1_n", {"l": l, "k": list(k)}, "word", lhs, Element.sum(parts))


def weighted_shuffle(k: int, n: int) -> IdentityInstance:
    _need(k > n >= 2, "need k > n >= 2")
    lhs = Element.sum(tshuffle(z(l), z(*r)) for l, r in _pairs(k, n))
    parts = [
        _zsum(c for c in enumerate_indices(k, n) if c[1] == 1).scale(-1),
        _zsum(enumerate_indices(k, n - 1, True)).scale(T),
        _zsum(enumerate_indices(k, n), C_tilde_trunc),
        _zsum(enumerate_indices(k, n - 1), lambda c: C_tilde(c) - C_tilde_trunc(c)).scale(-T),
    ]
    return IdentityInstance("weighted_shuffle", {"k": k, "n": n}, "word", lhs, Element.sum(parts))


# -- powers of z_k and S-maps -------------------------------------------


def _S1(a: Element) -> Element:
    return S_map(a, 1)


def dm_sum(a: int, b: int, n: int) -> IdentityInstance:
    _need(a >= 1 and b >= 1 and n >= 1, "need a, b, n >= 1")
    za = z(a)
    lhs = Element.sum(
        tstuffle(z(b + (m - 1) * a), power(za, n - m)).scale(coeff_d(m)) for m in range(1, n + 1)
    )
    rhs = Element.sum(power(za, m) * z(b) * power(za, n - 1 - m) for m in range(n))
    return IdentityInstance("dm_sum", {"a": a, "b": b, "n": n}, "word", lhs, rhs)


def St_power(k: int, n: int) -> IdentityInstance:
    _need(k >= 1 and n >= 1, "need k, n >= 1")
    zk = z(k)
    lhs = S_map(power(zk, n))
    rhs = Element.sum(
        stuffle(power(zk, i), _S1(power(zk, n - i))).scale((ONE - T) ** i * T ** (n - i))
        for i in range(n + 1)
    )
    return IdentityInstance("St_power", {"k": k, "n": n}, "word", lhs, rhs)


def St_extension(k) -> IdentityInstance:
    k = _index(k)
    lhs = S_map(z(*k))
    rhs = Element.sum(
        (z(sum(k[:i])) * S_map(z(*k[i:]))).scale(T ** (i - 1)) for i in range(1, len(k) + 1)
    )
    return IdentityInstance("St_extension", {"k": list(k)}, "word", lhs, rhs)


def S_ast_inverse(k: int, n: int) -> IdentityInstance:
    _need(k >= 1 and n >= 1, "need k, n >= 1")
    zk = z(k)
    lhs = Element.sum(
        stuffle(power(zk, j), _S1(power(zk, n - j))).scale((-1) ** j) for j in range(n + 1)
    )
    return IdentityInstance("S_ast_inverse", {"k": k, "n": n}, "word", lhs, Element.zero())


def St_S1mt(k: int, n: int) -> IdentityInstance:
    _need(k >= 1 and n >= 1, "need k, n >= 1")
    zk = z(k)
    lhs = Element.sum(
        stuffle(S_map(power(zk, j)), S_map(power(zk, n - j), ONE - T)).scale((-1) ** (n - j))
        for j in range(n + 1)
    )
    return IdentityInstance("St_S1mt", {"k": k, "n": n}, "word", lhs, Element.zero())


def S1m2t_tast(k: int, n: int) -> IdentityInstance:
    _need(k >= 1 and n >= 1, "need k, n >= 1")
    zk = z(k)
    lhs = Element.sum(
        tstuffle(S_map(power(zk, j), ONE - 2 * T), power(zk, n - j)).scale((-1) ** (n - j))
        for j in range(n + 1)
    )
    return IdentityInstance("S1m2t_tast", {"k": k, "n": n}, "word", lhs, Element.zero())


def _geometric_zk(k: int, n: int) -> Element:
    """Coefficient of ``u^n`` in ``1 / (1 - sum_{i>=2} t^(i-2) (t-1) z_{ik} u^i)``."""
    coef = [Element.one()] + [Element.zero()] * n
    for m in range(1, n + 1):
        parts = []
        for i in range(2, m + 1):
            parts.append((z(i * k) * coef[m - i]).scale(T ** (i - 2) * (T - 1)))
        coef[m] = Element.sum(parts)
    return coef[n]


def St_ast_gen(k: int, n: int) -> IdentityInstance:
    _need(k >= 1 and n >= 0, "need k >= 1, n >= 0")
    zk = z(k)
    lhs = Element.sum(
        stuffle(power(zk, j), S_map(power(zk, n - j))).scale((-1) ** j) for j in range(n + 1)
    )
    return IdentityInstance("St_ast_gen", {"k": k, "n": n}, "word", lhs, _geometric_zk(k, n))


def St_power_new(k: int, n: int) -> IdentityInstance:
    _need(k >= 1 and n >= 0, "need k >= 1, n >= 0")
    zk = z(k)
    lhs = S_map(power(zk, n))
    parts = [_S1(power(zk, n))]
    for j in range(2, n + 1):
        for m in range(1, j // 2 + 1):
            inner = Element.sum(z(*(i * k for i in c)) for c in enumerate_indices(j, m) if min(c) >= 2)
            parts.append(stuffle(inner, _S1(power(zk, n - j))).scale(T ** (j - 2 * m) * (T - 1) ** m))
    return IdentityInstance("St_power_new", {"k": k, "n": n}, "word", lhs, Element.sum(parts))


# -- restricted sums ----------------------------------------------------


def Nkn_first(k: int, n: int, a: int) -> IdentityInstance:
    _need(k >= n >= 1 and a >= 1, "need k >= n >= 1 and a >= 1")
    lhs = S_map(build_N(k, n, a))
    rhs = Element.sum(
        build_N(k, i, a).scale(T ** (n - i) * binom(k - i, k - n)) for i in range(1, n + 1)
    )
    return IdentityInstance("Nkn_first", {"k": k, "n": n, "a": a}, "word", lhs, rhs)


def _nkn_second_rhs(k: int, n: int, a: int) -> Element:
    za = z(a)
    parts = []
    for j in range(k):
        c = ZERO
        for i in range(1, min(n, k - j) + 1):
            c = c + T ** (n - i) * ((-1) ** (k - i - j) * binom(k - i, k - n) * binom(k - j, i))
        if c:
            parts.append(stuffle(_S1(power(za, j)), power(za, k - j)).scale(c))
    return Element.sum(parts)


def _nkn_third_rhs(k: int, n: int, a: int) -> Element:
    za = z(a)
    parts = []
    for j1 in range(k + 1):
        j2 = k - j1
        c = ZERO
        for i1 in range(0, min(j1, n) + 1):
            i2 = n - i1
            if 0 <= i2 <= j2:
                c = c + (ONE - T) ** i1 * T**i2 * ((-1) ** (j1 - i1) * binom(j1, i1) * binom(j2, i2))
        if c:
            parts.append(stuffle(power(za, j1), _S1(power(za, j2))).scale(c))
    return Element.sum(parts)


def Nkn_second(k: int, n: int, a: int) -> IdentityInstance:
    _need(k >= n >= 1 and a >= 1, "need k >= n >= 1 and a >= 1")
    return IdentityInstance(
        "Nkn_second", {"k": k, "n": n, "a": a}, "word", S_map(build_N(k, n, a)), _nkn_second_rhs(k, n, a)
    )


def Nkn_third(k: int, n: int, a: int) -> IdentityInstance:
    _need(k >= n >= 1 and a >= 1, "need k >= n >= 1 and a >= 1")
    return IdentityInstance(
        "Nkn_third", {"k": k, "n": n, "a": a}, "word", S_map(build_N(k, n, a)), _nkn_third_rhs(k, n, a)
    )


def Nkn_second_third(k: int, n: int, a: int) -> IdentityInstance:
    """The two expanded right-hand sides agree term by term."""
    _need(k >= n >= 1 and a >= 1, "need k >= n >= 1 and a >= 1")
    return IdentityInstance(
        "Nkn_second_third", {"k": k, "n": n, "a": a}, "word",
        _nkn_second_rhs(k, n, a), _nkn_third_rhs(k, n, a),
    )


def _vpoly_mul(p: List[TPoly], q: List[TPoly]) -> List[TPoly]:
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = out[i + j] + a * b
    return out


def _vpoly_pow(p: List[TPoly], e: int) -> List[TPoly]:
    out = [ONE]
    for _ in range(e):
        out = _vpoly_mul(out, p)
    return out


def St_F(k: int, n: int, a: int) -> IdentityInstance:
    """Coefficient of ``u^k v^n`` in ``S_t(F(u, v)) = E((v - tv - 1)u) * H((1 + tv)u)``."""
    _need(k >= 0 and n >= 0 and a >= 1, "need k, n >= 0 and a >= 1")
    if k == 0 and n == 0:
        lhs = Element.one()
    elif k >= n >= 1:
        lhs = S_map(build_N(k, n, a))
    else:
        lhs = Element.zero()
    za = z(a)
    e_arg = [-ONE, ONE - T]  # -1 + (1 - t) v
    h_arg = [ONE, T]  # 1 + t v
    parts = []
    for j1 in range(k + 1):
        j2 = k - j1
        vp = _vpoly_mul(_vpoly_pow(e_arg, j1), _vpoly_pow(h_arg, j2))
        c = vp[n] if n < len(vp) else ZERO
        if c:
            parts.append(stuffle(power(za, j1), _S1(power(za, j2))).scale(c))
    return IdentityInstance("St_F", {"k": k, "n": n, "a": a}, "word", lhs, Element.sum(parts), truncation=(k, n))


WORD_IDENTITIES = {
    "symmetric_sum": symmetric_sum,
    "hoffman": hoffman,
    "sum_formula_word": sum_formula_word,
    "shuffle_reg_sum": shuffle_reg_sum,
    "height_one": height_one,
    "weighted_stuffle": weighted_stuffle,
    "tshuffle_1_n": tshuffle_1_n,
    "weighted_shuffle": weighted_shuffle,
    "dm_sum": dm_sum,
    "St_power": St_power,
    "St_extension": St_extension,
    "S_ast_inverse": S_ast_inverse,
    "St_S1mt": St_S1mt,
    "S1m2t_tast": S1m2t_tast,
    "St_ast_gen": St_ast_gen,
    "St_power_new": St_power_new,
    "Nkn_first": Nkn_first,
    "Nkn_second": Nkn_second,
    "Nkn_third": Nkn_third,
    "Nkn_second_third": Nkn_second_third,
    "St_F": St_F,
}


def word_identity(name: str, **params) -> IdentityInstance:
    try:
        builder = WORD_IDENTITIES[name]
    except KeyError:
        raise KeyError(f"unknown word identity {name!r}") from None
    return builder(**params)
