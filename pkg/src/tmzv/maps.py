"""Linear maps on the word algebra.

``sigma_auto`` substitutes ``y -> p x + y`` in every letter; ``S_map`` does so in
all letters but the last; ``S_tilde`` only in the last. ``tau_dual`` reverses a
word and swaps the letters. ``del_n`` is the derivation with
``x -> x(x+y)^(n-1)y`` and ``y -> -x(x+y)^(n-1)y``; the deformed versions are
obtained by conjugating with ``S_map``.

The parameter ``p`` is any polynomial in ``t`` (or a rational constant).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct
from typing import Dict, List, Tuple

from .algebra import PP, DomainError, Element, _PEval, _bilinear
from .exactnum import Fraction, T, as_tpoly
from .words import index_of_word, is_h1, word_of_index

__all__ = [
    "sigma_auto",
    "S_map",
    "S_tilde",
    "tau_dual",
    "del_n",
    "del_n_t",
    "sigma_m_op",
    "delta_v_trunc",
]


def _specialise(expansions, a: Element, p) -> Element:
    """Apply a word map whose images have coefficients in Z[p], at a given ``p``."""
    peval = _PEval(as_tpoly(p))
    return _bilinear(a, Element.one(), lambda u, _v: expansions(u), peval=peval)


@lru_cache(maxsize=None)
def _sigma_words(w: str) -> Dict[str, PP]:
    if not w:
        return {"": (1,)}
    rest = _sigma_words(w[1:])
    if w[0] == "x":
        return {"x" + u: c for u, c in rest.items()}
    out: Dict[str, PP] = {}
    for u, c in rest.items():
        out["y" + u] = c
        out["x" + u] = (0,) + c
    return out


@lru_cache(maxsize=None)
def _S_words(w: str) -> Dict[str, PP]:
    if not w:
        return {"": (1,)}
    return {u + w[-1]: c for u, c in _sigma_words(w[:-1]).items()}


@lru_cache(maxsize=None)
def _S_tilde_words(w: str) -> Dict[str, PP]:
    if not w or w[-1] == "x":
        return {w: (1,)}
    return {w: (1,), w[:-1] + "x": (0, 1)}


def sigma_auto(a: Element, p=T) -> Element:
    """Letterwise substitution ``y -> p x + y`` (an automorphism for concatenation)."""
    return _specialise(_sigma_words, a, p)


def S_map(a: Element, p=T) -> Element:
    """``S_p(w a) = sigma_p(w) a``, fixing the unit."""
    return _specialise(_S_words, a, p)


def S_tilde(a: Element, p=T) -> Element:
    """``S~_p(w a) = w sigma_p(a)``, fixing the unit."""
    return _specialise(_S_tilde_words, a, p)


@lru_cache(maxsize=None)
def _tau_word(w: str) -> str:
    return w[::-1].translate(str.maketrans("xy", "yx"))


def tau_dual(a: Element) -> Element:
    """Anti-automorphism with ``x <-> y``."""
    return Element._raw({_tau_word(w): c for w, c in a.items()})


@lru_cache(maxsize=None)
def _del_letter_image(n: int) -> Tuple[str, ...]:
    # x (x+y)^(n-1) y, as a list of words with coefficient 1 each
    return tuple("x" + "".join(mid) + "y" for mid in iproduct("xy", repeat=n - 1))


@lru_cache(maxsize=None)
def _del_words(w: str, n: int) -> Element:
    acc: Dict[str, int] = {}
    img = _del_letter_image(n)
    for i, a in enumerate(w):
        sign = 1 if a == "x" else -1
        pre, post = w[:i], w[i + 1:]
        for m in img:
            key = pre + m + post
            acc[key] = acc.get(key, 0) + sign
    return Element({u: c for u, c in acc.items() if c})


def del_n(a: Element, n: int) -> Element:
    """The derivation with ``x -> x(x+y)^(n-1)y``, ``y -> -x(x+y)^(n-1)y``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return a.linear_map(lambda w: _del_words(w, n))


def del_n_t(a: Element, n: int, p=T) -> Element:
    """Deformed derivation ``S_{-p} o del_n o S_p``."""
    p = as_tpoly(p)
    return S_map(del_n(S_map(a, p), n), -p)


@lru_cache(maxsize=None)
def _sigma_m_word(w: str, m: int) -> Element:
    k = index_of_word(w)
    n = len(k)
    if n == 0:
        return Element.one() if m == 0 else Element.zero()
    acc: Dict[str, int] = {}
    for cuts in _weak_compositions(m, n):
        key = word_of_index(tuple(kk + e for kk, e in zip(k, cuts)))
        acc[key] = acc.get(key, 0) + 1
    return Element(acc)


def _weak_compositions(m: int, n: int):
    if n == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in _weak_compositions(m - first, n - 1):
            yield (first,) + rest


def _sigma_m_classical(a: Element, m: int) -> Element:
    for w in a.support():
        if not is_h1(w):
            raise DomainError(f"sigma_m acts on words ending in y; got {w!r}")
    return a.linear_map(lambda w: _sigma_m_word(w, m))


def sigma_m_op(a: Element, m: int, barred: bool = False, p=None) -> Element:
    """Weight-raising map ``sigma_m``; ``barred`` conjugates by ``tau``.

    With ``p`` given, the result is further conjugated: ``S_{-p} o (.) o S_p``.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if p is not None:
        p = as_tpoly(p)
        a = S_map(a, p)
    if barred:
        out = tau_dual(_sigma_m_classical(tau_dual(a), m))
    else:
        out = _sigma_m_classical(a, m)
    if p is not None:
        out = S_map(out, -p)
    return out


def delta_v_trunc(a: Element, L: int, p=None) -> List[Element]:
    """Graded components ``[D_0(a), ..., D_L(a)]`` of ``exp(sum_n del_n v^n / n)``.

    Component ``d`` is the coefficient of ``v^d``. With ``p`` given, the
    deformed version ``S_{-p} o Delta_v o S_p`` is returned.
    """
    if L < 0:
        raise ValueError("L must be >= 0")
    if p is not None:
        p = as_tpoly(p)
        a = S_map(a, p)
    zero = Element.zero()
    result = [a] + [zero] * L
    current = [a] + [zero] * L
    for r in range(1, L + 1):
        nxt = [zero] * (L + 1)
        for d in range(1, L + 1):
            parts = []
            for n in range(1, d + 1):
                src = current[d - n]
                if src:
                    parts.append(del_n(src, n).scale(Fraction(1, n * r)))
            if parts:
                nxt[d] = Element.sum(parts)
        current = nxt
        result = [result[d] + current[d] for d in range(L + 1)]
    if p is not None:
        result = [S_map(c, -p) for c in result]
    return result
