"""Polynomial decomposition of words ending in y over the convergent words.

Every element ``a`` of the words-ending-in-y subalgebra can be written uniquely
as ``sum_i w_i (.) y^(.)i`` with each ``w_i`` supported on words that start with
x (or the unit), for ``(.)`` any of the four commutative products. The constant
term ``w_0`` is the regularization of ``a``.

Classical products are handled by induction on the number of leading y's: for
``w = y^j v`` put ``u = y^(j-1) v``; then ``y (.) u = j w + R`` where every word
of ``R`` has fewer leading y's, so ``w = (y (.) u - R) / j``. The deformed
products are obtained by conjugating with ``S_p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Tuple

from .algebra import DomainError, Element, power, product, shuffle, stuffle
from .exactnum import Fraction, T, as_tpoly
from .maps import S_map

__all__ = ["YDecomposition", "decompose", "reg", "reg_sum_word", "REG_PRODUCTS"]

REG_PRODUCTS = ("shuffle", "stuffle", "tshuffle", "tstuffle")


@dataclass(frozen=True)
class YDecomposition:
    """Components ``w_0, w_1, ...`` with ``a = sum_i w_i (.) y^(.)i``."""

    components: Tuple[Element, ...]
    product: str
    p: object = None

    def reconstruct(self) -> Element:
        y = Element.word("y")
        parts = []
        for i, c in enumerate(self.components):
            if c:
                parts.append(product(self.product, c, power(y, i, self.product, self._p()), self._p()))
        return Element.sum(parts)

    def _p(self):
        return T if self.p is None else self.p

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Element:
        return self.components[i] if i < len(self.components) else Element.zero()


def _add_lists(a: List[Element], b: List[Element], scale_b=1) -> List[Element]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else Element.zero()
        yy = b[i] if i < len(b) else Element.zero()
        out.append(x + yy.scale(scale_b) if yy else x)
    return out


def _trim(comps: List[Element]) -> Tuple[Element, ...]:
    while comps and not comps[-1]:
        comps.pop()
    return tuple(comps)


@lru_cache(maxsize=None)
def _decompose_word(w: str, prod: str) -> Tuple[Element, ...]:
    j = len(w) - len(w.lstrip("y"))
    if j == 0:
        return (Element.word(w),)
    u = w[1:]
    mul = shuffle if prod == "shuffle" else stuffle
    rest = mul(Element.word("y"), Element.word(u)) - Element.word(w, j)
    shifted = [Element.zero()] + list(_decompose_word(u, prod))
    comps = _add_lists(shifted, list(_decompose_element(rest, prod)), -1)
    return _trim([c.scale(Fraction(1, j)) for c in comps])


def _decompose_element(a: Element, prod: str) -> Tuple[Element, ...]:
    acc: List[Element] = []
    for w, c in a.items():
        comps = [x.scale(c) for x in _decompose_word(w, prod)]
        acc = _add_lists(acc, comps)
    return _trim(acc)


def decompose(a: Element, product: str = "shuffle", p=T) -> YDecomposition:
    """Expand ``a`` as a polynomial in ``y`` over the convergent words."""
    if product not in REG_PRODUCTS:
        raise ValueError(f"unknown product {product!r}; expected one of {REG_PRODUCTS}")
    if not a.in_h1():
        bad = next(w for w, _ in a.items() if w and w[-1] != "y")
        raise DomainError(f"regularization needs words ending in y; got {bad!r}")
    if product in ("shuffle", "stuffle"):
        return YDecomposition(_decompose_element(a, product), product)
    p = as_tpoly(p)
    base = product[1:]
    comps = _decompose_element(S_map(a, p), base)
    return YDecomposition(tuple(S_map(c, -p) for c in comps), product, p)


def reg(a: Element, product: str = "shuffle", p=T) -> Element:
    """Constant term of :func:`decompose`."""
    return decompose(a, product, p)[0]


def letter_count_sum(k: int, n: int) -> Element:
    """Sum of all words with ``k`` x's and ``n`` y's that end in y."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    L = k + n - 1
    terms = {}
    for xs in combinations(range(L), k):
        letters = ["y"] * L
        for i in xs:
            letters[i] = "x"
        terms["".join(letters) + "y"] = 1
    return Element(terms)


def reg_sum_word(k: int, n: int, product: str = "shuffle", p=T) -> Element:
    """Regularization of :func:`letter_count_sum`."""
    if k < 1 or n < 1:
        raise ValueError("need k, n >= 1")
    return reg(letter_count_sum(k, n), product, p)
