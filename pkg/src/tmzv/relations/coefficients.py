"""Coefficient families: c_m, d_m, set partitions, the weights C and C~, b_k, N_{k,n}."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Sequence, Tuple

from ..algebra import Element
from ..exactnum import ONE, T, TPoly, binom
from ..words import enumerate_indices

__all__ = [
    "coeff_c",
    "coeff_d",
    "partitions",
    "c_Pi",
    "weight_C",
    "C_value",
    "C_tilde",
    "C_tilde_trunc",
    "b_k",
    "build_N",
    "SetPartition",
]

SetPartition = Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=None)
def coeff_d(m: int) -> TPoly:
    """``t^m - (t-1)^m``; zero for ``m = 0``."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return T**m - (T - 1) ** m


@lru_cache(maxsize=None)
def coeff_c(m: int) -> TPoly:
    """``(m-1)! (t^m - (t-1)^m)``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return coeff_d(m) * math.factorial(m - 1)


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[SetPartition, ...]:
    """All set partitions of ``{1..n}``, blocks sorted by their least element.

    >>> len(partitions(3))
    5
    """
    if n < 1 or n > 10:
        raise ValueError("partitions supports 1 <= n <= 10")

    def grow(i: int, blocks: List[List[int]]):
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from grow(i + 1, blocks)
        blocks.pop()

    # put the single-block partition first, finest last
    return tuple(sorted(grow(1, []), key=len))


def c_Pi(blocks: Sequence[Sequence[int]]) -> TPoly:
    out = ONE
    for b in blocks:
        out = out * coeff_c(len(b))
    return out


def C_value(k: Sequence[int]) -> int:
    """``sum_j 2^(k_1+...+k_j-j) + 2^(wt-n)``; the empty index gives 1."""
    if not k:
        return 1
    s, tot = 0, 0
    for j, kk in enumerate(k, 1):
        tot += kk
        s += 2 ** (tot - j)
    return s + 2 ** (tot - len(k))


def C_tilde(k: Sequence[int]) -> int:
    return C_value(k) - C_value(k[1:])


def C_tilde_trunc(k: Sequence[int]) -> int:
    """``C~`` of ``k`` with its last entry removed; for depth one this is the weight."""
    if len(k) == 1:
        return k[0]
    return C_tilde(k[:-1])


def weight_C(k: Sequence[int]) -> Tuple[int, int]:
    if not k:
        raise ValueError("index must be nonempty")
    return C_value(k), C_tilde(k)


def b_k(k: Sequence[int]) -> int:
    if not k:
        return 0
    return binom(k[0] - 2, 2) + sum(binom(kk - 1, 2) for kk in k[1:])


def build_N(k: int, n: int, a: int) -> Element:
    """``sum z_{a k_1} ... z_{a k_n}`` over compositions of ``k`` into ``n`` parts."""
    if not (k >= n >= 1) or a < 1:
        raise ValueError("need k >= n >= 1 and a >= 1")
    return Element.sum(Element.z(*(a * kk for kk in idx)) for idx in enumerate_indices(k, n))
