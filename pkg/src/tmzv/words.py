"""Words over ``{x, y}``, indices and the conversion ``z_k = x^(k-1) y``.

A word is a plain ``str`` over the letters ``"x"`` and ``"y"``; the empty string
is the unit. An index is a ``tuple`` of positive integers.
"""
from __future__ import annotations

import enum
from itertools import combinations, product
from typing import Iterator, List, Sequence, Tuple

__all__ = [
    "Index",
    "WordClass",
    "word_of_index",
    "index_of_word",
    "classify",
    "enumerate_indices",
    "is_h1",
    "is_h0",
    "d_x",
    "d_y",
    "word_key",
    "weight",
    "depth",
    "height",
    "is_admissible",
    "parse_index",
    "format_index",
    "words_of_length",
]

Index = Tuple[int, ...]


class WordClass(enum.Enum):
    H0 = "H0"
    H1_ONLY = "H1_only"
    HT_ONLY = "Ht_only"


def _check_word(w: str) -> None:
    if w.strip("xy"):
        raise ValueError(f"not a word over {{x, y}}: {w!r}")


def word_of_index(k: Sequence[int]) -> str:
    """``(k1, ..., kn) -> x^(k1-1) y ... x^(kn-1) y``."""
    parts = []
    for kk in k:
        if kk < 1:
            raise ValueError(f"index parts must be positive, got {tuple(k)}")
        parts.append("x" * (kk - 1) + "y")
    return "".join(parts)


def index_of_word(w: str) -> Index:
    _check_word(w)
    if w and w[-1] != "y":
        raise ValueError(f"word {w!r} ends in x and has no index form")
    out = []
    run = 0
    for a in w:
        if a == "x":
            run += 1
        else:
            out.append(run + 1)
            run = 0
    return tuple(out)


def is_h1(w: str) -> bool:
    return not w or w[-1] == "y"


def is_h0(w: str) -> bool:
    return not w or (w[0] == "x" and w[-1] == "y")


def classify(w: str) -> WordClass:
    _check_word(w)
    if is_h0(w):
        return WordClass.H0
    if is_h1(w):
        return WordClass.H1_ONLY
    return WordClass.HT_ONLY


def d_x(w: str) -> int:
    return w.count("x")


def d_y(w: str) -> int:
    return w.count("y")


def word_key(w: str):
    """Canonical order: by length, then lexicographic with x < y."""
    return (len(w), w)


def weight(k: Sequence[int]) -> int:
    return sum(k)


def depth(k: Sequence[int]) -> int:
    return len(k)


def height(k: Sequence[int]) -> int:
    return sum(1 for kk in k if kk >= 2)


def is_admissible(k: Sequence[int]) -> bool:
    return len(k) > 0 and k[0] >= 2


def enumerate_indices(k: int, n: int, admissible: bool = False) -> List[Index]:
    """All compositions of ``k`` into ``n`` positive parts, lexicographically.

    With ``admissible=True`` only those with first part ``>= 2``.
    """
    if n < 1 or k < n:
        return []
    out = []
    # cut points c1 < ... < c_{n-1} in 1..k-1; lexicographic on cuts == on parts
    for cuts in combinations(range(1, k), n - 1):
        bounds = (0,) + cuts + (k,)
        idx = tuple(bounds[i + 1] - bounds[i] for i in range(n))
        if admissible and idx[0] < 2:
            continue
        out.append(idx)
    return out


def words_of_length(n: int) -> Iterator[str]:
    for letters in product("xy", repeat=n):
        yield "".join(letters)


def parse_index(s: str) -> Index:
    s = s.strip()
    if not s:
        return ()
    try:
        k = tuple(int(p) for p in s.split(","))
    except ValueError:
        raise ValueError(f"bad index {s!r}; expected a comma list like 2,1") from None
    if any(kk < 1 for kk in k):
        raise ValueError(f"index parts must be positive: {s!r}")
    return k


def format_index(k: Sequence[int]) -> str:
    return ",".join(str(kk) for kk in k)
