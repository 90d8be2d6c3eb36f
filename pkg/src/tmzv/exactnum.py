"""Exact arithmetic: rationals, sparse polynomials in ``t``, binomials, Bernoulli numbers.

Rationals are :class:`fractions.Fraction`. :class:`TPoly` is an immutable sparse
univariate polynomial over the rationals, stored as ``{exponent: coefficient}``
with no zero coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import Dict, Iterable, Mapping, Union

__all__ = [
    "Fraction",
    "TPoly",
    "T",
    "ONE",
    "ZERO",
    "bernoulli",
    "binom",
    "tpoly_eval",
    "as_tpoly",
    "rational_to_str",
    "rational_from_str",
]

Scalar = Union[int, Fraction]


def rational_to_str(q: Scalar) -> str:
    return str(Fraction(q))


def rational_from_str(s: str) -> Fraction:
    # tolerate the unicode minus sign that shows up in copied formulas
    return Fraction(s.strip().replace("−", "-"))


class TPoly:
    """Polynomial in ``t`` with rational coefficients.

    >>> p = TPoly({1: 2, 0: -1})
    >>> p
    TPoly(2t - 1)
    >>> p * p
    TPoly(4t^2 - 4t + 1)
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c: Dict[int, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                if v:
                    c[e] = v if type(v) is Fraction else Fraction(v)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, Fraction]) -> "TPoly":
        # caller guarantees: Fraction values, no zeros
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, q: Scalar) -> "TPoly":
        return cls({0: q}) if q else ZERO

    @classmethod
    def monomial(cls, e: int, q: Scalar = 1) -> "TPoly":
        return cls({e: q})

    @classmethod
    def from_list(cls, coeffs: Iterable[Scalar]) -> "TPoly":
        """Build from ascending coefficients ``[c0, c1, ...]``."""
        return cls(dict(enumerate(coeffs)))

    # -- inspection --------------------------------------------------------
    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    @property
    def degree(self) -> float | int:
        """Largest exponent; ``-inf`` for the zero polynomial."""
        return max(self._c) if self._c else float("-inf")

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self._c == other._c
        if isinstance(other, Rational):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "TPoly":
        other = as_tpoly(other)
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return TPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> "TPoly":
        return self + (-as_tpoly(other))

    def __rsub__(self, other) -> "TPoly":
        return as_tpoly(other) + (-self)

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, Rational):
            if not other:
                return ZERO
            return TPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self._c or not other._c:
            return ZERO
        c: Dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return TPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, q: Scalar) -> "TPoly":
        if not isinstance(q, Rational):
            return NotImplemented
        q = Fraction(q)
        return TPoly._raw({e: v / q for e, v in self._c.items()})

    def __pow__(self, n: int) -> "TPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def compose(self, q: "TPoly") -> "TPoly":
        """Substitute ``t -> q``."""
        if not self._c:
            return ZERO
        result = ZERO
        for e in range(max(self._c), -1, -1):
            result = result * q + self._c.get(e, 0)
        return result

    def __call__(self, c):
        return tpoly_eval(self, c)

    # -- text / json -------------------------------------------------------
    def to_json(self) -> Dict[str, str]:
        return {str(e): rational_to_str(v) for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "TPoly":
        return cls({int(e): rational_from_str(v) for e, v in obj.items()})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(("-" if v < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def compact(self) -> str:
        """Ascending form without spaces, e.g. ``1-2t`` or ``-t+t^2``."""
        if not self._c:
            return "0"
        out = ""
        for e in sorted(self._c):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not out:
                out = ("-" if v < 0 else "") + body
            else:
                out += ("-" if v < 0 else "+") + body
        return out

    def __repr__(self) -> str:
        return f"TPoly({self})"


ZERO = TPoly._raw({})
ONE = TPoly._raw({0: Fraction(1)})
T = TPoly._raw({1: Fraction(1)})


def as_tpoly(x) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, Rational):
        return TPoly.const(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial in t")


def tpoly_eval(p: TPoly, c: Scalar):
    """Horner evaluation of ``p`` at ``t = c``; exact when ``c`` is rational."""
    if p.is_zero():
        return Fraction(0) if isinstance(c, Rational) else 0.0
    acc = 0
    for e in range(int(p.degree), -1, -1):
        acc = acc * c + p[e]
    return acc


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n`` (and for ``n < 0``)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    B = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum((comb(m + 1, j) * B[j] for j in range(m)), Fraction(0))
        B.append(-s / (m + 1))
    return tuple(B)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2`` (generating function u/(e^u-1))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    # grow the cached table in blocks so repeated calls stay cheap
    size = max(32, 1 << (n.bit_length()))
    return _bernoulli_table(size)[n]
