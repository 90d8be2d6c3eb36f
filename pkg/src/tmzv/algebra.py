"""Elements of the word algebra over Q[t] and its products.

An :class:`Element` is a finite Q[t]-linear combination of words. Products:

* concatenation (``a * b`` or :func:`concat`)
* shuffle and the deformed shuffle with parameter ``p`` (:func:`shuffle`, :func:`tshuffle`)
* stuffle and the deformed stuffle with parameter ``p`` (:func:`stuffle`, :func:`tstuffle`)

The deformed products expand each word pair once with ``p`` kept symbolic
(integer polynomials in ``p``); the expansion is then specialised to any
``p`` in Q[t]. The classical products have their own recursions.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Callable, Dict, Iterable, Mapping, Tuple

from .exactnum import ONE, T, TPoly, ZERO, as_tpoly
from .words import index_of_word, is_h0, is_h1, word_key, word_of_index

__all__ = [
    "Element",
    "DomainError",
    "concat",
    "shuffle",
    "tshuffle",
    "stuffle",
    "tstuffle",
    "power",
    "product",
    "PRODUCTS",
]

PRODUCTS = ("concat", "shuffle", "tshuffle", "stuffle", "tstuffle")


class DomainError(ValueError):
    """An operand lies outside the subalgebra an operation is defined on."""


Acc = Dict[str, Dict[int, Fraction]]


def _acc_add(acc: Acc, w: str, coeff: TPoly) -> None:
    d = acc.get(w)
    if d is None:
        acc[w] = dict(coeff._c)
        return
    for e, v in coeff._c.items():
        d[e] = d.get(e, 0) + v


def _acc_add_scalar(acc: Acc, w: str, coeff: TPoly, q) -> None:
    d = acc.get(w)
    if d is None:
        d = acc[w] = {}
    for e, v in coeff._c.items():
        d[e] = d.get(e, 0) + v * q


class Element:
    """Finite formal combination ``sum c_w w`` with ``c_w`` in Q[t], no zero terms."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[str, object] | None = None):
        t: Dict[str, TPoly] = {}
        if terms:
            for w, c in terms.items():
                if w.strip("xy"):
                    raise ValueError(f"not a word over {{x, y}}: {w!r}")
                c = as_tpoly(c)
                if c:
                    t[w] = t[w] + c if w in t else c
        self._t = {w: c for w, c in t.items() if c}

    @classmethod
    def _raw(cls, t: Dict[str, TPoly]) -> "Element":
        obj = cls.__new__(cls)
        obj._t = t
        return obj

    @classmethod
    def _from_acc(cls, acc: Acc) -> "Element":
        t = {}
        for w, d in acc.items():
            c = {e: v if type(v) is Fraction else Fraction(v) for e, v in d.items() if v}
            if c:
                t[w] = TPoly._raw(c)
        return cls._raw(t)

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Element":
        return cls._raw({"": ONE})

    @classmethod
    def word(cls, w: str, coeff=1) -> "Element":
        return cls({w: coeff})

    @classmethod
    def z(cls, *k: int) -> "Element":
        """The monomial ``z_{k1} ... z_{kn}``."""
        return cls._raw({word_of_index(k): ONE})

    @classmethod
    def sum(cls, elements: Iterable["Element"]) -> "Element":
        acc: Acc = {}
        for el in elements:
            for w, c in el._t.items():
                _acc_add(acc, w, c)
        return cls._from_acc(acc)

    # -- inspection --------------------------------------------------------
    @property
    def terms(self) -> Dict[str, TPoly]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def sorted_items(self):
        return sorted(self._t.items(), key=lambda kv: word_key(kv[0]))

    def support(self):
        return self._t.keys()

    def coefficient(self, w: str) -> TPoly:
        return self._t.get(w, ZERO)

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def in_h1(self) -> bool:
        return all(is_h1(w) for w in self._t)

    def in_h0(self) -> bool:
        return all(is_h0(w) for w in self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self._t == other._t
        if isinstance(other, (Rational, TPoly)):
            return self == Element({"": other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    # -- linear structure --------------------------------------------------
    def __add__(self, other) -> "Element":
        other = _as_element(other)
        acc: Acc = {}
        for w, c in self._t.items():
            _acc_add(acc, w, c)
        for w, c in other._t.items():
            _acc_add(acc, w, c)
        return Element._from_acc(acc)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._raw({w: -c for w, c in self._t.items()})

    def __sub__(self, other) -> "Element":
        return self + (-_as_element(other))

    def __rsub__(self, other) -> "Element":
        return _as_element(other) + (-self)

    def scale(self, c) -> "Element":
        c = as_tpoly(c)
        if not c:
            return Element.zero()
        if c == ONE:
            return self
        out = {}
        for w, v in self._t.items():
            pv = v * c
            if pv:
                out[w] = pv
        return Element._raw(out)

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return concat(self, other)
        if isinstance(other, (Rational, TPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (Rational, TPoly)):
            return self.scale(other)
        return NotImplemented

    def map_coeffs(self, f: Callable[[TPoly], TPoly]) -> "Element":
        return Element({w: f(c) for w, c in self._t.items()})

    def subs_t(self, q) -> "Element":
        """Substitute ``t -> q`` (a rational or a polynomial) in every coefficient."""
        q = as_tpoly(q)
        return self.map_coeffs(lambda c: c.compose(q))

    def linear_map(self, f: Callable[[str], "Element"]) -> "Element":
        """Extend the word map ``f`` Q[t]-linearly."""
        acc: Acc = {}
        for w, c in self._t.items():
            img = f(w)
            if c == ONE:
                for w2, c2 in img._t.items():
                    _acc_add(acc, w2, c2)
            elif c.is_constant():
                q = c[0]
                for w2, c2 in img._t.items():
                    _acc_add_scalar(acc, w2, c2, q)
            else:
                for w2, c2 in img._t.items():
                    _acc_add(acc, w2, c2 * c)
        return Element._from_acc(acc)

    # -- text / json -------------------------------------------------------
    def to_json(self):
        return [{"word": w, "coeff": c.to_json()} for w, c in self.sorted_items()]

    @classmethod
    def from_json(cls, obj) -> "Element":
        return cls({d["word"]: TPoly.from_json(d["coeff"]) for d in obj})

    def _format(self, word_fmt: Callable[[str], str]) -> str:
        if not self._t:
            return "0"
        items = sorted(self._t.items(), key=lambda kv: (len(kv[0]), -kv[0].count("y"), kv[0]))
        out = ""
        for i, (w, c) in enumerate(items):
            body = word_fmt(w)
            if len(c._c) == 1:
                (e, q), = c._c.items()
                neg = q < 0
                mag = TPoly._raw({e: abs(q)}).compact()
                if body == "1":
                    s = mag
                else:
                    s = body if mag == "1" else f"{mag} {body}"
            else:
                neg = False
                s = f"({c.compact()})" + ("" if body == "1" else f" {body}")
            if i == 0:
                out = ("-" if neg else "") + s
            else:
                out += (" - " if neg else " + ") + s
        return out

    def __str__(self) -> str:
        return self._format(lambda w: w or "1")

    def zstr(self) -> str:
        """Text form using ``z_k`` letters; requires every word to end in y."""
        if not self.in_h1():
            return str(self)
        return self._format(
            lambda w: " ".join(f"z{k}" for k in index_of_word(w)) if w else "1"
        )

    def __repr__(self) -> str:
        return f"Element({self})"


def _as_element(x) -> Element:
    if isinstance(x, Element):
        return x
    if isinstance(x, (Rational, TPoly)):
        return Element({"": x})
    raise TypeError(f"cannot interpret {x!r} as an Element")


# ---------------------------------------------------------------------------
# integer polynomials in the symbolic parameter p, as dense tuples (c0, c1, ...)

PP = Tuple[int, ...]


def _pp_mul(a: PP, b: PP) -> PP:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pp_trim(out)


def _pp_trim(c) -> PP:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pp_acc(out: Dict, key, c: PP) -> None:
    old = out.get(key)
    if old is None:
        out[key] = c
        return
    n = max(len(old), len(c))
    s = [(old[i] if i < len(old) else 0) + (c[i] if i < len(c) else 0) for i in range(n)]
    out[key] = _pp_trim(s)


_MINUS_P: PP = (0, -1)
_ONE_MINUS_2P: PP = (1, -2)
_P2_MINUS_P: PP = (0, -1, 1)


@lru_cache(maxsize=None)
def _tsh_words(u: str, v: str) -> Dict[str, PP]:
    """Deformed shuffle of two words, coefficients integer polynomials in p."""
    if not u:
        return {v: (1,)}
    if not v:
        return {u: (1,)}
    a, u1 = u[0], u[1:]
    b, v2 = v[0], v[1:]
    out: Dict[str, PP] = {}
    for w, c in _tsh_words(u1, v).items():
        _pp_acc(out, a + w, c)
    for w, c in _tsh_words(u, v2).items():
        _pp_acc(out, b + w, c)
    # rho(y) = p x replaces a final y that is consumed before the other word ends
    if not u1 and a == "y":
        _pp_acc(out, "x" + v, _MINUS_P)
    if not v2 and b == "y":
        _pp_acc(out, "x" + u, _MINUS_P)
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _sh_words(u: str, v: str) -> Dict[str, int]:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out: Dict[str, int] = {}
    a, b = u[0], v[0]
    for w, c in _sh_words(u[1:], v).items():
        out[a + w] = out.get(a + w, 0) + c
    for w, c in _sh_words(u, v[1:]).items():
        out[b + w] = out.get(b + w, 0) + c
    return out


@lru_cache(maxsize=None)
def _tst_idx(u: Tuple[int, ...], v: Tuple[int, ...]) -> Dict[Tuple[int, ...], PP]:
    """Deformed stuffle on index tuples, coefficients integer polynomials in p."""
    if not u:
        return {v: (1,)}
    if not v:
        return {u: (1,)}
    k, u1 = u[0], u[1:]
    l, v2 = v[0], v[1:]
    out: Dict[Tuple[int, ...], PP] = {}
    for w, c in _tst_idx(u1, v).items():
        _pp_acc(out, (k,) + w, c)
    for w, c in _tst_idx(u, v2).items():
        _pp_acc(out, (l,) + w, c)
    inner = _tst_idx(u1, v2)
    for w, c in inner.items():
        _pp_acc(out, (k + l,) + w, _pp_mul(c, _ONE_MINUS_2P))
    if u1 or v2:
        # x^(k+l) in front of a nonempty index word merges into its first letter
        for w, c in inner.items():
            _pp_acc(out, (k + l + w[0],) + w[1:], _pp_mul(c, _P2_MINUS_P))
    return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def _st_idx(u: Tuple[int, ...], v: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    k, l = u[0], v[0]
    out: Dict[Tuple[int, ...], int] = {}
    for w, c in _st_idx(u[1:], v).items():
        key = (k,) + w
        out[key] = out.get(key, 0) + c
    for w, c in _st_idx(u, v[1:]).items():
        key = (l,) + w
        out[key] = out.get(key, 0) + c
    for w, c in _st_idx(u[1:], v[1:]).items():
        key = (k + l,) + w
        out[key] = out.get(key, 0) + c
    return out


@lru_cache(maxsize=None)
def _woi(k: Tuple[int, ...]) -> str:
    return word_of_index(k)


@lru_cache(maxsize=None)
def _iow(w: str) -> Tuple[int, ...]:
    return index_of_word(w)


class _PEval:
    """Specialises integer polynomials in p at a fixed p in Q[t], with caching."""

    def __init__(self, p: TPoly):
        self.p = p
        self.const = p.is_constant()
        self.powers = [ONE]
        self.cache: Dict[PP, object] = {}

    def __call__(self, c: PP):
        r = self.cache.get(c)
        if r is not None:
            return r
        while len(self.powers) < len(c):
            self.powers.append(self.powers[-1] * self.p)
        if self.const:
            q = self.p[0]
            r = sum((ci * q**i for i, ci in enumerate(c) if ci), Fraction(0))
        else:
            r = ZERO
            for i, ci in enumerate(c):
                if ci:
                    r = r + self.powers[i] * ci
            if r.is_constant():
                r = r[0]
        self.cache[c] = r
        return r


def _bilinear(a: Element, b: Element, expand, convert_word=None, convert_back=None, peval=None) -> Element:
    acc: Acc = {}
    for u, cu in a._t.items():
        ku = convert_word(u) if convert_word else u
        for v, cv in b._t.items():
            kv = convert_word(v) if convert_word else v
            cuv = cu * cv
            cuv_const = cuv.is_constant()
            q0 = cuv[0]
            for w, c in expand(ku, kv).items():
                if convert_back:
                    w = convert_back(w)
                s = peval(c) if peval else c
                if isinstance(s, TPoly):
                    _acc_add(acc, w, cuv * s)
                elif cuv_const:
                    d = acc.get(w)
                    if d is None:
                        d = acc[w] = {}
                    d[0] = d.get(0, 0) + q0 * s
                else:
                    _acc_add_scalar(acc, w, cuv, s)
    return Element._from_acc(acc)


def _require_h1(*els: Element, what: str) -> None:
    for el in els:
        for w in el._t:
            if not is_h1(w):
                raise DomainError(f"{what} needs operands whose words end in y; got {w!r}")


def concat(a: Element, b: Element) -> Element:
    acc: Acc = {}
    for u, cu in a._t.items():
        for v, cv in b._t.items():
            _acc_add(acc, u + v, cu * cv)
    return Element._from_acc(acc)


def shuffle(a: Element, b: Element) -> Element:
    return _bilinear(a, b, _sh_words)


def tshuffle(a: Element, b: Element, p=T) -> Element:
    """Deformed shuffle with ``rho(y) = p x``; ``p = 0`` is the shuffle."""
    return _bilinear(a, b, _tsh_words, peval=_PEval(as_tpoly(p)))


def stuffle(a: Element, b: Element) -> Element:
    _require_h1(a, b, what="stuffle")
    return _bilinear(a, b, _st_idx, _iow, _woi)


def tstuffle(a: Element, b: Element, p=T) -> Element:
    """Deformed stuffle with ``(1-2p)`` merge and ``(p^2-p)`` double-merge terms."""
    _require_h1(a, b, what="stuffle")
    return _bilinear(a, b, _tst_idx, _iow, _woi, peval=_PEval(as_tpoly(p)))


def product(name: str, a: Element, b: Element, p=T) -> Element:
    if name == "concat":
        return concat(a, b)
    if name == "shuffle":
        return shuffle(a, b)
    if name == "tshuffle":
        return tshuffle(a, b, p)
    if name == "stuffle":
        return stuffle(a, b)
    if name == "tstuffle":
        return tstuffle(a, b, p)
    raise ValueError(f"unknown product {name!r}; expected one of {PRODUCTS}")


def power(a: Element, n: int, product_name: str = "concat", p=T) -> Element:
    """``n``-fold product of ``a`` with itself; ``n = 0`` gives the unit."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if product_name in ("stuffle", "tstuffle"):
        _require_h1(a, what="stuffle")
    result = Element.one()
    for _ in range(n):
        result = product(product_name, result, a, p)
    return result
