"""Interpolated multiple zeta values: the t-deformed Hoffman algebra, its maps,
regularization, numeric evaluation and a catalog of verifiable identities."""
from __future__ import annotations

from .algebra import DomainError, Element, shuffle, stuffle, tshuffle, tstuffle
from .exactnum import ONE, T, ZERO, Fraction, TPoly
from .numeric import EvalConfig, NumPolyTT, Z_eval, Zt_eval, Zt_index, mzv_eval

__all__ = [
    "DomainError",
    "Element",
    "EvalConfig",
    "Fraction",
    "NumPolyTT",
    "ONE",
    "T",
    "TPoly",
    "ZERO",
    "Z_eval",
    "Zt_eval",
    "Zt_index",
    "mzv_eval",
    "shuffle",
    "stuffle",
    "tshuffle",
    "tstuffle",
]
__version__ = "0.1.0"
