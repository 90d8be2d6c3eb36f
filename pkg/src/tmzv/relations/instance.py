"""A materialized identity and its verification report."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..algebra import Element

__all__ = ["IdentityInstance", "CheckResult"]


@dataclass
class CheckResult:
    name: str
    params: Dict[str, Any]
    level: str
    passed: bool
    residual: Any  # "exact" or a float
    tol: Optional[float] = None
    wall_ms: Optional[float] = None

    def to_json(self, with_time: bool = False) -> Dict[str, Any]:
        out = {
            "name": self.name,
            "params": self.params,
            "level": self.level,
            "pass": self.passed,
            "max_abs_residual": self.residual,
        }
        if with_time and self.wall_ms is not None:
            out["wall_ms"] = round(self.wall_ms, 3)
        return out


@dataclass
class IdentityInstance:
    """Two sides of an identity. Word-level sides compare exactly; zeta-level ones up to ``tol``."""

    name: str
    params: Dict[str, Any]
    level: str
    lhs: Any
    rhs: Any
    truncation: Optional[Tuple[int, int]] = None
    tol: Optional[float] = None
    built_ms: float = field(default=0.0, repr=False)

    def residual(self):
        if self.level == "word":
            return self.lhs - self.rhs
        return self.lhs - self.rhs

    def max_abs_residual(self) -> float:
        if self.level == "word":
            raise TypeError("word identities have no numeric residual")
        return (self.lhs - self.rhs).max_abs()

    def check(self) -> CheckResult:
        start = time.perf_counter()
        if self.level == "word":
            ok = isinstance(self.lhs, Element) and self.lhs == self.rhs
            res: Any = "exact" if ok else f"{len(self.lhs - self.rhs)} differing words"
        else:
            r = self.max_abs_residual()
            ok = r < self.tol
            res = r
        wall = (time.perf_counter() - start) * 1000 + self.built_ms
        return CheckResult(self.name, self.params, self.level, ok, res, self.tol, wall)
