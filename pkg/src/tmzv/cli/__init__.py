"""Command-line surface and its expression language."""
from __future__ import annotations

from .expr import ParseError, check_domain, evaluate, parse, parse_poly, run_expr, to_text
from .main import main

__all__ = ["ParseError", "check_domain", "evaluate", "main", "parse", "parse_poly", "run_expr", "to_text"]
