"""``tmzv`` command line: eval, expand, check, suite.

Exit codes: 0 when everything passes, 1 on a numeric failure, 2 on unknown
commands or identities and on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from ..algebra import DomainError, Element
from ..exactnum import TPoly
from ..maps import S_map
from ..numeric import EvalConfig, Zt_index
from ..relations import catalog, level_of, run_catalog, run_one
from ..words import format_index, index_of_word, is_admissible, parse_index
from .expr import ParseError, run_expr

__all__ = ["main", "build_parser", "symbolic_zt", "parse_param_value"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tmzv", description="Interpolated multiple zeta values: algebra, maps and identity checks.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")

    e = sub.add_parser("eval", help="evaluate zeta^t at an index")
    e.add_argument("index", help="comma list such as 2,1")
    g = e.add_mutually_exclusive_group()
    g.add_argument("--t", dest="t_value", help="substitute a rational value for t")
    g.add_argument("--symbolic", action="store_true", help="print the expansion into zeta values")
    e.add_argument("--terms", type=int, default=100_000, help="truncation M of the nested sums")
    e.add_argument("--json", action="store_true")

    x = sub.add_parser("expand", help="expand an algebra expression")
    x.add_argument("expr", help='for example "z(1) tst z(1)"')
    x.add_argument("--words", action="store_true", help="print words over x, y instead of z letters")
    x.add_argument("--json", action="store_true")

    c = sub.add_parser("check", help="verify one named identity; parameters as --name value")
    c.add_argument("name")
    c.add_argument("--terms", type=int, default=100_000)
    c.add_argument("--json", action="store_true")

    s = sub.add_parser("suite", help="verify the whole catalog")
    s.add_argument("--weight-cap", type=int, default=6)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--terms", type=int, default=100_000)
    s.add_argument("--level", choices=("word", "zeta", "all"), default="all")
    s.add_argument("--json", action="store_true")
    s.add_argument("--timings", action="store_true", help="include wall_ms (output no longer byte-stable)")
    return p


def _cfg(terms: int) -> EvalConfig:
    return EvalConfig(M=terms)


# -- eval -------------------------------------------------------------------------------


def symbolic_zt(k: Sequence[int]) -> str:
    """``zeta^t(k)`` written as a t-combination of zeta values, e.g. ``zeta(2,1) + t*zeta(3)``."""
    img = S_map(Element.z(*k))
    parts = []
    for w, c in sorted(img.items(), key=lambda kv: (min(kv[1]._c), -len(index_of_word(kv[0])), kv[0])):
        z = f"zeta({format_index(index_of_word(w))})"
        if c == TPoly.const(1):
            parts.append(("+", z))
        elif len(c._c) == 1:
            (e, q), = c._c.items()
            mag = TPoly.monomial(e, abs(q)).compact()
            parts.append(("-" if q < 0 else "+", z if mag == "1" else f"{mag}*{z}"))
        else:
            parts.append(("+", f"({c.compact()})*{z}"))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _cmd_eval(args) -> int:
    try:
        k = parse_index(args.index)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not k or not is_admissible(k):
        print(f"error: index {args.index} is not admissible (first part must be >= 2)", file=sys.stderr)
        return EXIT_USAGE
    if args.symbolic:
        text = symbolic_zt(k)
        print(json.dumps({"index": list(k), "symbolic": text}) if args.json else text)
        return EXIT_OK
    val = Zt_index(k, _cfg(args.terms))
    if args.t_value is not None:
        try:
            q = Fraction(args.t_value)
        except ValueError:
            print(f"error: bad rational {args.t_value!r}", file=sys.stderr)
            return EXIT_USAGE
        val = val.subs_t(q)
    if args.json:
        print(json.dumps(val.to_json()))
    else:
        print(f"{val}  (err <= {val.err:.1e})")
    return EXIT_OK


# -- expand -----------------------------------------------------------------------------


def _cmd_expand(args) -> int:
    try:
        a = run_expr(args.expr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(a.to_json()))
    else:
        print(str(a) if args.words else a.zstr())
    return EXIT_OK


# -- check ------------------------------------------------------------------------------


def parse_param_value(s: str) -> Any:
    """``4`` -> 4, ``2,1`` -> [2, 1], ``true`` -> True; anything else (words, forms) stays text."""
    low = s.lower()
    if low in ("true", "false"):
        return low == "true"
    try:
        return int(s)
    except ValueError:
        pass
    if "," in s:
        try:
            return [int(v) for v in s.split(",") if v.strip()]
        except ValueError:
            pass
    return s


def _parse_params(extra: List[str]) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    i = 0
    while i < len(extra):
        key = extra[i]
        if not key.startswith("--") or i + 1 >= len(extra):
            raise ValueError(f"parameters come as --name value pairs; got {key!r}")
        params[key[2:].replace("-", "_")] = parse_param_value(extra[i + 1])
        i += 2
    return params


def _result_line(r) -> str:
    params = " ".join(f"{k}={_fmt_param(v)}" for k, v in r.params.items())
    res = r.residual if isinstance(r.residual, str) else f"{r.residual:.3e}"
    tol = "" if r.tol is None else f" tol={r.tol:.0e}"
    return f"{'PASS' if r.passed else 'FAIL'}  {r.name:<20} {params:<32} residual={res}{tol}"


def _fmt_param(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


def _cmd_check(args, extra: List[str]) -> int:
    try:
        level_of(args.name)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    try:
        params = _parse_params(extra)
        r = run_one(args.name, params, _cfg(args.terms))
    except (ValueError, TypeError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(r.to_json(), sort_keys=True) if args.json else _result_line(r))
    return EXIT_OK if r.passed else EXIT_FAIL


# -- suite ------------------------------------------------------------------------------


def _cmd_suite(args) -> int:
    levels = ("word", "zeta") if args.level == "all" else (args.level,)
    try:
        entries = catalog(args.weight_cap, levels)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    results = run_catalog(entries, _cfg(args.terms), jobs=max(1, args.jobs))
    failed = [r for r in results if not r.passed]
    if args.json:
        doc = {
            "weight_cap": args.weight_cap,
            "terms": args.terms,
            "results": [r.to_json(with_time=args.timings) for r in results],
            "summary": {"total": len(results), "passed": len(results) - len(failed), "failed": len(failed)},
        }
        print(json.dumps(doc, sort_keys=True, indent=1))
    else:
        for r in results:
            line = _result_line(r)
            if args.timings:
                line += f"  {r.wall_ms:.1f} ms"
            print(line)
        print(f"{len(results) - len(failed)}/{len(results)} passed")
        if failed:
            print("failures:")
            for r in failed:
                print("  " + _result_line(r))
    return EXIT_FAIL if failed else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    if extra and args.command != "check":
        print(f"error: unrecognized arguments: {' '.join(extra)}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "expand":
        return _cmd_expand(args)
    if args.command == "check":
        return _cmd_check(args, extra)
    return _cmd_suite(args)


if __name__ == "__main__":
    sys.exit(main())
