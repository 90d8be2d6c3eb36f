"""The verification catalog: every named identity at parameters bounded by a weight cap."""
from __future__ import annotations

import time
from dataclasses import replace
from typing import Any, Dict, List, Optional, Tuple

from ..numeric import DEFAULT, EvalConfig
from ..words import enumerate_indices, is_h0, is_h1, words_of_length
from .instance import CheckResult
from .word_identities import WORD_IDENTITIES, word_identity
from .zeta_identities import ZETA_IDENTITIES, zeta_identity

__all__ = ["catalog", "run_one", "run_catalog", "Entry", "MAX_ZETA_WEIGHT"]

Entry = Tuple[str, str, Dict[str, Any]]  # (level, name, params)

# nested sums past this weight converge too slowly for the fixed tolerances
MAX_ZETA_WEIGHT = 6
EDS_WEIGHT = 5
# instances with depth-four tails get a longer truncation; recorded in their params
DEEP_M = 1_000_000


def _indices(max_wt: int, max_depth: int, min_part: int = 1):
    for wt in range(1, max_wt + 1):
        for n in range(1, min(wt, max_depth) + 1):
            for k in enumerate_indices(wt, n):
                if min(k) >= min_part:
                    yield list(k)


def _word_entries(W: int) -> List[Entry]:
    out: List[Entry] = []
    add = lambda name, **p: out.append(("word", name, p))
    for k in _indices(W, 4):
        add("symmetric_sum", k=k)
        add("hoffman", k=k)
        add("St_extension", k=k)
    for k in range(2, W + 1):
        for n in range(1, k):
            add("sum_formula_word", k=k, n=n)
    for k in range(1, W):
        for n in range(1, W - k + 1):
            add("shuffle_reg_sum", k=k, n=n)
            add("height_one", k=k, l=n)
    for k in range(3, W + 1):
        for n in range(2, min(k, 5)):
            add("weighted_stuffle", k=k, n=n)
            add("weighted_shuffle", k=k, n=n)
    for l in range(1, W):
        for k in _indices(W - l, 3):
            add("tshuffle_1_n", l=l, k=k)
    for a in range(1, 5):
        for b in range(1, 5):
            for n in range(1, 6):
                if a * (n - 1) + b <= W:
                    add("dm_sum", a=a, b=b, n=n)
    for name in ("St_power", "S_ast_inverse", "St_S1mt", "S1m2t_tast", "St_ast_gen", "St_power_new"):
        for k in range(1, 5):
            for n in range(1, W // k + 1):
                add(name, k=k, n=n)
    for a in range(1, 4):
        for k in range(1, W // a + 1):
            for n in range(1, k + 1):
                for name in ("Nkn_first", "Nkn_second", "Nkn_third", "Nkn_second_third"):
                    add(name, k=k, n=n, a=a)
            for n in range(0, W // a - k + 1):
                add("St_F", k=k, n=n, a=a)
    return out


def _zeta_entries(W: int) -> List[Entry]:
    W = min(W, MAX_ZETA_WEIGHT)
    E = min(W, EDS_WEIGHT)
    out: List[Entry] = []

    def add(name, deep=False, **p):
        if deep:
            p["M"] = DEEP_M
        out.append(("zeta", name, p))

    for k in range(2, W + 1):
        for n in range(1, k):
            add("sum_formula", n >= 4, k=k, n=n, form="binomial_t")
            add("sum_formula", n >= 4, k=k, n=n, form="shifted")
    for k in _indices(W, 3, min_part=2):
        add("symmetric_sum_zeta", k=k)
    for k in range(3, W + 1):
        add("weighted_sum_n2", k=k)
        for n in range(2, min(k, 5)):
            add("weighted_sum", n >= 4, k=k, n=n)
    for k in range(1, W):
        for l in range(1, W - k):
            add("height_one_zeta", l >= 4, k=k, l=l)
    for k in (1, 2):
        for n in range(1, 4):
            add("eval_2k", k=k, n=n)
    for k in range(2, W + 1):
        for n in range(1, W // k + 1):
            add("zetat_k_star", k=k, n=n)
    for k in range(1, 4):
        for n in range(1, k + 1):
            if 2 * k <= W:
                add("restricted_sum", m=1, k=k, n=n)
    for a in (2, 3):
        for k in range(1, W // a + 1):
            for n in range(1, k + 1):
                add("restricted_sum_word", k=k, n=n, a=a)
    h1 = [w for L in range(1, E + 1) for w in words_of_length(L) if is_h1(w)]
    h0 = [w for L in range(2, E + 1) for w in words_of_length(L) if is_h0(w)]
    for w1 in h1:
        deep = len(w1) >= EDS_WEIGHT
        add("eds_rho", deep, w1=w1, deformed=False)
        for at in (0, 1):
            add("eds_rho", deep, w1=w1, deformed=True, at=at)
    for w1 in h1:
        for w0 in h0:
            if len(w1) + len(w0) <= E:
                deep = len(w1) + len(w0) >= EDS_WEIGHT
                add("eds_shuffle_T", deep, w1=w1, w0=w0)
                add("eds_reg", deep, w1=w1, w0=w0)
    for w0 in h0:
        for n in range(1, E - len(w0) + 1):
            deep = len(w0) + n >= EDS_WEIGHT
            add("eds_derivation", deep, w0=w0, n=n)
            add("eds_sigma", deep, w0=w0, m=n)
    return out


def catalog(weight_cap: int = 6, levels=("word", "zeta")) -> List[Entry]:
    """Deterministic list of ``(level, name, params)`` triples."""
    if weight_cap < 1:
        raise ValueError("weight cap must be >= 1")
    out: List[Entry] = []
    if "word" in levels:
        out += _word_entries(weight_cap)
    if "zeta" in levels:
        out += _zeta_entries(weight_cap)
    return out


def level_of(name: str) -> str:
    if name in WORD_IDENTITIES:
        return "word"
    if name in ZETA_IDENTITIES:
        return "zeta"
    raise KeyError(f"unknown identity {name!r}")


def run_one(name: str, params: Dict[str, Any], cfg: Optional[EvalConfig] = None) -> CheckResult:
    start = time.perf_counter()
    if level_of(name) == "word":
        inst = word_identity(name, **params)
    else:
        cfg = cfg or DEFAULT
        p = dict(params)
        if "M" in p:
            cfg = replace(cfg, M=max(cfg.M, int(p.pop("M"))))
        inst = zeta_identity(name, cfg, **p)
        inst.params = dict(params)
    inst.built_ms = (time.perf_counter() - start) * 1000
    return inst.check()


def _run_entry(args) -> CheckResult:
    name, params, cfg = args
    return run_one(name, params, cfg)


def run_catalog(entries: List[Entry], cfg: Optional[EvalConfig] = None, jobs: int = 1) -> List[CheckResult]:
    """Results in catalog order regardless of ``jobs``."""
    work = [(name, params, cfg) for _, name, params in entries]
    if jobs <= 1:
        return [_run_entry(w) for w in work]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_entry, work, chunksize=4))
