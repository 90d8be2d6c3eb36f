"""Named identities at word level (exact) and zeta level (numeric), plus their coefficients."""
from __future__ import annotations

from .coefficients import (
    C_tilde,
    C_value,
    SetPartition,
    b_k,
    build_N,
    c_Pi,
    coeff_c,
    coeff_d,
    partitions,
    weight_C,
)
from .instance import CheckResult, IdentityInstance
from .sweeps import catalog, level_of, run_catalog, run_one
from .word_identities import WORD_IDENTITIES, word_identity
from .zeta_identities import ZETA_IDENTITIES, zeta_identity

__all__ = [
    "C_tilde",
    "C_value",
    "CheckResult",
    "IdentityInstance",
    "SetPartition",
    "WORD_IDENTITIES",
    "ZETA_IDENTITIES",
    "b_k",
    "build_N",
    "c_Pi",
    "catalog",
    "coeff_c",
    "coeff_d",
    "level_of",
    "partitions",
    "run_catalog",
    "run_one",
    "weight_C",
    "word_identity",
    "zeta_identity",
]
