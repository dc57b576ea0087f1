"""Spectral measures, sign representations and matrix lifts of symmetric Boolean functions.

Symmetric functions are value strings over weights 0..n, e.g. "000111" for
majority on five bits. Truth tables are lists of 0/1 indexed by input mask.
"""

from ._symspec import (
    CapExceeded,
    ParseError,
    SymspecError,
    approx_l1,
    bs92,
    expand,
    level_spectrum,
    lift,
    matrix_stats,
    measures,
    mon_eps,
    named_function,
    plan_reduction,
    sign_poly,
    signmon,
    spectral_stats,
    sweep,
    wht,
)

__all__ = [
    "CapExceeded",
    "ParseError",
    "SymspecError",
    "approx_l1",
    "bs92",
    "expand",
    "level_spectrum",
    "lift",
    "matrix_stats",
    "measures",
    "mon_eps",
    "named_function",
    "plan_reduction",
    "sign_poly",
    "signmon",
    "spectral_stats",
    "sweep",
    "wht",
]
