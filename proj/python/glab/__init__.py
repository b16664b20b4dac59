"""Exact computations with quotient current algebras and compatible Poisson pencils."""

import json
from fractions import Fraction

from ._glab import (
    Algebra,
    BudgetExceeded,
    __version__,
    gaudin,
    jacobi,
    quotient_index,
    set_term_budget,
    suites,
    term_budget,
)
from . import _glab

__all__ = [
    "Algebra",
    "BudgetExceeded",
    "__version__",
    "build_z",
    "crt_idempotents",
    "gaudin",
    "jacobi",
    "quotient_index",
    "run_suite",
    "set_term_budget",
    "suites",
    "term_budget",
]


def crt_idempotents(p):
    """Coefficient lists (lowest degree first) of the CRT idempotents of p."""
    return [[Fraction(c) for c in r] for r in _glab.crt_idempotents(p)]


def build_z(algebra, p1, p2, seed=0):
    """Generators of Z(p1, p2) with their recipes, as a dict."""
    return json.loads(_glab.build_z_json(algebra, p1, p2, seed))


def run_suite(name, algebra="", params=None, seed=0, format="json"):
    """Run a verification suite; returns the parsed report for json, text for md."""
    text = _glab.run_suite(name, algebra, {k: str(v) for k, v in (params or {}).items()}, seed, format)
    return json.loads(text) if format == "json" else text
