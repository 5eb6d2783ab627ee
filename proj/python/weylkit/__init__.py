"""Exact symbolic engine for the Weyl algebra [X, Y] = c.

Thin python layer over the C++ core: normal ordering of operator
expressions, exact Bernoulli/Euler tables, and the identity
verification suites.
"""

import json as _json
from fractions import Fraction as _Fraction

from weylkit._core import (  # noqa: F401
    __version__,
    bch_report,
    identity_names,
    normal_order,
    _bernoulli_table,
    _euler_zero_table,
    _v_table,
    _run_identity,
    _verify_all,
)

__all__ = [
    "__version__",
    "bch_report",
    "bernoulli_table",
    "euler_zero_table",
    "identity_names",
    "normal_order",
    "normal_order_terms",
    "run_identity",
    "v_table",
    "verify_all",
]


def bernoulli_table(n):
    """[B_0, ..., B_n] as Fractions (B_1 = -1/2 convention)."""
    return [_Fraction(v) for v in _bernoulli_table(n)]


def euler_zero_table(n):
    """[E_1(0), ..., E_n(0)] as Fractions."""
    return [_Fraction(v) for v in _euler_zero_table(n)]


def v_table(n):
    """[v_1, ..., v_n] with v_k = -E_k(0), as Fractions."""
    return [_Fraction(v) for v in _v_table(n)]


def normal_order_terms(expr, c_value="symbolic"):
    """Normal-order ``expr`` and return the parsed JSON term structure."""
    return _json.loads(normal_order(expr, c_value, "json"))


def run_identity(name, max_degree=6, free_cutoff=6, jobs=1):
    """Run one verification suite; returns the report dict."""
    return _json.loads(_run_identity(name, max_degree, free_cutoff, jobs))


def verify_all(max_degree=6, free_cutoff=6, jobs=1):
    """Run every verification suite; returns the aggregate report dict."""
    return _json.loads(_verify_all(max_degree, free_cutoff, jobs))
