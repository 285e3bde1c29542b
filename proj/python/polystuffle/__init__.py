"""Exact shuffle/stuffle algebra, polylogarithms and harmonic sums.

Expressions are passed as text in the same syntax the ``polystuffle`` CLI
accepts, e.g. ``'st(y1, y2)'``, ``'sh("01", "1")'``, ``'star(2) - star(1)'``.
Rational results come back as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _core
from ._core import Error, evaluate, expr_type, pi_x, pi_y, regularize, shuffle, stuffle

__all__ = [
    "Error",
    "evaluate",
    "expr_type",
    "shuffle",
    "stuffle",
    "pi_x",
    "pi_y",
    "regularize",
    "neg_li",
    "h_eval",
    "h_poly_eval",
    "h_closed_form",
    "h_star_closed_form",
    "li_coeffs",
    "li_coeffs_poly",
    "li_eval",
    "stirling2",
    "verify",
]


def _fracs(values):
    return [Fraction(v) for v in values]


def neg_li(index):
    """Li at a non-positive index list as p(z)/(1-z)^m plus its star form."""
    out = _core.neg_li(list(index))
    out["numerator"] = _fracs(out["numerator"])
    out["stars"] = {k: Fraction(c) for k, c in out["stars"].items()}
    return out


def h_eval(index, n):
    return Fraction(_core.h_eval(list(index), n))


def h_poly_eval(expr, n):
    return Fraction(_core.h_poly_eval(expr, n))


def h_closed_form(index):
    """Coefficients c_0..c_d of H(N) = sum c_k N^k."""
    return _fracs(_core.h_closed_form(list(index)))


def h_star_closed_form(expr):
    return _fracs(_core.h_star_closed_form(expr))


def li_coeffs(index, ncap=30):
    return _fracs(_core.li_coeffs(list(index), ncap))


def li_coeffs_poly(expr, ncap=30):
    return _fracs(_core.li_coeffs_poly(expr, ncap))


def li_eval(index, z, eps=1e-12):
    return _core.li_eval(list(index), complex(z), eps)


def stirling2(n, k):
    return int(_core.stirling2(n, k))


def verify(suite="all", ncap=None, seed=20240601):
    """List of (identity, passed, first_failure_n) tuples."""
    return _core.verify(suite, ncap, seed)
