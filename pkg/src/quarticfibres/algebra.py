"""Public arithmetic interface: fields, K = F_q(t), forms, K^(1/4), parsing.

Everything downstream (families, towers, fibre analysis, resolution) goes
through the names exported here; the submodules behind them are free to
change representation.
"""

from __future__ import annotations

from .errors import NotASquare, ZeroDivisor
from .finitefield import GF, FieldSpec, GFElem
from .insep import InsepElem, fourth_root, sqrt_in_quarter, subalgebra_dimension
from .mpoly import FORM_VARS, MPoly, triform, triform_zero
from .parser import parse_element, parse_form
from .scalars import KDomain, ScalarK
from .upoly import UPoly

__all__ = [
    "GF", "FieldSpec", "GFElem", "UPoly", "ScalarK", "KDomain",
    "MPoly", "TriForm", "FORM_VARS", "InsepElem",
    "parse_element", "parse_form", "triform", "triform_zero",
    "is_square", "sqrt_element", "fourth_root", "sqrt_in_quarter",
    "partial_derivative", "eval_form", "form_square_root", "divide_form",
    "subalgebra_dimension",
]

TriForm = MPoly  # ternary forms are MPoly values over vars (x, y, z)


def is_square(x: ScalarK) -> bool:
    """Whether x lies in K^2 (reduced num and den supported on even powers)."""
    return x.is_square()


def sqrt_element(x: ScalarK) -> ScalarK:
    """Exact square root in K; raises NotASquare when is_square(x) fails."""
    return x.sqrt()


def partial_derivative(f: MPoly, var: str) -> MPoly:
    return f.partial(var)


def eval_form(f: MPoly, p) -> object:
    """Evaluate a form at a point triple (over the form's own domain)."""
    return f.eval_point(dict(zip(FORM_VARS, p)))


def form_square_root(f: MPoly):
    """g with g*g = f when f is a perfect square, else None."""
    return f.square_root()


def divide_form(f: MPoly, d: MPoly):
    """Exact quotient f/d as a form, or None when d does not divide f."""
    if d.is_zero():
        raise ZeroDivisor("division of a form by zero")
    return f.divide(d)
