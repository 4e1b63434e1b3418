"""Exterior calculus on products of trans-Sasakian manifolds."""

from ._core import (
    Form,
    GeometryError,
    ParseError,
    classify,
    condition_tensor,
    d,
    dc,
    j,
    kahler_form,
    parse,
    print_latex,
    print_text,
    run_cli,
    table,
    truncate,
    verify,
    wedge,
)

__all__ = [
    "Form",
    "GeometryError",
    "ParseError",
    "classify",
    "condition_tensor",
    "d",
    "dc",
    "j",
    "kahler_form",
    "parse",
    "print_latex",
    "print_text",
    "run_cli",
    "table",
    "truncate",
    "verify",
    "wedge",
]
