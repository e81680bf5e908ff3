"""Domination polynomials of king and grid graphs."""

from ._core import (
    GuardError,
    ParseError,
    UnsupportedError,
    compare,
    domination_number,
    evaluate,
    fixed_point,
    partner,
    polynomial,
    sampled_check,
    table,
    verify_matching,
)

__all__ = [
    "GuardError",
    "ParseError",
    "UnsupportedError",
    "compare",
    "domination_number",
    "evaluate",
    "fixed_point",
    "partner",
    "polynomial",
    "sampled_check",
    "table",
    "verify_matching",
]
