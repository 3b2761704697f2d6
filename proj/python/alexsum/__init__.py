"""Exact Alexander-Conway polynomial of braid closures.

Words are strings of signed generator indices ("-2 1 -2 1" is the
figure-eight knot's braid); polynomials come back as exponent-to-coefficient
dicts with exact integer coefficients, or as rendered text.
"""

from ._core import (
    alexander,
    alexander_text,
    components,
    conway,
    conway_text,
    cross_validate,
    exponent_sum,
    states,
    strand_count,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "alexander",
    "alexander_text",
    "components",
    "conway",
    "conway_text",
    "cross_validate",
    "exponent_sum",
    "states",
    "strand_count",
    "verify",
]
