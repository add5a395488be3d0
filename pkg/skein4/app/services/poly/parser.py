"""
Polynomial parser module for skein4

This module reads polynomials written in the poly-ring text format (plus
parentheses) back into ring elements.
"""

import logging
import re

import sympy as sp
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from skein4.app.errors import PolynomialSyntaxError, RingError
from skein4.app.services.poly.ring import RingElement, RingSpec, from_sympy

# Configure logging
logger = logging.getLogger(__name__)

_ALLOWED = re.compile(r"^[\sA-Za-z_0-9+\-*^()]*$")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)

# Monomial exponents above this are rejected; powers of parenthesized groups
# are expanded eagerly, so their product along the text is capped lower.
MAX_EXPONENT = 100000
MAX_GROUP_POWER = 256

_BASE = re.compile(r"(?:[A-Za-z_][A-Za-z_0-9]*|\))\s*$")
_EXPONENT = re.compile(r"\s*([+-]?\d+)\s*")


def _check_powers(text: str) -> None:
    """Allow ``^`` only as variable^int or (group)^int, with bounded exponents."""
    if re.search(r"\*\s*\*", text):
        raise PolynomialSyntaxError(f"Use ^ for powers in {text!r}")
    group_power = 1
    for caret in re.finditer(r"\^", text):
        base = _BASE.search(text, 0, caret.start())
        if base is None:
            raise PolynomialSyntaxError(f"Power of a non-variable at position {caret.start()} in {text!r}")
        exponent = _EXPONENT.match(text, caret.end())
        if exponent is None:
            raise PolynomialSyntaxError(f"Exponent must be an integer at position {caret.end()} in {text!r}")
        if text.startswith("^", exponent.end()):
            raise PolynomialSyntaxError(f"Chained powers are not supported in {text!r}")
        value = abs(int(exponent.group(1)))
        if value > MAX_EXPONENT:
            raise PolynomialSyntaxError(f"Exponent {value} exceeds {MAX_EXPONENT} in {text!r}")
        if base.group(0).startswith(")"):
            group_power *= max(value, 1)
            if group_power > MAX_GROUP_POWER:
                raise PolynomialSyntaxError(f"Group powers exceed {MAX_GROUP_POWER} in {text!r}")


def parse_poly(text: str, spec: RingSpec) -> RingElement:
    """
    Parse polynomial text into an element of spec.

    Args:
        text: e.g. ``3*b^11*t - 1*b^13*t^2`` or ``(t+1)^2``
        spec: ring the result lives in

    Returns:
        RingElement: canonical element
    """
    if not text or not text.strip():
        raise PolynomialSyntaxError("Empty polynomial")
    if not _ALLOWED.match(text):
        raise PolynomialSyntaxError(f"Unexpected character in polynomial {text!r}")
    _check_powers(text)
    local_dict = {name: sp.Symbol(name) for name in spec.variables}
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TypeError, ValueError, sp.SympifyError) as e:
        raise PolynomialSyntaxError(f"Cannot parse polynomial {text!r}: {e}") from None
    unknown = {str(s) for s in expr.free_symbols} - set(spec.variables)
    if unknown:
        raise PolynomialSyntaxError(f"Unknown variables {sorted(unknown)} for ring {spec.name}")
    try:
        return from_sympy(expr, spec)
    except RingError as e:
        raise PolynomialSyntaxError(str(e)) from None
