"""
Two-tangle module for skein4

This module evaluates 2-tangle expressions in the span of the four basic
2-tangles I (vertical identity), U (its quarter turn), S (a positive
crossing) and Sbar (a negative crossing), and closes them into links.
"""

import logging
from typing import Dict, Tuple

from skein4.app.errors import ArityError, UnsupportedClassError
from skein4.app.services.coeff.specs import CoeffSpec
from skein4.app.services.engine.table_cache import VectorStore
from skein4.app.services.engine.twist import twist_power
from skein4.app.services.engine.vectors import TWO_ORDER, MemoTable, SkeinVector
from skein4.app.services.tangles.braid import free_reduce
from skein4.app.services.tangles.expr import (
    Braid,
    Circle,
    Compose,
    CupCap,
    IntegerTangle,
    Mirror,
    Mutate,
    Rational,
    Rotate,
    TangleExpr,
    TangleSum,
)
from skein4.app.services.tangles.families import expand_rational
from skein4.app.services.tangles.transforms import mirror, mutate

# Configure logging
logger = logging.getLogger(__name__)

I, U, S, SBAR = TWO_ORDER
BASIC_TWO_TANGLES = TWO_ORDER

_ROTATED = {I: U, U: I, S: SBAR, SBAR: S}

_tables: Dict[str, MemoTable] = {}


def _pair_text(key: Tuple[str, str]) -> Tuple[str, str]:
    return key


def _table(spec: CoeffSpec) -> MemoTable:
    if spec.name not in _tables:
        store = VectorStore("two_tangle", spec, 2, _pair_text, str)
        _tables.setdefault(spec.name, MemoTable(f"two_tangle:{spec.name}", store))
    return _tables[spec.name]


def _compute_product(left: str, right: str, spec: CoeffSpec) -> SkeinVector:
    ring = spec.ring
    one = SkeinVector.basis
    if left == I:
        return one(2, ring, right)
    if right == I:
        return one(2, ring, left)
    if left == U and right == U:
        return one(2, ring, U, spec.t)
    if U in (left, right):
        other = right if left == U else left
        return one(2, ring, U, spec.a_inv if other == S else spec.a)
    if left != right:
        return one(2, ring, I)
    rule = spec.square_rule() if left == S else spec.inverse_square_rule()
    return SkeinVector(2, ring, {SBAR: rule[0], I: rule[1], S: rule[2]})


def multiply_basis(left: str, right: str, spec: CoeffSpec) -> SkeinVector:
    """Product ``left`` below ``right`` of two basic 2-tangles."""
    return _table(spec).get_or_compute((left, right), lambda: _compute_product(left, right, spec))


def multiplication_table(spec: CoeffSpec) -> Dict[Tuple[str, str], SkeinVector]:
    return {(x, y): multiply_basis(x, y, spec) for x in BASIC_TWO_TANGLES for y in BASIC_TWO_TANGLES}


def multiply(lower: SkeinVector, upper: SkeinVector, spec: CoeffSpec) -> SkeinVector:
    result = SkeinVector.zero(2, spec.ring)
    for x, cx in lower.items():
        for y, cy in upper.items():
            result = result + multiply_basis(x, y, spec).scale(cx * cy)
    return result


def rotate_vector(vector: SkeinVector, steps: int) -> SkeinVector:
    """Quarter turns act on the basis by I <-> U, S <-> Sbar."""
    if steps % 2 == 0:
        return vector
    return SkeinVector(2, vector.ring, {_ROTATED[k]: c for k, c in vector.items()})


def twist_vector(n: int, spec: CoeffSpec) -> SkeinVector:
    """The vertical twist s^n as a^-n (c(-1) Sbar + c(0) I + c(1) S)."""
    c = twist_power(spec, n)
    scale = spec.a_power(-n)
    return SkeinVector(2, spec.ring, {SBAR: c[0] * scale, I: c[1] * scale, S: c[2] * scale})


def sum_vectors(left: SkeinVector, right: SkeinVector, spec: CoeffSpec) -> SkeinVector:
    return rotate_vector(multiply(rotate_vector(right, -1), rotate_vector(left, -1), spec), 1)


def eval_2tangle(expr: TangleExpr, spec: CoeffSpec) -> SkeinVector:
    """
    Value of a 2-tangle expression in the span of I, U, S, Sbar.

    Args:
        expr: expression of arity 2
        spec: coefficient spec

    Returns:
        SkeinVector: arity-2 vector
    """
    if expr.arity != 2:
        raise ArityError(f"Expected a 2-tangle, got arity {expr.arity}", subexpression=str(expr))
    if isinstance(expr, Braid):
        letters = free_reduce(expr.word.letters)
        return twist_vector(sum(letters), spec)
    if isinstance(expr, CupCap):
        return SkeinVector.basis(2, spec.ring, U)
    if isinstance(expr, Compose):
        return multiply(eval_2tangle(expr.lower, spec), eval_2tangle(expr.upper, spec), spec)
    if isinstance(expr, Rotate):
        return rotate_vector(eval_2tangle(expr.child, spec), expr.steps)
    if isinstance(expr, Circle):
        return eval_2tangle(expr.child, spec).scale(spec.t)
    if isinstance(expr, Mirror):
        return eval_2tangle(mirror(expr.child), spec)
    if isinstance(expr, Mutate):
        return eval_2tangle(mutate(expr.child, expr.axis), spec)
    if isinstance(expr, IntegerTangle):
        return rotate_vector(twist_vector(expr.twists, spec), 1)
    if isinstance(expr, Rational):
        return eval_2tangle(expand_rational(expr.terms), spec)
    if isinstance(expr, TangleSum):
        return sum_vectors(eval_2tangle(expr.left, spec), eval_2tangle(expr.right, spec), spec)
    raise UnsupportedClassError(f"{type(expr).__name__} is not a 2-algebraic tangle constructor")


def _closure_values(spec: CoeffSpec, numerator: bool) -> Dict[str, object]:
    t, a, ai = spec.t, spec.a, spec.a_inv
    if numerator:
        return {I: t, U: t * t, S: ai * t, SBAR: a * t}
    return {I: t * t, U: t, S: a * t, SBAR: ai * t}


def close_2tangle(vector: SkeinVector, spec: CoeffSpec, numerator: bool = True) -> SkeinVector:
    """N (numerator = True) or D closure of a 2-tangle value."""
    values = _closure_values(spec, numerator)
    total = spec.zero()
    for key, coefficient in vector.items():
        total = total + coefficient * values[key]
    return SkeinVector.link(total)
