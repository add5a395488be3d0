"""
Three-tangle module for skein4

This module multiplies and evaluates 3-tangles in the span of the 40 basic
3-tangles. Braid-type keys multiply through the 3-braid reducer; a crossing
stacked on a non-invertible key acts on its bottom or top part only; two
non-invertible keys meet in a middle region whose value depends only on the
top of the lower key and the bottom of the upper one.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from skein4.app.errors import ArityError, UnsupportedClassError
from skein4.app.services.coeff.specs import CoeffSpec
from skein4.app.services.engine.basis3 import IDENTITY_KEY, Key3, Token
from skein4.app.services.engine.table_cache import VectorStore
from skein4.app.services.engine.three_braid import reduce_3braid
from skein4.app.services.engine.vectors import MemoTable, SkeinVector
from skein4.app.services.poly import RingElement
from skein4.app.services.tangles.expr import (
    Braid,
    Circle,
    Compose,
    CupCap,
    Mirror,
    Rotate,
    TangleExpr,
)
from skein4.app.services.tangles.transforms import mirror

# Configure logging
logger = logging.getLogger(__name__)

Terms = List[Tuple[RingElement, str]]

U_PAIRS = {"U1": ("A12", "B12"), "U2": ("A23", "B23")}


def _unit(spec: CoeffSpec, state: str, power: int = 0) -> Terms:
    return [(spec.a_power(power), state)]


def _square(rule, minus: str, zero: str, plus: str) -> Terms:
    return [(rule[0], minus), (rule[1], zero), (rule[2], plus)]


def lower_action(spec: CoeffSpec, letter: int, bottom: str) -> Terms:
    """A crossing placed directly below a non-invertible tangle, acting on its bottom part."""
    sq, isq = spec.square_rule(), spec.inverse_square_rule()
    table: Dict[Tuple[int, str], Terms] = {
        (1, "A12"): _unit(spec, "A12", -1),
        (-1, "A12"): _unit(spec, "A12", 1),
        (2, "A12"): _unit(spec, "A13o"),
        (-2, "A12"): _unit(spec, "A13u"),
        (1, "A23"): _unit(spec, "A13u"),
        (-1, "A23"): _unit(spec, "A13o"),
        (2, "A23"): _unit(spec, "A23", -1),
        (-2, "A23"): _unit(spec, "A23", 1),
        (1, "A13o"): _unit(spec, "A23"),
        (-1, "A13u"): _unit(spec, "A23"),
        (-2, "A13o"): _unit(spec, "A12"),
        (2, "A13u"): _unit(spec, "A12"),
        # s1 A13u = s1^2 A23, and so on
        (1, "A13u"): _square(sq, "A13o", "A23", "A13u"),
        (-1, "A13o"): _square(isq, "A13o", "A23", "A13u"),
        (2, "A13o"): _square(sq, "A13u", "A12", "A13o"),
        (-2, "A13u"): _square(isq, "A13u", "A12", "A13o"),
    }
    return table[(letter, bottom)]


def upper_action(spec: CoeffSpec, top: str, letter: int) -> Terms:
    """A crossing placed directly above a non-invertible tangle, acting on its top part."""
    sq, isq = spec.square_rule(), spec.inverse_square_rule()
    table: Dict[Tuple[str, int], Terms] = {
        ("B12", 1): _unit(spec, "B12", -1),
        ("B12", -1): _unit(spec, "B12", 1),
        ("B12", 2): _unit(spec, "B13u"),
        ("B12", -2): _unit(spec, "B13o"),
        ("B23", 1): _unit(spec, "B13o"),
        ("B23", -1): _unit(spec, "B13u"),
        ("B23", 2): _unit(spec, "B23", -1),
        ("B23", -2): _unit(spec, "B23", 1),
        ("B13u", -2): _unit(spec, "B12"),
        ("B13o", 2): _unit(spec, "B12"),
        ("B13o", -1): _unit(spec, "B23"),
        ("B13u", 1): _unit(spec, "B23"),
        ("B13u", 2): _square(sq, "B13o", "B12", "B13u"),
        ("B13o", -2): _square(isq, "B13o", "B12", "B13u"),
        ("B13o", 1): _square(sq, "B13u", "B23", "B13o"),
        ("B13u", -1): _square(isq, "B13u", "B23", "B13o"),
    }
    return table[(top, letter)]


def middle_value(spec: CoeffSpec, top: str, bottom: str) -> RingElement:
    """
    Value of the region between the top of a lower non-invertible tangle and
    the bottom of an upper one.
    """
    t, a, ai = spec.t, spec.a, spec.a_inv
    one = spec.one()
    if (top, bottom) == ("B13o", "A13u"):
        return -spec.b3_inv * (spec.b0 * ai + spec.b1 * t + spec.b2 * a)
    if (top, bottom) == ("B13u", "A13o"):
        return -spec.b0_inv * (spec.b1 * ai + spec.b2 * t + spec.b3 * a)
    table = {
        ("B12", "A12"): t,
        ("B12", "A23"): one,
        ("B23", "A12"): one,
        ("B23", "A23"): t,
        ("B12", "A13o"): a,
        ("B12", "A13u"): ai,
        ("B23", "A13o"): ai,
        ("B23", "A13u"): a,
        ("B13o", "A12"): ai,
        ("B13u", "A12"): a,
        ("B13o", "A23"): a,
        ("B13u", "A23"): ai,
        ("B13o", "A13o"): t,
        ("B13u", "A13u"): t,
    }
    return table[(top, bottom)]


def _act_below(word: Sequence[int], key: Key3, spec: CoeffSpec) -> SkeinVector:
    """Braid word stacked below a non-invertible key."""
    states: Dict[str, RingElement] = {key.bottom: spec.one()}
    for letter in reversed(word):
        nxt: Dict[str, RingElement] = {}
        for state, coefficient in states.items():
            for c, new in lower_action(spec, letter, state):
                nxt[new] = nxt[new] + coefficient * c if new in nxt else coefficient * c
        states = nxt
    return SkeinVector(3, spec.ring, {Key3.of_pair(s, key.top): c for s, c in states.items()})


def _act_above(key: Key3, word: Sequence[int], spec: CoeffSpec) -> SkeinVector:
    """Braid word stacked above a non-invertible key."""
    states: Dict[str, RingElement] = {key.top: spec.one()}
    for letter in word:
        nxt: Dict[str, RingElement] = {}
        for state, coefficient in states.items():
            for c, new in upper_action(spec, state, letter):
                nxt[new] = nxt[new] + coefficient * c if new in nxt else coefficient * c
        states = nxt
    return SkeinVector(3, spec.ring, {Key3.of_pair(key.bottom, s): c for s, c in states.items()})


def _compute_product(lower: Key3, upper: Key3, spec: CoeffSpec) -> SkeinVector:
    if lower.is_braid and upper.is_braid:
        return reduce_3braid(lower.word + upper.word, spec)
    if lower.is_braid:
        return _act_below(lower.word, upper, spec)
    if upper.is_braid:
        return _act_above(lower, upper.word, spec)
    coefficient = middle_value(spec, lower.top, upper.bottom)
    return SkeinVector.basis(3, spec.ring, Key3.of_pair(lower.bottom, upper.top), coefficient)


_tables: Dict[str, MemoTable] = {}


def _key_text(key: Tuple[Key3, Key3]) -> Tuple[str, str]:
    return str(key[0]), str(key[1])


def _table(spec: CoeffSpec) -> MemoTable:
    if spec.name not in _tables:
        store = VectorStore("three_tangle", spec, 3, _key_text, Key3.parse)
        _tables.setdefault(spec.name, MemoTable(f"three_tangle:{spec.name}", store))
    return _tables[spec.name]


def multiply_keys(lower: Key3, upper: Key3, spec: CoeffSpec) -> SkeinVector:
    """Product of two basic 3-tangles, ``lower`` below ``upper``."""
    if lower == IDENTITY_KEY:
        return SkeinVector.basis(3, spec.ring, upper)
    if upper == IDENTITY_KEY:
        return SkeinVector.basis(3, spec.ring, lower)
    return _table(spec).get_or_compute((lower, upper), lambda: _compute_product(lower, upper, spec))


def multiply(lower: SkeinVector, upper: SkeinVector, spec: CoeffSpec) -> SkeinVector:
    result = SkeinVector.zero(3, spec.ring)
    for x, cx in lower.items():
        for y, cy in upper.items():
            result = result + multiply_keys(x, y, spec).scale(cx * cy)
    return result


def token_vector(token: Token, spec: CoeffSpec) -> SkeinVector:
    if isinstance(token, int):
        return SkeinVector.basis(3, spec.ring, Key3.braid((token,)))
    if token not in U_PAIRS:
        raise UnsupportedClassError(f"Unknown 3-tangle generator {token!r}")
    return SkeinVector.basis(3, spec.ring, Key3.of_pair(*U_PAIRS[token]))


def eval_tokens(tokens: Sequence[Token], spec: CoeffSpec) -> SkeinVector:
    """Value of a word over s1^+-1, s2^+-1, U1, U2 read bottom to top."""
    result = SkeinVector.basis(3, spec.ring, IDENTITY_KEY)
    for token in tokens:
        result = multiply(result, token_vector(token, spec), spec)
    return result


def eval_3tangle(expr: TangleExpr, spec: CoeffSpec) -> SkeinVector:
    """
    Value of a 3-tangle expression over the 40 basic 3-tangles.

    Args:
        expr: expression of arity 3 built from braids, U generators,
            composition, rotation, circles and mirrors
        spec: coefficient spec

    Returns:
        SkeinVector: arity-3 vector
    """
    if expr.arity != 3:
        raise ArityError(f"Expected a 3-tangle, got arity {expr.arity}", subexpression=str(expr))
    if isinstance(expr, Braid):
        return reduce_3braid(expr.word, spec)
    if isinstance(expr, CupCap):
        return token_vector(f"U{expr.index}", spec)
    if isinstance(expr, Compose):
        return multiply(eval_3tangle(expr.lower, spec), eval_3tangle(expr.upper, spec), spec)
    if isinstance(expr, Rotate):
        from skein4.app.services.engine.rotation3 import rotate_vector

        return rotate_vector(eval_3tangle(expr.child, spec), expr.steps, spec)
    if isinstance(expr, Circle):
        return eval_3tangle(expr.child, spec).scale(spec.t)
    if isinstance(expr, Mirror):
        return eval_3tangle(mirror(expr.child), spec)
    raise UnsupportedClassError(f"{type(expr).__name__} is not a 3-algebraic constructor")


def close_key(key: Key3, spec: CoeffSpec) -> SkeinVector:
    """Braid-style closure of a basic 3-tangle."""
    if key.is_braid:
        from skein4.app.services.engine.closed_braid import eval_closed_3braid

        return eval_closed_3braid(key.word, spec)
    return SkeinVector.link(middle_value(spec, key.top, key.bottom) * spec.t)


def close_3tangle(vector: SkeinVector, spec: CoeffSpec) -> SkeinVector:
    total = spec.zero()
    for key, coefficient in vector.items():
        total = total + coefficient * close_key(key, spec).value
    return SkeinVector.link(total)
