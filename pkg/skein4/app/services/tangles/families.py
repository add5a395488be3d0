"""
Link family module for skein4

This module expands named families and rational tangles into explicit
2-algebraic expressions built from braid columns, integer tangles, sums and
rotations.
"""

from typing import Sequence

from skein4.app.errors import UnsupportedClassError
from skein4.app.services.tangles.braid import BraidWord
from skein4.app.services.tangles.expr import (
    Braid,
    Family,
    IntegerTangle,
    Mirror,
    Numerator,
    Rotate,
    TangleExpr,
    TangleSum,
)


def vertical_twist(n: int) -> Braid:
    """The vertical 2-braid s^n."""
    sign = 1 if n >= 0 else -1
    return Braid(BraidWord(2, (sign,) * abs(n)))


def expand_rational(terms: Sequence[int]) -> TangleExpr:
    """
    Continued-fraction build of ``rat(m1 ... mk)``.

    Starts at int(m1) and repeats T <- sum(rot(mirror(T)), int(m)).
    """
    if not terms:
        raise UnsupportedClassError("A rational tangle needs at least one term")
    tangle: TangleExpr = IntegerTangle(terms[0])
    for m in terms[1:]:
        tangle = TangleSum(Rotate(1, Mirror(tangle)), IntegerTangle(m))
    return tangle


def expand_family(node: Family) -> TangleExpr:
    """Explicit expression of a family node."""
    if node.kind == "torus":
        return Numerator(IntegerTangle(node.params[1]))
    if node.kind == "twist":
        return Numerator(TangleSum(vertical_twist(2), IntegerTangle(-node.params[0])))
    columns = [vertical_twist(n) for n in node.params]
    tangle: TangleExpr = columns[0]
    for column in columns[1:]:
        tangle = TangleSum(tangle, column)
    return Numerator(tangle)


def make_family(kind: str, params: Sequence[int]) -> TangleExpr:
    """
    Build a family member.

    Args:
        kind: torus, twist, pretzel or rational
        params: family parameters (torus takes (2, n))

    Returns:
        TangleExpr: the explicit expression (a 2-tangle for ``rational``, a link otherwise)
    """
    if kind == "rational":
        return expand_rational(tuple(params))
    return expand_family(Family(kind, tuple(params)))
