"""
Transform module for skein4

This module pushes mirror images, mutations and rotations through tangle
expressions.
"""

from typing import Optional

from skein4.app.errors import ArityError, Skein4Error
from skein4.app.services.tangles.braid import BraidWord
from skein4.app.services.tangles.expr import (
    Braid,
    BraidClosure,
    Circle,
    Compose,
    CupCap,
    Family,
    IntegerTangle,
    Mirror,
    Mutate,
    Rational,
    Rotate,
    TangleExpr,
    TangleSum,
    node_at,
    replace_at,
)
from skein4.app.services.tangles.families import expand_family


def mirror(expr: TangleExpr) -> TangleExpr:
    """Switch every crossing."""
    if isinstance(expr, Braid):
        return Braid(expr.word.mirror())
    if isinstance(expr, BraidClosure):
        return BraidClosure(expr.word.mirror())
    if isinstance(expr, CupCap):
        return expr
    if isinstance(expr, IntegerTangle):
        return IntegerTangle(-expr.twists)
    if isinstance(expr, Rational):
        return Rational(tuple(-m for m in expr.terms))
    if isinstance(expr, Mirror):
        return expr.child
    if isinstance(expr, Family):
        if expr.kind == "torus":
            return Family("torus", (2, -expr.params[1]))
        if expr.kind == "pretzel":
            return Family("pretzel", tuple(-p for p in expr.params))
        return mirror(expand_family(expr))
    if isinstance(expr, Rotate):
        return Rotate(expr.steps, mirror(expr.child))
    if isinstance(expr, Mutate):
        return Mutate(expr.axis, mirror(expr.child))
    return expr.with_children(tuple(mirror(child) for child in expr.children()))


def mutate(expr: TangleExpr, axis: str) -> TangleExpr:
    """
    Rotate a 2-tangle by pi about an axis.

    z is the in-plane half turn; y reverses composition order; x reverses sum
    order. Rotations about x or y reverse the direction of ``rot``.
    """
    if expr.arity != 2:
        raise ArityError(f"m{axis} applies to 2-tangles only", subexpression=str(expr))
    if axis not in ("x", "y", "z"):
        raise Skein4Error(f"Unknown mutation axis {axis!r}")
    if isinstance(expr, Braid):
        if axis == "x":
            return expr
        return Braid(BraidWord(2, tuple(reversed(expr.word.letters))))
    if isinstance(expr, (CupCap, IntegerTangle, Rational)):
        return expr
    if isinstance(expr, Compose):
        lower, upper = mutate(expr.lower, axis), mutate(expr.upper, axis)
        return Compose(upper, lower) if axis in ("y", "z") else Compose(lower, upper)
    if isinstance(expr, TangleSum):
        left, right = mutate(expr.left, axis), mutate(expr.right, axis)
        return TangleSum(right, left) if axis in ("x", "z") else TangleSum(left, right)
    if isinstance(expr, Rotate):
        steps = expr.steps if axis == "z" else -expr.steps
        return Rotate(steps, mutate(expr.child, axis))
    if isinstance(expr, Mutate):
        return Mutate(expr.axis, mutate(expr.child, axis))
    if isinstance(expr, (Circle, Mirror)):
        return expr.with_children((mutate(expr.child, axis),))
    raise ArityError(f"Cannot mutate {type(expr).__name__}", subexpression=str(expr))


def rotate(expr: TangleExpr, steps: int) -> TangleExpr:
    """Rotate an n-tangle by ``steps`` boundary positions, normalized mod 2n."""
    n = expr.arity
    if n == 0:
        raise ArityError("Cannot rotate a link", subexpression=str(expr))
    if isinstance(expr, Rotate):
        return rotate(expr.child, expr.steps + steps)
    k = steps % (2 * n)
    if k == 0:
        return expr
    if n == 2 and k == 2 and isinstance(expr, (IntegerTangle, Rational, CupCap)):
        return expr
    return Rotate(k, expr)


def expand_nodes(expr: TangleExpr) -> TangleExpr:
    """Push every MIRROR and MUTATE node down to the leaves."""
    if isinstance(expr, Mirror):
        return expand_nodes(mirror(expr.child))
    if isinstance(expr, Mutate):
        return expand_nodes(mutate(expr.child, expr.axis))
    kids = expr.children()
    if not kids:
        return expr
    return expr.with_children(tuple(expand_nodes(child) for child in kids))


def transform(expr: TangleExpr, op: str, axis: Optional[str] = None, steps: int = 0) -> TangleExpr:
    """
    Apply a symmetry to an expression.

    Args:
        expr: expression
        op: ``mirror``, ``mutate`` or ``rotate``
        axis: mutation axis for ``mutate``
        steps: rotation steps for ``rotate``
    """
    if op == "mirror":
        return mirror(expr)
    if op == "mutate":
        return mutate(expr, axis or "z")
    if op == "rotate":
        return rotate(expr, steps)
    raise Skein4Error(f"Unknown transform {op!r}")


def mutate_at(expr: TangleExpr, path, axis: str) -> TangleExpr:
    """Mutate the 2-tangle subexpression at ``path`` of a larger expression."""
    target = node_at(expr, tuple(path))
    return replace_at(expr, tuple(path), mutate(target, axis))


def two_tangle_paths(expr: TangleExpr, prefix=()) -> list:
    """Paths of all 2-tangle subexpressions, outermost first."""
    paths = []
    if expr.arity == 2:
        paths.append(tuple(prefix))
    for i, child in enumerate(expr.children()):
        paths.extend(two_tangle_paths(child, tuple(prefix) + (i,)))
    return paths
