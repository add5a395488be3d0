"""
Tangle expression module for skein4

This module provides the immutable syntax tree of n-algebraic tangle and
link expressions together with arity checking and the text formatter.
"""

from dataclasses import dataclass
from typing import Tuple

from skein4.app.errors import ArityError, UnsupportedClassError
from skein4.app.services.tangles.braid import BraidWord

MUTATION_AXES = ("x", "y", "z")
FAMILY_KINDS = ("torus", "twist", "pretzel")


class TangleExpr:
    """Base class of expression nodes; ``arity`` is n for n-tangles and 0 for links."""

    arity: int

    def children(self) -> Tuple["TangleExpr", ...]:
        return ()

    def with_children(self, children: Tuple["TangleExpr", ...]) -> "TangleExpr":
        if children:
            raise ValueError(f"{type(self).__name__} has no children")
        return self

    def __str__(self) -> str:
        return format_expr(self)


def _require(expr: "TangleExpr", arity: int, where: str) -> None:
    if expr.arity != arity:
        raise ArityError(f"{where} needs a {arity}-tangle, got arity {expr.arity}", subexpression=str(expr))


def _set_arity(node, value: int) -> None:
    object.__setattr__(node, "arity", value)


@dataclass(frozen=True)
class Braid(TangleExpr):
    """Braid tangle; IDENTITY(n) is the empty word, CROSSING(n, i, sign) a single letter."""

    word: BraidWord

    def __post_init__(self):
        _set_arity(self, self.word.strands)


@dataclass(frozen=True)
class CupCap(TangleExpr):
    """U_i on n strands: a cap joining bottom i, i+1 under a cup joining top i, i+1."""

    index: int
    strands: int

    def __post_init__(self):
        if self.strands < 2 or not 1 <= self.index < self.strands:
            raise ArityError(f"U({self.index},{self.strands}) is out of range")
        _set_arity(self, self.strands)


@dataclass(frozen=True)
class Compose(TangleExpr):
    """``lower`` stacked below ``upper``."""

    lower: TangleExpr
    upper: TangleExpr

    def __post_init__(self):
        if self.lower.arity != self.upper.arity or self.lower.arity == 0:
            raise ArityError(
                f"Cannot compose a {self.lower.arity}-tangle with a {self.upper.arity}-tangle",
                subexpression=f"comp({self.lower},{self.upper})",
            )
        _set_arity(self, self.lower.arity)

    def children(self):
        return (self.lower, self.upper)

    def with_children(self, children):
        return Compose(*children)


@dataclass(frozen=True)
class Rotate(TangleExpr):
    """Rotation by ``steps`` boundary positions counterclockwise."""

    steps: int
    child: TangleExpr

    def __post_init__(self):
        if self.child.arity == 0:
            raise ArityError("Cannot rotate a link", subexpression=str(self.child))
        _set_arity(self, self.child.arity)

    def children(self):
        return (self.child,)

    def with_children(self, children):
        return Rotate(self.steps, children[0])


@dataclass(frozen=True)
class Circle(TangleExpr):
    """Disjoint union with a trivial circle."""

    child: TangleExpr

    def __post_init__(self):
        _set_arity(self, self.child.arity)

    def children(self):
        return (self.child,)

    def with_children(self, children):
        return Circle(children[0])


@dataclass(frozen=True)
class Mirror(TangleExpr):
    child: TangleExpr

    def __post_init__(self):
        _set_arity(self, self.child.arity)

    def children(self):
        return (self.child,)

    def with_children(self, children):
        return Mirror(children[0])


@dataclass(frozen=True)
class Mutate(TangleExpr):
    axis: str
    child: TangleExpr

    def __post_init__(self):
        if self.axis not in MUTATION_AXES:
            raise ArityError(f"Unknown mutation axis {self.axis!r}")
        _require(self.child, 2, f"m{self.axis}")
        _set_arity(self, 2)

    def children(self):
        return (self.child,)

    def with_children(self, children):
        return Mutate(self.axis, children[0])


@dataclass(frozen=True)
class IntegerTangle(TangleExpr):
    """Horizontal twist region with ``twists`` half-twists."""

    twists: int

    def __post_init__(self):
        _set_arity(self, 2)


@dataclass(frozen=True)
class Rational(TangleExpr):
    """Conway rational tangle ``rat(m1 m2 ... mk)``."""

    terms: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(int(m) for m in self.terms))
        if not self.terms:
            raise ArityError("rat() needs at least one term")
        _set_arity(self, 2)


@dataclass(frozen=True)
class TangleSum(TangleExpr):
    """``left`` placed to the left of ``right``."""

    left: TangleExpr
    right: TangleExpr

    def __post_init__(self):
        _require(self.left, 2, "sum")
        _require(self.right, 2, "sum")
        _set_arity(self, 2)

    def children(self):
        return (self.left, self.right)

    def with_children(self, children):
        return TangleSum(*children)


@dataclass(frozen=True)
class Numerator(TangleExpr):
    child: TangleExpr

    def __post_init__(self):
        _require(self.child, 2, "N")
        _set_arity(self, 0)

    def children(self):
        return (self.child,)

    def with_children(self, children):
        return Numerator(children[0])


@dataclass(frozen=True)
class Denominator(TangleExpr):
    child: TangleExpr

    def __post_init__(self):
        _require(self.child, 2, "D")
        _set_arity(self, 0)

    def children(self):
        return (self.child,)

    def with_children(self, children):
        return Denominator(children[0])


@dataclass(frozen=True)
class BraidClosure(TangleExpr):
    word: BraidWord

    def __post_init__(self):
        _set_arity(self, 0)


@dataclass(frozen=True)
class Close(TangleExpr):
    """Braid-style closure (top i joined to bottom i) of a general n-tangle expression."""

    child: TangleExpr

    def __post_init__(self):
        if self.child.arity == 0:
            raise ArityError("close() needs a tangle, got a link", subexpression=str(self.child))
        _set_arity(self, 0)

    def children(self):
        return (self.child,)

    def with_children(self, children):
        return close(children[0])


@dataclass(frozen=True)
class Family(TangleExpr):
    kind: str
    params: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if self.kind == "torus":
            if len(self.params) != 2 or self.params[0] != 2:
                raise UnsupportedClassError(f"Only torus(2,n) links are supported, got torus{self.params}")
        elif self.kind == "twist":
            if len(self.params) != 1:
                raise UnsupportedClassError("twist(n) takes exactly one parameter")
        elif self.kind == "pretzel":
            if not self.params:
                raise UnsupportedClassError("pretzel() needs at least one column")
        else:
            raise UnsupportedClassError(f"Unknown family {self.kind!r}")
        _set_arity(self, 0)


def identity(n: int) -> Braid:
    return Braid(BraidWord(n, ()))


def crossing(n: int, index: int, sign: int = 1) -> Braid:
    return Braid(BraidWord(n, (index if sign > 0 else -index,)))


def close(expr: TangleExpr) -> TangleExpr:
    """close(T), turning braid leaves into BRAID_CLOSURE nodes."""
    if isinstance(expr, Braid):
        return BraidClosure(expr.word)
    return Close(expr)


def replace_at(expr: TangleExpr, path: Tuple[int, ...], new: TangleExpr) -> TangleExpr:
    """Return ``expr`` with the node at ``path`` (child indices) replaced."""
    if not path:
        return new
    kids = list(expr.children())
    head, rest = path[0], path[1:]
    if not 0 <= head < len(kids):
        raise IndexError(f"No child {head} in {type(expr).__name__}")
    kids[head] = replace_at(kids[head], rest, new)
    return expr.with_children(tuple(kids))


def node_at(expr: TangleExpr, path: Tuple[int, ...]) -> TangleExpr:
    for head in path:
        kids = expr.children()
        if not 0 <= head < len(kids):
            raise IndexError(f"No child {head} in {type(expr).__name__}")
        expr = kids[head]
    return expr


def crossing_count(expr: TangleExpr) -> int:
    """Number of crossings written in the expression (families expanded)."""
    if isinstance(expr, (Braid, BraidClosure)):
        return len(expr.word)
    if isinstance(expr, IntegerTangle):
        return abs(expr.twists)
    if isinstance(expr, Rational):
        return sum(abs(m) for m in expr.terms)
    if isinstance(expr, Family):
        if expr.kind == "torus":
            return abs(expr.params[1])
        if expr.kind == "twist":
            return 2 + abs(expr.params[0])
        return sum(abs(p) for p in expr.params)
    return sum(crossing_count(child) for child in expr.children())


def format_expr(expr: TangleExpr) -> str:
    """Render an expression in the input grammar."""
    if isinstance(expr, Braid):
        return str(expr.word)
    if isinstance(expr, CupCap):
        return f"U({expr.index},{expr.strands})"
    if isinstance(expr, Compose):
        return f"comp({format_expr(expr.lower)},{format_expr(expr.upper)})"
    if isinstance(expr, Rotate):
        return f"rot({expr.steps},{format_expr(expr.child)})"
    if isinstance(expr, Circle):
        return f"circle({format_expr(expr.child)})"
    if isinstance(expr, Mirror):
        return f"mirror({format_expr(expr.child)})"
    if isinstance(expr, Mutate):
        return f"m{expr.axis}({format_expr(expr.child)})"
    if isinstance(expr, IntegerTangle):
        return f"int({expr.twists})"
    if isinstance(expr, Rational):
        return f"rat({' '.join(str(m) for m in expr.terms)})"
    if isinstance(expr, TangleSum):
        return f"sum({format_expr(expr.left)},{format_expr(expr.right)})"
    if isinstance(expr, Numerator):
        return f"N({format_expr(expr.child)})"
    if isinstance(expr, Denominator):
        return f"D({format_expr(expr.child)})"
    if isinstance(expr, BraidClosure):
        return f"close({expr.word})"
    if isinstance(expr, Close):
        return f"close({format_expr(expr.child)})"
    if isinstance(expr, Family):
        return f"{expr.kind}({','.join(str(p) for p in expr.params)})"
    raise TypeError(f"Unknown expression node {type(expr).__name__}")


__all__ = [
    "TangleExpr", "Braid", "CupCap", "Compose", "Rotate", "Circle", "Mirror", "Mutate",
    "IntegerTangle", "Rational", "TangleSum", "Numerator", "Denominator", "BraidClosure",
    "Close", "Family", "identity", "crossing", "close", "replace_at", "node_at",
    "crossing_count", "format_expr", "MUTATION_AXES", "FAMILY_KINDS",
]
