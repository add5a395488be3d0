"""
Tangle model package for skein4

Braid words, tangle expressions, their parser, closures and planar diagrams.
"""

from skein4.app.services.tangles.braid import BraidWord, braid_normalize, free_reduce, cyclic_reduce
from skein4.app.services.tangles.expr import (
    Braid,
    BraidClosure,
    Circle,
    Close,
    Compose,
    CupCap,
    Denominator,
    Family,
    IntegerTangle,
    Mirror,
    Mutate,
    Numerator,
    Rational,
    Rotate,
    TangleExpr,
    TangleSum,
    close,
    crossing,
    format_expr,
    identity,
)
from skein4.app.services.tangles.families import make_family
from skein4.app.services.tangles.parser import parse_tangle
from skein4.app.services.tangles.transforms import mirror, mutate, rotate
from skein4.app.services.tangles.diagram import Diagram, LinkPresentation, build_diagram, closure_stats
from skein4.app.services.tangles.moves import MoveSite, apply_move, sites
