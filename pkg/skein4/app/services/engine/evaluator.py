"""
Evaluator module for skein4

This module evaluates any supported tangle or link expression under a
coefficient spec. 2-tangles go through the basic 2-tangle algebra, 3-tangles
through the 40-element basis, and links through numerator/denominator
closures, braid closures on up to three strands, closures of 2- and
3-tangles, circles, mirrors and the named families.
"""

import logging

from skein4.app.errors import UnsupportedClassError
from skein4.app.services.coeff.specs import CoeffSpec
from skein4.app.services.engine.closed_braid import eval_closed_3braid, two_strand_closure
from skein4.app.services.engine.tangle3 import close_3tangle, eval_3tangle
from skein4.app.services.engine.two_tangle import close_2tangle, eval_2tangle
from skein4.app.services.engine.vectors import SkeinVector
from skein4.app.services.tangles.braid import BraidWord, free_reduce
from skein4.app.services.tangles.expr import (
    BraidClosure,
    Circle,
    Close,
    Denominator,
    Family,
    Mirror,
    Numerator,
    TangleExpr,
)
from skein4.app.services.tangles.families import expand_family
from skein4.app.services.tangles.transforms import mirror

# Configure logging
logger = logging.getLogger(__name__)

MAX_BRAID_STRANDS = 3


def evaluate(expr: TangleExpr, spec: CoeffSpec) -> SkeinVector:
    """
    Value of a tangle or link expression.

    Args:
        expr: expression of arity 0, 2 or 3
        spec: coefficient spec

    Returns:
        SkeinVector: vector over t-powers (links), I/U/S/Sbar or Key3

    Raises:
        UnsupportedClassError: the expression lies outside the supported classes
    """
    if expr.arity == 0:
        return link_value(expr, spec)
    if expr.arity == 2:
        return eval_2tangle(expr, spec)
    if expr.arity == 3:
        return eval_3tangle(expr, spec)
    raise UnsupportedClassError(f"{expr.arity}-tangles are not supported")


def eval_link_2algebraic(link: TangleExpr, spec: CoeffSpec) -> SkeinVector:
    """Numerator or denominator closure of a 2-algebraic tangle, possibly with circles and mirrors."""
    if isinstance(link, Numerator):
        return close_2tangle(eval_2tangle(link.child, spec), spec, numerator=True)
    if isinstance(link, Denominator):
        return close_2tangle(eval_2tangle(link.child, spec), spec, numerator=False)
    if isinstance(link, Circle):
        return eval_link_2algebraic(link.child, spec).scale(spec.t)
    if isinstance(link, Mirror):
        return eval_link_2algebraic(mirror(link.child), spec)
    if isinstance(link, Family):
        return eval_link_2algebraic(expand_family(link), spec)
    raise UnsupportedClassError(f"{type(link).__name__} is not a closure of a 2-algebraic tangle")


def braid_closure_value(word: BraidWord, spec: CoeffSpec) -> SkeinVector:
    """
    Braid closure on any number of strands whose outer unused strands can be
    split off until at most three remain.
    """
    letters = free_reduce(word.letters)
    strands = word.strands
    split = 0
    while strands > MAX_BRAID_STRANDS:
        used = {abs(l) for l in letters}
        if strands - 1 not in used:
            strands -= 1
        elif 1 not in used:
            letters = tuple(l - 1 if l > 0 else l + 1 for l in letters)
            strands -= 1
        else:
            raise UnsupportedClassError(f"Closed {word.strands}-braids are not 3-algebraic as presented")
        split += 1
    if strands == 1:
        value = SkeinVector.link(spec.t)
    elif strands == 2:
        value = two_strand_closure(sum(1 if l > 0 else -1 for l in letters), spec)
    else:
        value = eval_closed_3braid(letters, spec)
    return value.scale(spec.t ** split) if split else value


def link_value(link: TangleExpr, spec: CoeffSpec) -> SkeinVector:
    """Value of a link expression as a combination of trivial links."""
    if isinstance(link, (Numerator, Denominator)):
        return eval_link_2algebraic(link, spec)
    if isinstance(link, BraidClosure):
        return braid_closure_value(link.word, spec)
    if isinstance(link, Close):
        child = link.child
        if child.arity == 2:
            return close_2tangle(eval_2tangle(child, spec), spec, numerator=False)
        if child.arity == 3:
            return close_3tangle(eval_3tangle(child, spec), spec)
        raise UnsupportedClassError(f"close() of a {child.arity}-tangle is not supported")
    if isinstance(link, Circle):
        return link_value(link.child, spec).scale(spec.t)
    if isinstance(link, Mirror):
        return link_value(mirror(link.child), spec)
    if isinstance(link, Family):
        return link_value(expand_family(link), spec)
    raise UnsupportedClassError(f"{type(link).__name__} is not an algebraic link as presented")
