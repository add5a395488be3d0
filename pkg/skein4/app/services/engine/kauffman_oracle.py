"""
Kauffman oracle module for skein4

This module computes the framed Kauffman value of a link diagram by brute
force, independently of the tangle algebra: crossings met first from below
are switched with L+ + L- = z(L0 + Linf) until the diagram is descending,
and a descending diagram with c components and framing f is the unlink
a^f * mu^(c-1) * t with mu = (a + a^-1 - z)/z. Arithmetic is done in sympy
and read back into the kauffman ring.
"""

import logging
from typing import Dict, Optional, Tuple

import sympy as sp

from skein4.app import config
from skein4.app.errors import BudgetExceededError
from skein4.app.services.coeff.conditions import trivial_link_resolution
from skein4.app.services.coeff.specs import builtin_spec
from skein4.app.services.poly import RingElement
from skein4.app.services.poly.ring import from_sympy
from skein4.app.services.tangles.diagram import Diagram, build_diagram, diagram_stats, glue_edges, link_passages
from skein4.app.services.tangles.expr import TangleExpr

# Configure logging
logger = logging.getLogger(__name__)

Z, A, T = sp.symbols("z a t")
MU = (A + 1 / A - Z) / Z


def first_ascending_crossing(diagram: Diagram) -> Optional[int]:
    """First crossing met from below along the traversal, or None for a descending diagram."""
    seen = set()
    for passages in link_passages(diagram):
        for ci, slot in passages:
            if ci in seen:
                continue
            if slot % 2 == 0:
                return ci
            seen.add(ci)
    return None


def _remove(diagram: Diagram, ci: int, pairs) -> Diagram:
    rest = diagram.crossings[:ci] + diagram.crossings[ci + 1:]
    boundary, crossings, loops = glue_edges((), rest, pairs, diagram.loops)
    return Diagram(0, boundary, crossings, loops)


def smoothings(diagram: Diagram, ci: int) -> Tuple[Diagram, Diagram]:
    """The two crossingless resolutions at crossing ``ci``."""
    a, b, c, d = diagram.crossings[ci]
    return _remove(diagram, ci, [(a, b), (c, d)]), _remove(diagram, ci, [(a, d), (b, c)])


def switched(diagram: Diagram, ci: int) -> Diagram:
    a, b, c, d = diagram.crossings[ci]
    crossings = list(diagram.crossings)
    crossings[ci] = (b, c, d, a)
    return Diagram(0, diagram.boundary, tuple(crossings), diagram.loops)


class _Oracle:
    def __init__(self):
        self.memo: Dict[Tuple, sp.Expr] = {}

    def value(self, diagram: Diagram) -> sp.Expr:
        key = (diagram.crossings, diagram.loops)
        if key not in self.memo:
            self.memo[key] = self._compute(diagram)
        return self.memo[key]

    def _compute(self, diagram: Diagram) -> sp.Expr:
        ci = first_ascending_crossing(diagram)
        if ci is None:
            _, framing, components = diagram_stats(diagram)
            return sp.expand(A ** framing * MU ** (components - 1) * T)
        zero, infinity = smoothings(diagram, ci)
        return sp.expand(Z * (self.value(zero) + self.value(infinity)) - self.value(switched(diagram, ci)))


def kauffman_oracle(link: TangleExpr, bound: Optional[int] = None) -> RingElement:
    """
    Framed Kauffman value of a link expression with the unknot valued t.

    Args:
        link: link expression (arity 0)
        bound: crossing budget, defaults to config.ORACLE_CROSSINGS

    Returns:
        RingElement: value in Z[z^(+-1), a^(+-1), t]

    Raises:
        BudgetExceededError: the diagram has more crossings than the budget
    """
    bound = config.ORACLE_CROSSINGS if bound is None else bound
    diagram = build_diagram(link)
    if len(diagram.crossings) > bound:
        raise BudgetExceededError(
            f"Oracle bound is {bound} crossings, diagram has {len(diagram.crossings)}",
            stuck=str(link),
        )
    oracle = _Oracle()
    value = oracle.value(diagram)
    logger.debug(f"Oracle evaluated {len(oracle.memo)} diagrams for {link}")
    return from_sympy(value, builtin_spec("kauffman").ring)


def engine_kauffman(link: TangleExpr) -> RingElement:
    """Engine value under the kauffman spec with trivial links resolved to mu^(k-1) t."""
    from skein4.app.services.engine.evaluator import link_value

    spec = builtin_spec("kauffman")
    return trivial_link_resolution(link_value(link, spec).value, spec)


def compare_with_engine(link: TangleExpr, bound: Optional[int] = None) -> Tuple[RingElement, RingElement]:
    """(oracle value, resolved engine value); the two agree when the engine is sound."""
    return kauffman_oracle(link, bound), engine_kauffman(link)
