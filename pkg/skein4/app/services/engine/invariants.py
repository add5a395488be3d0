"""
Invariants module for skein4

This module provides the two polynomial link invariants: P1, the spec-i
value at a = 1 in Z[x, t], and P2, the spec-iii value in Z[b^(+-1), t] of the
blackboard-framed diagram, reported with its writhe and framing and with the
normalized form (-b^3)^(-framing) * P2.
"""

import logging
from dataclasses import dataclass

from skein4.app.errors import ArityError, Skein4Error
from skein4.app.services.coeff.specs import CoeffSpec, builtin_spec
from skein4.app.services.engine.evaluator import link_value
from skein4.app.services.poly import RingElement
from skein4.app.services.tangles.diagram import closure_stats
from skein4.app.services.tangles.expr import TangleExpr

# Configure logging
logger = logging.getLogger(__name__)

INVARIANT_SPECS = {"p1": "p1", "p2": "spec-iii"}


@dataclass(frozen=True)
class InvariantValue:
    """Value of an invariant on one diagram with its closure statistics"""

    which: str
    spec: CoeffSpec
    value: RingElement
    normalized: RingElement
    writhe: int
    framing: int
    components: int


def invariant_spec(which: str) -> CoeffSpec:
    key = which.lower()
    if key not in INVARIANT_SPECS:
        raise Skein4Error(f"Unknown invariant {which!r}; expected one of {', '.join(INVARIANT_SPECS)}")
    return builtin_spec(INVARIANT_SPECS[key])


def normalize(value: RingElement, framing: int, spec: CoeffSpec) -> RingElement:
    """Divide out the framing unit: a^(-framing) * value."""
    return spec.a_power(-framing) * value


def invariant(which: str, link: TangleExpr) -> InvariantValue:
    """
    P1 or P2 of a link expression.

    Args:
        which: ``p1`` or ``p2``
        link: link expression (arity 0)

    Returns:
        InvariantValue: value, normalized value, writhe, framing, components

    Raises:
        UnsupportedClassError: the link is not 2-algebraic or a closed 3-braid as presented
    """
    if link.arity != 0:
        raise ArityError(f"Invariants need a link, got a {link.arity}-tangle", subexpression=str(link))
    spec = invariant_spec(which)
    stats = closure_stats(link)
    value = link_value(link, spec).value
    logger.debug(f"{which.upper()} of {link}: writhe {stats.writhe}, framing {stats.framing}")
    return InvariantValue(
        which=which.lower(),
        spec=spec,
        value=value,
        normalized=normalize(value, stats.framing, spec),
        writhe=stats.writhe,
        framing=stats.framing,
        components=stats.components,
    )
