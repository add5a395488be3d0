"""
Family value module for skein4

This module evaluates the named families directly from powers of the twist
operator: (2,n) torus links as closures of a single twist region, twist knots
from three initial links and the twist power of the horizontal region, and
pretzel links column by column. For spec-i the torus values are checked
against the closed form in s.
"""

import logging
from functools import reduce
from typing import Dict, Sequence

from skein4.app.errors import FormulaMismatchError, UnsupportedClassError
from skein4.app.services.coeff.specs import CoeffSpec
from skein4.app.services.engine.closed_braid import two_strand_closure
from skein4.app.services.engine.twist import (
    closed_form_denominator,
    require_closed_form,
    to_s_ring,
    torus_closed_form,
    twist_power,
)
from skein4.app.services.engine.two_tangle import close_2tangle, eval_2tangle, sum_vectors, twist_vector
from skein4.app.services.engine.vectors import SkeinVector
from skein4.app.services.poly import RingElement
from skein4.app.services.tangles.families import expand_family
from skein4.app.services.tangles.expr import Family

# Configure logging
logger = logging.getLogger(__name__)

CLOSED_FORM_SPECS = ("spec-i",)

# twist(m) for the three initial links
TWIST_ANCHORS = (1, 0, -1)


def torus_value(n: int, spec: CoeffSpec, check: bool = True) -> SkeinVector:
    """
    Value of the (2,n) torus link as the closure of the 2-braid s^n.

    For spec-i the value is compared with the closed form when ``check`` is
    set.

    Raises:
        FormulaMismatchError: the closed form disagrees with the matrix power
    """
    value = two_strand_closure(n, spec)
    if check and spec.name in CLOSED_FORM_SPECS:
        require_closed_form(n)
        require_torus_closed_form(n, value.value)
    return value


def torus_residual(n: int, value: RingElement) -> RingElement:
    """Denominator times a^n times T(2,n), minus the closed form, in Z[s^(+-1), a, t]."""
    s_value = to_s_ring(value)
    a = s_value.spec.var("a")
    return closed_form_denominator() * a ** n * s_value - torus_closed_form(n)


def require_torus_closed_form(n: int, value: RingElement) -> None:
    if not torus_residual(n, value).is_zero():
        raise FormulaMismatchError(f"Closed form of T(2,{n}) disagrees with the twist power")


def twist_anchor(m: int, spec: CoeffSpec) -> SkeinVector:
    """twist(m) for m in (1, 0, -1), evaluated as a 2-algebraic link."""
    expr = expand_family(Family("twist", (m,)))
    return close_2tangle(eval_2tangle(expr.child, spec), spec, numerator=True)


def expected_anchors(spec: CoeffSpec) -> Dict[int, SkeinVector]:
    """twist(1) = T(2,3), twist(0) = a^-2 T1, twist(-1) = a T1."""
    return {
        1: torus_value(3, spec, check=False),
        0: SkeinVector.link(spec.a_power(-2) * spec.t),
        -1: SkeinVector.link(spec.a * spec.t),
    }


def twist_value(n: int, spec: CoeffSpec) -> SkeinVector:
    """
    Twist knot twist(n) = N(sum(s^2, int(-n))).

    The horizontal region int(-n) is a^n (c(-1) int(-1) + c(0) int(0) +
    c(1) int(1)) with c the twist power, so twist(n) combines the three
    initial links twist(1), twist(0), twist(-1).
    """
    c = twist_power(spec, -n)
    scale = spec.a_power(n)
    anchors = {m: twist_anchor(m, spec) for m in TWIST_ANCHORS}
    return anchors[1].scale(c[0] * scale) + anchors[0].scale(c[1] * scale) + anchors[-1].scale(c[2] * scale)


def pretzel_value(columns: Sequence[int], spec: CoeffSpec) -> SkeinVector:
    """Numerator closure of the sum of vertical twist columns, each expanded by its twist power."""
    if not columns:
        raise UnsupportedClassError("pretzel() needs at least one column")
    tangle = reduce(lambda left, right: sum_vectors(left, right, spec), (twist_vector(n, spec) for n in columns))
    return close_2tangle(tangle, spec, numerator=True)


def family_value(kind: str, params: Sequence[int], spec: CoeffSpec) -> SkeinVector:
    """
    Value of a named family member.

    Args:
        kind: torus, twist or pretzel
        params: (2, n) for torus, (n,) for twist, the columns for pretzel
        spec: coefficient spec

    Returns:
        SkeinVector: link vector over t-powers
    """
    node = Family(kind, tuple(params))
    logger.debug(f"Evaluating family {kind}{tuple(params)} under {spec.name}")
    if node.kind == "torus":
        return torus_value(node.params[1], spec)
    if node.kind == "twist":
        return twist_value(node.params[0], spec)
    return pretzel_value(node.params, spec)
