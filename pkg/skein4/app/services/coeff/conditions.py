"""
Conditions module for skein4

This module provides the consistency conditions a specialization must meet
for trivial links to stay independent, the disjoint-union factor relating
T(n+1) to T(n) when they do not, and the resolution of trivial-link markers
through that factor.
"""

import logging
from typing import Callable, Dict

from skein4.app.errors import NoScalarRelationError, NonUnitError, RingError
from skein4.app.services.coeff.specs import MARKER, CoeffSpec
from skein4.app.services.poly import RingElement, divide_exact

# Configure logging
logger = logging.getLogger(__name__)


def _c41(s: CoeffSpec) -> RingElement:
    ai = s.a_inv
    return s.b0 + ai * s.b1 + ai ** 2 * s.b2 + ai ** 3 * s.b3


def _c42a(s: CoeffSpec) -> RingElement:
    return s.b0 * s.b1 - s.b2 * s.b3


def _c42b(s: CoeffSpec) -> RingElement:
    ai = s.a_inv
    return s.a * s.b0 * s.b2 + ai * s.b0 ** 2 - ai * s.b1 * s.b3 - s.a * s.b3 ** 2


def _c43(s: CoeffSpec) -> RingElement:
    return (s.a ** 4 - 1) * (s.b3 ** 3 + s.a * s.b0 ** 3)


CONDITIONS: Dict[str, Callable[[CoeffSpec], RingElement]] = {
    "C4.1": _c41,
    "C4.2a": _c42a,
    "C4.2b": _c42b,
    "C4.3": _c43,
}


def condition_residuals(spec: CoeffSpec) -> Dict[str, RingElement]:
    """Left-hand sides of the conditions, each of which should vanish."""
    return {name: check(spec) for name, check in CONDITIONS.items()}


def check_conditions(spec: CoeffSpec) -> Dict[str, bool]:
    """
    Evaluate each condition exactly in the spec's ring.

    Args:
        spec: coefficient spec

    Returns:
        Dict[str, bool]: condition name -> holds
    """
    results = {name: residual.is_zero() for name, residual in condition_residuals(spec).items()}
    logger.debug(f"Conditions for {spec.name}: {results}")
    return results


def disjoint_union_factor(spec: CoeffSpec) -> RingElement:
    """
    Factor mu with L + T1 = mu * L.

    Raises:
        NoScalarRelationError: b0*b1 - b2*b3 vanishes or does not divide the
            numerator, so trivial links carry no scalar relation
    """
    s = spec
    ai = s.a_inv
    numerator = ai * s.b1 * s.b3 - s.a * s.b0 * s.b2 + s.a * s.b3 ** 2 - ai * s.b0 ** 2
    denominator = s.b0 * s.b1 - s.b2 * s.b3
    if denominator.is_zero():
        raise NoScalarRelationError(f"Trivial links are independent in {spec.name}; no scalar relation")
    try:
        return divide_exact(numerator, denominator)
    except (NonUnitError, RingError) as exc:
        raise NoScalarRelationError(f"No scalar relation in {spec.name}: {exc}") from exc


def trivial_link_value(spec: CoeffSpec, n: int) -> RingElement:
    """Value mu^(n-1) * t of the n-component unlink."""
    if n < 1:
        raise ValueError("A trivial link needs at least one component")
    return disjoint_union_factor(spec) ** (n - 1) * spec.t


def trivial_link_resolution(value: RingElement, spec: CoeffSpec) -> RingElement:
    """Rewrite every marker power t^k (k >= 1) as mu^(k-1) * t."""
    mu = disjoint_union_factor(spec)
    t = spec.t
    result = spec.zero()
    for k, coefficient in value.collect(MARKER).items():
        if k == 0:
            result = result + coefficient
            continue
        result = result + coefficient * mu ** (k - 1) * t
    return result
