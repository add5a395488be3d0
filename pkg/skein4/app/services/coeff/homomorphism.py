"""
Homomorphism module for skein4

This module provides h(L) = a^fr(L) * t^com(L), which factors through the
skein module of spec-ii, the skein combination of h over the four twist
resolutions at a crossing of a closed braid, and the check that the
Kauffman bracket at A = b*w (w a primitive cube root of unity) satisfies the
spec-iii relation.
"""

import logging
from typing import Dict, Optional, Union

from skein4.app.errors import RingError, Skein4Error
from skein4.app.services.coeff.specs import MARKER, CoeffSpec, builtin_spec
from skein4.app.services.poly import PowerRelation, RingElement, RingSpec
from skein4.app.services.tangles.braid import BraidWord
from skein4.app.services.tangles.diagram import closure_stats
from skein4.app.services.tangles.expr import TangleExpr

# Configure logging
logger = logging.getLogger(__name__)

# Z[b^(+-1), w]/(w^2 + w + 1)
BRACKET_RING = RingSpec(
    "bracket",
    ("b", "w"),
    invertible=frozenset({"b"}),
    relations=(PowerRelation.of("w", 2, {0: -1, 1: -1}),),
)


def _h_ring(spec: Optional[CoeffSpec]) -> RingSpec:
    ring = (spec or builtin_spec("spec-ii")).ring
    if "a" not in ring.variables or MARKER not in ring.variables:
        raise RingError(f"h needs a ring with a and {MARKER}, not {ring.name}")
    return ring


def h_invariant(link: Union[BraidWord, TangleExpr], spec: Optional[CoeffSpec] = None) -> RingElement:
    """
    h(L) = a^(writhe mod 4) * t^components.

    Args:
        link: closed braid given by its word, or a link expression
        spec: spec whose ring holds the value (spec-ii by default)

    Returns:
        RingElement: h(L)
    """
    ring = _h_ring(spec)
    if isinstance(link, BraidWord):
        writhe, components = link.writhe, link.closure_components()
    else:
        stats = closure_stats(link)
        writhe, components = stats.writhe, stats.components
    return ring.monomial({"a": writhe % 4, MARKER: components})


def twist_resolutions(word: BraidWord, site: int, shift: int = 0) -> Dict[int, BraidWord]:
    """
    The closed braids L_k, k = 0..3, with the letter at ``site`` replaced by
    s_i^(k + shift).
    """
    if not 0 <= site < len(word):
        raise Skein4Error(f"No crossing at position {site} of {word}")
    i = abs(word.letters[site])
    head, tail = word.letters[:site], word.letters[site + 1:]
    result = {}
    for k in range(4):
        power = k + shift
        letter = i if power >= 0 else -i
        result[k] = BraidWord(word.strands, head + (letter,) * abs(power) + tail)
    return result


def h_combination(spec: CoeffSpec, word: BraidWord, site: int, shift: int = 0) -> RingElement:
    """b0 h(L0) + b1 h(L1) + b2 h(L2) + b3 h(L3) at one crossing site."""
    ring = _h_ring(spec)
    total = ring.zero()
    for k, resolution in twist_resolutions(word, site, shift).items():
        total = total + spec.b[k] * h_invariant(resolution, spec)
    return total


def h_annihilates(spec: CoeffSpec, word: BraidWord, site: int, shift: int = 0) -> bool:
    """True when h kills the spec's skein combination at the site."""
    residual = h_combination(spec, word, site, shift)
    if not residual.is_zero():
        logger.debug(f"h leaves {residual} at site {site} of {word} under {spec.name}")
    return residual.is_zero()


def bracket_twist_coefficients(k: int):
    """(I, U) coefficients of s^k in the bracket algebra at A = b*w, k >= 0."""
    b, w = BRACKET_RING.vars("b", "w")
    big_a = b * w
    big_a_inv = b ** -1 * w ** 2
    coefficient_i, coefficient_u = BRACKET_RING.one(), BRACKET_RING.zero()
    for _ in range(k):
        # s^(j+1) = s^j * (A I + A^-1 U) with U^2 = delta U and s U = -A^-3 U
        coefficient_u = coefficient_i * big_a_inv - big_a_inv ** 3 * coefficient_u
        coefficient_i = coefficient_i * big_a
    return coefficient_i, coefficient_u


def bracket_check() -> bool:
    """
    The bracket at A = b*w satisfies L0 + b(b^2+b^-2) L1 + (b^2+b^-2) L2 + b L3 = 0
    with the framing factor -A^3 = -b^3.
    """
    spec = builtin_spec("spec-iii")
    b, w = BRACKET_RING.vars("b", "w")
    coefficients = [c.substitute({"b": b}, target=BRACKET_RING, keep_others=False) for c in spec.b]
    total_i, total_u = BRACKET_RING.zero(), BRACKET_RING.zero()
    for k, coefficient in enumerate(coefficients):
        ci, cu = bracket_twist_coefficients(k)
        total_i = total_i + coefficient * ci
        total_u = total_u + coefficient * cu
    framing = -((b * w) ** 3)
    return total_i.is_zero() and total_u.is_zero() and (framing + b ** 3).is_zero()
