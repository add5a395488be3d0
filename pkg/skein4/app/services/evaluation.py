"""
Evaluation module for skein4

This module turns expression text into result records: the shared path of
the CLI ``eval``, ``burau`` and ``tricolor`` commands and the HTTP routes.
"""

import logging
import time
from typing import Optional

from skein4.app.errors import ArityError, Skein4Error
from skein4.app.schemas.records import ColoringRecord, MatrixRecord, ResultRecord
from skein4.app.services.burau import IdealSpec, burau_record
from skein4.app.services.coeff import builtin_spec
from skein4.app.services.engine import invariant, link_value
from skein4.app.services.engine.invariants import normalize
from skein4.app.services.poly import format_poly
from skein4.app.services.tangles import Braid, BraidClosure, BraidWord, closure_stats, parse_tangle
from skein4.app.services.tricolor import coloring_record

# Configure logging
logger = logging.getLogger(__name__)


def evaluate_text(
    text: str,
    spec_name: Optional[str] = "spec-i",
    invariant_name: Optional[str] = None,
) -> ResultRecord:
    """
    Evaluate a link expression.

    Args:
        text: link expression text; ``@name`` references resolve through the catalog
        spec_name: builtin coefficient spec used when no invariant is requested
        invariant_name: ``p1`` or ``p2``; overrides the spec

    Returns:
        ResultRecord: raw and framing-normalized value with closure statistics

    Raises:
        TangleSyntaxError, ArityError: malformed input
        UnsupportedClassError: the link is not algebraic as presented
    """
    started = time.perf_counter()
    link = parse_tangle(text)
    if link.arity != 0:
        raise ArityError(f"Evaluation needs a link, got a {link.arity}-tangle", subexpression=text)

    if invariant_name:
        result = invariant(invariant_name, link)
        spec, value, normalized = result.spec, result.value, result.normalized
        writhe, framing, components = result.writhe, result.framing, result.components
    else:
        spec = builtin_spec(spec_name or "spec-i")
        stats = closure_stats(link)
        value = link_value(link, spec).value
        normalized = normalize(value, stats.framing, spec)
        writhe, framing, components = stats.writhe, stats.framing, stats.components

    elapsed = (time.perf_counter() - started) * 1000
    logger.info(f"Evaluated {text!r} in {spec.name} ({elapsed:.1f} ms)")
    return ResultRecord(
        input=text,
        spec=spec.name,
        writhe=writhe,
        framing=framing,
        components=components,
        value=format_poly(value),
        normalized_value=format_poly(normalized),
        timing_ms=round(elapsed, 3),
    )


def parse_braid(text: str) -> BraidWord:
    """Braid word of a ``braidN[...]`` or ``close(braidN[...])`` expression."""
    expr = parse_tangle(text, use_catalog=True)
    if isinstance(expr, (Braid, BraidClosure)):
        return expr.word
    raise Skein4Error(f"Expected a braid word such as braid3[1 -2], got {text!r}")


def burau_text(braid: str, polynomial: Optional[str] = None, modulus: Optional[int] = None) -> MatrixRecord:
    """Burau matrix of a braid, reduced modulo (polynomial, modulus) when either is given."""
    word = parse_braid(braid)
    ideal = IdealSpec.parse(polynomial, modulus) if polynomial or modulus else None
    return burau_record(word, ideal)


def tricolor_text(text: str) -> ColoringRecord:
    return coloring_record(parse_tangle(text), text)
