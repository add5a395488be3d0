"""
Evaluation routes module for skein4

This module provides API routes for link evaluation, Burau matrices and
3-colorings.
"""

import logging
from typing import Optional

from fastapi import APIRouter, Query

from skein4.app.api.errors import to_http_exception
from skein4.app.schemas.records import ColoringRecord, MatrixRecord, ResultRecord
from skein4.app.services.evaluation import burau_text, evaluate_text, tricolor_text

# Configure logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter(tags=["eval"])


@router.get("/eval", response_model=ResultRecord)
def eval_link(
    expr: str = Query(..., min_length=1),
    spec: str = "spec-i",
    invariant: Optional[str] = Query(None, pattern="^(p1|p2)$"),
):
    """
    Evaluate a link expression

    Args:
        expr: link expression, ``@name`` references allowed
        spec: builtin coefficient spec
        invariant: ``p1`` or ``p2`` instead of a raw spec value

    Returns:
        ResultRecord: raw and normalized values
    """
    try:
        return evaluate_text(expr, spec, invariant)
    except Exception as e:
        raise to_http_exception(e) from None


@router.get("/burau", response_model=MatrixRecord)
def burau(
    braid: str = Query(..., min_length=1),
    mod: Optional[str] = None,
    int_mod: Optional[int] = Query(None, ge=2),
):
    """Burau matrix of a braid word, optionally reduced modulo (mod, int_mod)"""
    try:
        return burau_text(braid, mod, int_mod)
    except Exception as e:
        raise to_http_exception(e) from None


@router.get("/tricolor", response_model=ColoringRecord)
def tricolor(expr: str = Query(..., min_length=1)):
    """3-coloring rank and boundary image of a tangle or link"""
    try:
        return tricolor_text(expr)
    except Exception as e:
        raise to_http_exception(e) from None
