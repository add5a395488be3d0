"""
Check routes module for skein4

This module provides API routes running the named check suites.
"""

import logging
from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from skein4.app.api.errors import to_http_exception
from skein4.app.schemas.records import SuiteReport
from skein4.app.services.checks import SUITES, run_suite

# Configure logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter(prefix="/check", tags=["check"])


@router.get("/")
def list_suites():
    """Names of the available suites"""
    return {"suites": list(SUITES)}


@router.get("/{suite}", response_model=SuiteReport)
def check(
    suite: str,
    spec: Optional[str] = None,
    trials: Optional[int] = Query(None, ge=1, le=10000),
    seed: Optional[int] = None,
):
    """
    Run a check suite

    Args:
        suite: suite name
        spec: coefficient spec for the conditions and rotation suites
        trials: random trials for the battery and invariance suites
        seed: seed of the random trials

    Returns:
        SuiteReport: one item per check
    """
    if suite not in SUITES:
        raise HTTPException(status_code=404, detail=f"Unknown suite {suite}")
    try:
        return run_suite(suite, spec=spec, trials=trials, seed=seed)
    except Exception as e:
        raise to_http_exception(e) from None
