"""
HTTP error mapping module for skein4

This module converts library errors into HTTP exceptions for the API routes.
"""

import logging

from fastapi import HTTPException

from skein4.app.errors import BudgetExceededError, Skein4Error, UnsupportedClassError

# Configure logging
logger = logging.getLogger(__name__)


def to_http_exception(error: Exception) -> HTTPException:
    """
    Map an exception raised by a computation to an HTTPException.

    Unsupported inputs and exhausted budgets give 422, other library errors
    400, anything else 500.
    """
    if isinstance(error, (UnsupportedClassError, BudgetExceededError)):
        return HTTPException(status_code=422, detail=str(error))
    if isinstance(error, Skein4Error):
        return HTTPException(status_code=400, detail=str(error))
    logger.error(f"Unexpected error: {error!r}")
    return HTTPException(status_code=500, detail="Internal error")
