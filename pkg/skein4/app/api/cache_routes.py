"""
Cache routes module for skein4

This module provides API routes inspecting and clearing the persisted memo
tables.
"""

import logging
from typing import Optional

from fastapi import APIRouter, Depends, HTTPException
from sqlalchemy import func
from sqlalchemy.orm import Session

from skein4.app import config
from skein4.app.db.database import get_db
from skein4.app.models import TableEntry
from skein4.app.services.engine.table_cache import cache_ready, clear_tables

# Configure logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter(prefix="/cache", tags=["cache"])


def _require_cache() -> None:
    if not cache_ready():
        raise HTTPException(status_code=503, detail="Table cache is disabled or unavailable")


@router.get("/")
def cache_summary(spec: Optional[str] = None, db: Session = Depends(get_db)):
    """
    Count cached table entries

    Args:
        spec: restrict to one coefficient spec

    Returns:
        Row counts per spec and table kind for the current convention version
    """
    _require_cache()
    query = db.query(TableEntry.spec, TableEntry.kind, func.count(TableEntry.id)).filter(
        TableEntry.version == config.CONVENTION_VERSION
    )
    if spec:
        query = query.filter(TableEntry.spec == spec)
    rows = query.group_by(TableEntry.spec, TableEntry.kind).all()

    counts = {}
    for spec_name, kind, count in rows:
        counts.setdefault(spec_name, {})[kind] = count
    return {"version": config.CONVENTION_VERSION, "entries": counts}


@router.delete("/")
def cache_clear(spec: Optional[str] = None):
    """Delete cached rows of one spec, or of every spec"""
    _require_cache()
    removed = clear_tables(spec)
    logger.info(f"Cleared table cache via API (spec={spec}, rows={removed})")
    return {"removed": removed}
