"""
Catalog routes module for skein4

This module provides API routes for the named-expression catalog.
"""

import logging

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from skein4.app.api.errors import to_http_exception
from skein4.app.errors import CatalogError
from skein4.app.services import catalog

# Configure logging
logger = logging.getLogger(__name__)

# Create router
router = APIRouter(prefix="/catalog", tags=["catalog"])


class CatalogItem(BaseModel):
    """Catalog entry as sent and returned over HTTP"""

    name: str = Field(..., min_length=1)
    expression: str = Field(..., min_length=1)
    note: str = ""


@router.get("/")
def list_catalog():
    """All catalog entries"""
    return [CatalogItem(name=e.name, expression=e.expression, note=e.note) for e in catalog.list_entries()]


@router.get("/{name}", response_model=CatalogItem)
def get_catalog_entry(name: str):
    """One catalog entry by name"""
    try:
        entry = catalog.get_entry(name)
    except CatalogError:
        raise HTTPException(status_code=404, detail="Catalog entry not found") from None
    return CatalogItem(name=entry.name, expression=entry.expression, note=entry.note)


@router.post("/", response_model=CatalogItem, status_code=201)
def add_catalog_entry(item: CatalogItem):
    """Append a named expression"""
    try:
        entry = catalog.add(item.name, item.expression, item.note)
    except Exception as e:
        raise to_http_exception(e) from None
    return CatalogItem(name=entry.name, expression=entry.expression, note=entry.note)
