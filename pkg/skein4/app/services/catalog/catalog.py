"""
Catalog module for skein4

This module provides the named-expression catalog: a tab-separated file of
``name, expression, note`` rows seeded from the shipped corpus into the cache
directory, with list/show/add and resolution of ``@name`` references.
"""

import logging
import re
import shutil
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

from skein4.app import config
from skein4.app.errors import CatalogError, Skein4Error
from skein4.app.services.tangles.expr import TangleExpr

# Configure logging
logger = logging.getLogger(__name__)

SHIPPED_CATALOG = Path(__file__).parent / "data" / "catalog.tsv"
NAME_PATTERN = re.compile(r"^[A-Za-z0-9_.]+$")

_resolving: List[str] = []


@dataclass(frozen=True)
class CatalogEntry:
    """One named expression"""

    name: str
    expression: str
    note: str = ""

    def to_line(self) -> str:
        return "\t".join([self.name, self.expression] + ([self.note] if self.note else []))


def catalog_path() -> Path:
    """
    Path of the writable catalog, seeded from the shipped corpus on first use.

    Falls back to the shipped file when the cache directory cannot be written.
    """
    path = Path(config.CATALOG_FILE)
    if path.exists():
        return path
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(SHIPPED_CATALOG, path)
        logger.info(f"Seeded catalog at {path}")
        return path
    except OSError as e:
        logger.warning(f"Cannot seed catalog at {path} ({e}); using the shipped catalog read-only")
        return SHIPPED_CATALOG


def _parse_line(line: str, number: int, path: Path) -> Optional[CatalogEntry]:
    stripped = line.rstrip("\n")
    if not stripped.strip() or stripped.lstrip().startswith("#"):
        return None
    fields = stripped.split("\t")
    if len(fields) < 2:
        raise CatalogError(f"{path}:{number}: expected name<TAB>expression")
    name, expression = fields[0].strip(), fields[1].strip()
    note = fields[2].strip() if len(fields) > 2 else ""
    return CatalogEntry(name, expression, note)


def load_catalog(path: Optional[Path] = None) -> Dict[str, CatalogEntry]:
    path = path or catalog_path()
    entries: Dict[str, CatalogEntry] = {}
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            entry = _parse_line(line, number, path)
            if entry is not None:
                entries[entry.name] = entry
    return entries


def list_entries() -> List[CatalogEntry]:
    return list(load_catalog().values())


def get_entry(name: str) -> CatalogEntry:
    entries = load_catalog()
    if name not in entries:
        raise CatalogError(f"Unknown catalog entry {name!r}")
    return entries[name]


def show(name: str) -> str:
    """Expression text stored under ``name``."""
    return get_entry(name).expression


def add(name: str, expression: str, note: str = "") -> CatalogEntry:
    """
    Append a named expression to the catalog.

    Args:
        name: entry name (letters, digits, ``_`` and ``.``)
        expression: tangle or link expression text; must parse
        note: free-text note

    Returns:
        CatalogEntry: the stored entry

    Raises:
        CatalogError: invalid or duplicate name, unparsable expression, read-only catalog
    """
    from skein4.app.services.tangles.parser import parse_tangle

    if not NAME_PATTERN.match(name):
        raise CatalogError(f"Invalid catalog name {name!r}")
    path = catalog_path()
    if path == SHIPPED_CATALOG and Path(config.CATALOG_FILE) != SHIPPED_CATALOG:
        raise CatalogError(f"Catalog {config.CATALOG_FILE} is not writable")
    if name in load_catalog(path):
        raise CatalogError(f"Catalog entry {name!r} already exists")
    try:
        parse_tangle(expression)
    except Skein4Error as e:
        raise CatalogError(f"Cannot add {name!r}: {e}") from None
    entry = CatalogEntry(name, expression.strip(), note.strip())
    with open(path, "a", encoding="utf-8") as handle:
        handle.write(entry.to_line() + "\n")
    logger.info(f"Added catalog entry {name}")
    return entry


def resolve_reference(name: str) -> TangleExpr:
    """Parse the expression behind ``@name``; references may nest but not cycle."""
    from skein4.app.services.tangles.parser import parse_tangle

    if name in _resolving:
        raise CatalogError(f"Cyclic catalog reference through {' -> '.join(_resolving + [name])}")
    expression = show(name)
    _resolving.append(name)
    try:
        return parse_tangle(expression, resolver=resolve_reference)
    finally:
        _resolving.pop()
