"""
Table cache module for skein4

This module persists memoized multiplication, rotation and closure tables in
the cache database. Rows are keyed by spec name, convention version, table
kind and the two operand keys; values are stored one ``key<TAB>polynomial``
line per term. Any database failure switches the store off with a warning,
and the engine continues in memory.
"""

import logging
import threading
from typing import Callable, Hashable, Optional, Tuple

from sqlalchemy.exc import IntegrityError, SQLAlchemyError

from skein4.app import config
from skein4.app.errors import Skein4Error
from skein4.app.services.coeff.specs import CoeffSpec
from skein4.app.services.engine.vectors import SkeinVector
from skein4.app.services.poly import format_poly, parse_poly

# Configure logging
logger = logging.getLogger(__name__)

_init_lock = threading.Lock()
_initialized: Optional[bool] = None


def _ensure_database() -> bool:
    global _initialized
    with _init_lock:
        if _initialized is None:
            from skein4.app.db.database import init_db

            _initialized = init_db()
            if not _initialized:
                logger.warning("Table cache unavailable; continuing with in-memory tables")
        return _initialized


def encode_vector(vector: SkeinVector) -> str:
    return "\n".join(f"{key}\t{format_poly(coefficient)}" for key, coefficient in vector.items())


def decode_vector(text: str, arity: int, spec: CoeffSpec, parse_key: Callable[[str], Hashable]) -> SkeinVector:
    entries = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        key_text, poly_text = line.split("\t", 1)
        entries[parse_key(key_text)] = parse_poly(poly_text, spec.ring)
    return SkeinVector(arity, spec.ring, entries)


class VectorStore:
    """
    Read-through/write-behind store for one memo table.

    Args:
        kind: table kind (two_tangle, three_tangle, rotation3, closed_braid)
        spec: coefficient spec the values belong to
        arity: arity of the stored vectors
        key_text: renders a memo key as (left, right) text
        parse_key: reads a basis key of a stored vector back
    """

    def __init__(
        self,
        kind: str,
        spec: CoeffSpec,
        arity: int,
        key_text: Callable[[Hashable], Tuple[str, str]],
        parse_key: Callable[[str], Hashable],
    ):
        self.kind = kind
        self.spec = spec
        self.arity = arity
        self.key_text = key_text
        self.parse_key = parse_key
        self.enabled = config.PERSIST_TABLES

    def _disable(self, exc: Exception) -> None:
        if self.enabled:
            logger.warning(f"Disabling {self.kind} table cache for {self.spec.name}: {exc}")
        self.enabled = False

    def fetch(self, key: Hashable) -> Optional[SkeinVector]:
        if not self.enabled or not _ensure_database():
            return None
        from skein4.app.db.database import SessionLocal
        from skein4.app.models import TableEntry

        left, right = self.key_text(key)
        db = SessionLocal()
        try:
            row = (
                db.query(TableEntry)
                .filter(
                    TableEntry.spec == self.spec.name,
                    TableEntry.version == config.CONVENTION_VERSION,
                    TableEntry.kind == self.kind,
                    TableEntry.left_key == left,
                    TableEntry.right_key == right,
                )
                .first()
            )
            if row is None:
                return None
            logger.debug(f"Loaded {self.kind} entry {left} {right} for {self.spec.name}")
            return decode_vector(row.value, self.arity, self.spec, self.parse_key)
        except (SQLAlchemyError, Skein4Error, ValueError) as exc:
            self._disable(exc)
            return None
        finally:
            db.close()

    def save(self, key: Hashable, value: SkeinVector) -> None:
        if not self.enabled or not _ensure_database():
            return
        from skein4.app.db.database import SessionLocal
        from skein4.app.models import TableEntry

        left, right = self.key_text(key)
        db = SessionLocal()
        try:
            db.add(
                TableEntry(
                    spec=self.spec.name,
                    version=config.CONVENTION_VERSION,
                    kind=self.kind,
                    left_key=left,
                    right_key=right,
                    value=encode_vector(value),
                )
            )
            db.commit()
            logger.debug(f"Stored {self.kind} entry {left} {right} for {self.spec.name}")
        except IntegrityError:
            # Another writer stored the same entry first
            db.rollback()
        except SQLAlchemyError as exc:
            db.rollback()
            self._disable(exc)
        finally:
            db.close()


def clear_tables(spec_name: Optional[str] = None) -> int:
    """Delete cached rows (all specs when ``spec_name`` is None); returns the row count."""
    if not _ensure_database():
        return 0
    from skein4.app.db.database import SessionLocal
    from skein4.app.models import TableEntry

    db = SessionLocal()
    try:
        query = db.query(TableEntry)
        if spec_name is not None:
            query = query.filter(TableEntry.spec == spec_name)
        count = query.delete()
        db.commit()
        logger.info(f"Cleared {count} cached table entries")
        return count
    finally:
        db.close()


def cache_ready() -> bool:
    """True when persistence is on and the cache database is usable."""
    return config.PERSIST_TABLES and _ensure_database()
