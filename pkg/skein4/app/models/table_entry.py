"""
Table entry model module for skein4

This module provides the model for one memoized table value. Rows are written
once and never updated; a convention change bumps the version instead.
"""

from sqlalchemy import Column, DateTime, Integer, String, Text, UniqueConstraint
from sqlalchemy.sql import func

from skein4.app.db.database import Base

TABLE_KINDS = ("two_tangle", "three_tangle", "rotation3", "closed_braid")


class TableEntry(Base):
    """Value of a product, rotation or closure of basis tangles under one spec"""
    __tablename__ = "table_entries"
    __table_args__ = (
        UniqueConstraint("spec", "version", "kind", "left_key", "right_key", name="uq_table_entry"),
    )

    id = Column(Integer, primary_key=True, index=True)

    # Lookup key
    spec = Column(String, index=True, nullable=False)
    version = Column(String, nullable=False)
    kind = Column(String, index=True, nullable=False)
    left_key = Column(String, nullable=False)
    right_key = Column(String, nullable=False, default="")

    # Linear combination, one "key<TAB>polynomial" line per term
    value = Column(Text, nullable=False)
    computed_at = Column(DateTime, server_default=func.now(), nullable=False)
