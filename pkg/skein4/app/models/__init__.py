"""
Models package for skein4

This package contains all database models.
"""

from skein4.app.models.table_entry import TABLE_KINDS, TableEntry
