"""
Catalog package for skein4

Named link and tangle expressions referenced as ``@name``.
"""

from skein4.app.services.catalog.catalog import (
    CatalogEntry,
    add,
    catalog_path,
    get_entry,
    list_entries,
    load_catalog,
    resolve_reference,
    show,
)
