"""
Configuration module for skein4

This module reads runtime settings from the environment and an optional .env
file.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() not in ("0", "false", "no", "off")


# Cache directory for the table database and the writable catalog
CACHE_DIR = Path(os.getenv("SKEIN4_CACHE_DIR", str(Path.home() / ".cache" / "skein4"))).expanduser()

DATABASE_URL = os.getenv("SKEIN4_DATABASE_URL", f"sqlite:///{CACHE_DIR / 'skein4.db'}")
CATALOG_FILE = Path(os.getenv("SKEIN4_CATALOG_FILE", str(CACHE_DIR / "catalog.tsv"))).expanduser()
PERSIST_TABLES = _flag("SKEIN4_PERSIST_TABLES", "1")

# Search and reduction budgets
BRAID_MAX_LENGTH = int(os.getenv("SKEIN4_BRAID_MAX_LENGTH", "16"))
BRAID_FRONTIER_CAP = int(os.getenv("SKEIN4_BRAID_FRONTIER_CAP", "1000000"))
REDUCTION_BUDGET = int(os.getenv("SKEIN4_REDUCTION_BUDGET", "200000"))
ORACLE_CROSSINGS = int(os.getenv("SKEIN4_ORACLE_CROSSINGS", "12"))

LOG_LEVEL = os.getenv("SKEIN4_LOG_LEVEL", "INFO").upper()
API_PORT = int(os.getenv("SKEIN4_API_PORT", "8000"))

# Bumped whenever a basis, sign or rotation convention changes; stale cached
# table rows are ignored.
CONVENTION_VERSION = "1"

CORS_ORIGINS = [origin.strip() for origin in os.getenv("SKEIN4_CORS_ORIGINS", "*").split(",") if origin.strip()]
