"""
Database initialization script for skein4

This script creates the cache database and the memo table schema.
Run it once before enabling persisted tables, or let the first run create it.
"""

import logging
import sys

from skein4.app import config
from skein4.app.db.database import init_db

# Configure logging
logging.basicConfig(
    level=config.LOG_LEVEL,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)


def main() -> int:
    logger.info(f"Initializing cache database at {config.DATABASE_URL}...")
    if init_db():
        logger.info("Database initialization completed successfully")
        return 0
    logger.error("Database initialization failed")
    return 1


if __name__ == "__main__":
    sys.exit(main())
