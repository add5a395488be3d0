"""
Database connection module for skein4

This module provides the connection to the cache database holding memoized
multiplication and rotation tables.
"""

import logging
from pathlib import Path
from typing import Generator

import sqlalchemy
from sqlalchemy.orm import Session, declarative_base, sessionmaker
from sqlalchemy_utils import create_database, database_exists

from skein4.app import config

# Configure logging
logger = logging.getLogger(__name__)

DATABASE_URL = config.DATABASE_URL

# SQLite connections are shared across request threads
_connect_args = {"check_same_thread": False} if DATABASE_URL.startswith("sqlite") else {}

engine = sqlalchemy.create_engine(DATABASE_URL, connect_args=_connect_args)

SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)

# Base class for database models
Base = declarative_base()


def get_db() -> Generator[Session, None, None]:
    """Yield a session for one request and close it afterwards"""
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


def init_db() -> bool:
    """
    Create the cache database and its table if they are missing.

    Returns:
        bool: False when the database cannot be reached or created
    """
    # Register the models on Base.metadata
    from skein4.app.models import TableEntry  # noqa: F401

    try:
        if engine.url.get_backend_name() == "sqlite" and engine.url.database:
            Path(engine.url.database).expanduser().parent.mkdir(parents=True, exist_ok=True)
        if not database_exists(engine.url):
            create_database(engine.url)
            logger.info(f"Created cache database at {engine.url}")

        Base.metadata.create_all(bind=engine)
        logger.info("Cache tables ready")
        return True
    except Exception as e:
        logger.error(f"Cache database initialization failed: {e}")
        return False
