"""
Main module for skein4

This module exposes the ASGI app and prepares the table cache when the server
process starts.
"""

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI

from skein4.app import config
from skein4.app.api.api import create_app
from skein4.app.db.database import init_db

# Configure logging
logging.basicConfig(
    level=config.LOG_LEVEL,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(_: FastAPI):
    """Open the table cache before serving; evaluation falls back to memory if it fails"""
    logger.info(f"skein4 API starting (convention {config.CONVENTION_VERSION})")
    if not config.PERSIST_TABLES:
        logger.info("Table persistence disabled; memo tables stay in memory")
    elif init_db():
        logger.info(f"Table cache ready at {config.DATABASE_URL}")
    else:
        logger.warning("Table cache unavailable; memo tables stay in memory")
    yield
    logger.info("skein4 API stopped")


app = create_app(lifespan=lifespan)


@app.get("/")
async def root():
    """Point clients at the interactive documentation"""
    return {"name": "skein4", "docs": "/api/docs", "redoc": "/api/redoc"}


@app.get("/health")
async def health_check():
    return {"status": "ok", "convention": config.CONVENTION_VERSION}


def serve(port: int = config.API_PORT, reload: bool = False) -> None:
    """Run the API with uvicorn"""
    import uvicorn

    uvicorn.run("skein4.main:app", host="0.0.0.0", port=port, reload=reload, log_level=config.LOG_LEVEL.lower())


if __name__ == "__main__":
    serve(reload=True)
