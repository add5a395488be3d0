"""
API module for skein4

This module assembles the FastAPI application from the evaluation, check,
catalog and cache routers, all mounted under /api.
"""

from contextlib import AbstractAsyncContextManager
from typing import Callable, Optional

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from skein4.app import config
from skein4.app.api.cache_routes import router as cache_router
from skein4.app.api.catalog_routes import router as catalog_router
from skein4.app.api.check_routes import router as check_router
from skein4.app.api.eval_routes import router as eval_router

ROUTERS = (eval_router, check_router, catalog_router, cache_router)


def create_app(lifespan: Optional[Callable[[FastAPI], AbstractAsyncContextManager]] = None) -> FastAPI:
    """
    Build the skein4 application

    Args:
        lifespan: Optional startup/shutdown context for the server process

    Returns:
        FastAPI: Application with every router mounted under /api
    """
    app = FastAPI(
        title="skein4 API",
        description="Exact evaluation in the fourth skein module, Burau identity checks and 3-colorings",
        version="0.1.0",
        docs_url="/api/docs",
        redoc_url="/api/redoc",
        openapi_url="/api/openapi.json",
        lifespan=lifespan,
    )

    # Credentials cannot be combined with a wildcard origin
    wildcard = "*" in config.CORS_ORIGINS
    app.add_middleware(
        CORSMiddleware,
        allow_origins=config.CORS_ORIGINS,
        allow_credentials=not wildcard,
        allow_methods=["GET", "POST", "DELETE"],
        allow_headers=["*"],
    )

    for router in ROUTERS:
        app.include_router(router, prefix="/api")

    return app
