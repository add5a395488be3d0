"""
Schemas package for skein4

This package contains the pydantic records shared by the CLI and the API.
"""

from skein4.app.schemas.records import (
    CheckItem,
    ColoringRecord,
    MatrixRecord,
    ResultRecord,
    SuiteReport,
)
