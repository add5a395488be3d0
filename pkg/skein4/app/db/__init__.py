"""
Database package for skein4

This package provides the connection to the table cache database.
"""
