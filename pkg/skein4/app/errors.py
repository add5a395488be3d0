"""
Errors module for skein4

This module provides the exception hierarchy shared by the library, the CLI
and the HTTP layer.
"""

from typing import Optional


class Skein4Error(Exception):
    """Base class for all skein4 errors"""


class RingError(Skein4Error):
    """Invalid ring arithmetic or ring declaration"""


class MixedRingError(RingError):
    """Operands live in different rings"""


class NonUnitError(RingError):
    """An element that must be invertible is not a unit"""


class NormalizationError(RingError):
    """Raw terms cannot be brought into canonical form"""


class UnboundVariableError(RingError):
    """A substitution leaves a variable without an image"""


class PolynomialSyntaxError(Skein4Error):
    """Polynomial text does not follow the polynomial grammar"""


class TangleSyntaxError(Skein4Error):
    """Tangle expression text does not follow the expression grammar"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ArityError(Skein4Error):
    """Boundary arities do not match"""

    def __init__(self, message: str, subexpression: Optional[str] = None):
        if subexpression:
            message = f"{message}: {subexpression}"
        super().__init__(message)
        self.subexpression = subexpression


class BudgetExceededError(Skein4Error):
    """A search or reduction ran past its configured budget"""

    def __init__(self, message: str, stuck: Optional[str] = None):
        if stuck:
            message = f"{message} (stuck at {stuck})"
        super().__init__(message)
        self.stuck = stuck


class UnsupportedClassError(Skein4Error):
    """The input is not (3-)algebraic as presented"""


class RotationUnsupportedError(UnsupportedClassError):
    """A rotated 3-tangle could not be recognised among short words"""


class NoScalarRelationError(Skein4Error):
    """Trivial links independent; no scalar relation"""


class FormulaMismatchError(Skein4Error):
    """A closed-form identity check failed"""


class InvalidMoveError(Skein4Error):
    """A move site does not address a two-strand band"""


class CatalogError(Skein4Error):
    """Unknown or duplicate catalog entry"""


class IdealError(Skein4Error):
    """Malformed ideal specification"""
