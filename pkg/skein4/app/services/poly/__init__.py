"""
Polynomial ring package for skein4

Exact Laurent polynomial arithmetic in quotient rings and its text format.
"""

from skein4.app.services.poly.parser import parse_poly
from skein4.app.services.poly.ring import (
    PowerRelation,
    RingElement,
    RingSpec,
    divide_exact,
    format_poly,
    ring_arith,
    ring_normalize,
    ring_substitute,
)
