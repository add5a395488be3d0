"""
skein4 - exact computations in the fourth skein module

Evaluates algebraic links and closed 3-braids in the fourth skein module,
computes the P1/P2 polynomial invariants and checks the supporting Burau and
3-coloring identities.
"""

__version__ = "0.1.0"
