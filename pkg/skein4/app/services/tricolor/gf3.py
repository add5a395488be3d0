"""
GF(3) linear algebra module for skein4

This module provides row reduction, null spaces and canonical row spaces of
integer matrices over the field with three elements.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

# Configure logging
logger = logging.getLogger(__name__)

P = 3


def as_matrix(rows: Sequence[Sequence[int]], width: int) -> np.ndarray:
    if not rows:
        return np.zeros((0, width), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(len(rows), width) % P


def rref(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form over GF(3).

    Returns:
        (nonzero rows of the reduced matrix, pivot columns)
    """
    m = np.array(matrix, dtype=np.int64) % P
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if not len(nonzero):
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        # 1 and 2 are their own inverses mod 3
        m[r] = (m[r] * int(m[r, c])) % P
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % P
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(matrix: np.ndarray) -> np.ndarray:
    """Basis of {v : matrix v = 0} as rows, one per free column."""
    cols = matrix.shape[1]
    reduced, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-reduced[i, f]) % P
    return basis


def row_space(matrix: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
    """Canonical basis of the row space (the nonzero RREF rows)."""
    reduced, _ = rref(matrix)
    return tuple(tuple(int(x) for x in row) for row in reduced)


def rank(matrix: np.ndarray) -> int:
    return len(rref(matrix)[1])
