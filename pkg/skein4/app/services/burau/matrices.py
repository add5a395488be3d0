"""
Burau matrices module for skein4

This module provides unreduced Alexander-Burau matrices of braid words over
Z[t^(+-1)], the local crossing matrices, and reduction of matrices modulo an
ideal (t-polynomial and/or integer modulus).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import sympy as sp

from skein4.app.errors import FormulaMismatchError, IdealError, PolynomialSyntaxError, RingError
from skein4.app.services.poly import PowerRelation, RingElement, RingSpec, parse_poly
from skein4.app.services.poly.ring import from_sympy, symmetric_residue, to_sympy
from skein4.app.services.tangles.braid import BraidWord

# Configure logging
logger = logging.getLogger(__name__)

BURAU_RING = RingSpec("burau", ("t",), invertible=frozenset({"t"}))

Entry = Union[RingElement, int]


@dataclass(frozen=True)
class BurauMatrix:
    """Square matrix with entries in a ring over the single variable t"""

    entries: Tuple[Tuple[RingElement, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]], ring: RingSpec = BURAU_RING) -> "BurauMatrix":
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise RingError("A Burau matrix must be square")
        return cls(
            tuple(
                tuple(entry if isinstance(entry, RingElement) else ring.constant(entry) for entry in row)
                for row in rows
            )
        )

    @classmethod
    def identity(cls, n: int, ring: RingSpec = BURAU_RING) -> "BurauMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], ring)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def ring(self) -> RingSpec:
        return self.entries[0][0].spec

    def __getitem__(self, index: Tuple[int, int]) -> RingElement:
        i, j = index
        return self.entries[i][j]

    def __matmul__(self, other: "BurauMatrix") -> "BurauMatrix":
        if other.n != self.n:
            raise RingError(f"Cannot multiply {self.n}x{self.n} by {other.n}x{other.n}")
        ring = self.ring
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                total = ring.zero()
                for k in range(self.n):
                    left = self.entries[i][k]
                    if left.is_zero():
                        continue
                    total = total + left * other.entries[k][j]
                row.append(total)
            rows.append(tuple(row))
        return BurauMatrix(tuple(rows))

    def __pow__(self, k: int) -> "BurauMatrix":
        base = self if k >= 0 else self.inverse()
        result = BurauMatrix.identity(self.n, self.ring)
        k = abs(k)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def to_sympy(self) -> sp.Matrix:
        return sp.Matrix([[to_sympy(entry) for entry in row] for row in self.entries])

    def determinant(self) -> RingElement:
        return from_sympy(self.to_sympy().det(method="berkowitz"), self.ring)

    def inverse(self) -> "BurauMatrix":
        """Inverse through the adjugate; the determinant must be a unit."""
        det = self.determinant()
        if not det.is_unit():
            raise RingError(f"Determinant {det} is not a unit")
        scale = det.inverse()
        adjugate = self.to_sympy().adjugate(method="berkowitz")
        ring = self.ring
        return BurauMatrix(
            tuple(
                tuple(from_sympy(adjugate[i, j], ring) * scale for j in range(self.n)) for i in range(self.n)
            )
        )

    def coerce(self, ring: RingSpec) -> "BurauMatrix":
        return BurauMatrix(tuple(tuple(entry.coerce(ring) for entry in row) for row in self.entries))

    def row_sums(self) -> List[RingElement]:
        ring = self.ring
        sums = []
        for row in self.entries:
            total = ring.zero()
            for entry in row:
                total = total + entry
            sums.append(total)
        return sums

    def is_identity(self) -> bool:
        return self == BurauMatrix.identity(self.n, self.ring)

    def rows_text(self) -> List[List[str]]:
        return [[str(entry) for entry in row] for row in self.entries]

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(row) + "]" for row in self.rows_text())


@dataclass(frozen=True)
class IdealSpec:
    """
    Ideal of Z[t^(+-1)] given by a t-polynomial and/or an integer modulus.

    The polynomial is made monic-with-unit-constant after clearing negative
    exponents by a power of t, so it becomes a rewrite rule t^d -> q(t).
    """

    polynomial: Optional[str] = None
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.polynomial is None and self.modulus is None:
            raise IdealError("An ideal needs a polynomial or an integer modulus")
        if self.modulus is not None and self.modulus < 2:
            raise IdealError(f"Integer modulus must be at least 2, got {self.modulus}")

    @classmethod
    def parse(cls, polynomial: Optional[str] = None, modulus: Optional[int] = None) -> "IdealSpec":
        text = polynomial.strip() if polynomial else None
        return cls(text or None, modulus)

    def __str__(self) -> str:
        parts = [p for p in (self.polynomial, str(self.modulus) if self.modulus else None) if p]
        return "(" + ", ".join(parts) + ")"

    @property
    def ring(self) -> RingSpec:
        return ideal_ring(self)


def _power_relation(polynomial: str, modulus: Optional[int]) -> PowerRelation:
    try:
        element = parse_poly(polynomial, BURAU_RING)
    except PolynomialSyntaxError as e:
        raise IdealError(f"Cannot read ideal generator: {e}") from None
    coefficients = {}
    for (e,), c in element.items():
        c = symmetric_residue(c, modulus)
        if c:
            coefficients[e] = c
    if not coefficients:
        raise IdealError(f"Ideal generator {polynomial} is zero")
    low = min(coefficients)
    # clearing t^low is multiplication by a unit
    coefficients = {e - low: c for e, c in coefficients.items()}
    degree = max(coefficients)
    if degree < 1:
        raise IdealError(f"Ideal generator {polynomial} is a constant")
    if coefficients[degree] != 1:
        raise IdealError(f"Ideal generator {polynomial} is not monic")
    if coefficients.get(0) not in (1, -1):
        raise IdealError(f"Ideal generator {polynomial} needs constant term +-1 for t to stay invertible")
    replacement = {e: -c for e, c in coefficients.items() if e < degree}
    return PowerRelation.of("t", degree, replacement)


@lru_cache(maxsize=None)
def ideal_ring(ideal: IdealSpec) -> RingSpec:
    """Quotient ring Z[t^(+-1)]/ideal as a RingSpec with t invertible."""
    relations = ()
    if ideal.polynomial is not None:
        relations = (_power_relation(ideal.polynomial, ideal.modulus),)
    try:
        ring = RingSpec(
            f"burau{ideal}",
            ("t",),
            invertible=frozenset({"t"}),
            relations=relations,
            modulus=ideal.modulus,
        )
    except RingError as e:
        raise IdealError(str(e)) from None
    logger.debug(f"Built quotient ring for ideal {ideal}")
    return ring


def reduce_mod_ideal(matrix: BurauMatrix, ideal: IdealSpec) -> BurauMatrix:
    """Entrywise canonical remainders modulo the ideal."""
    return matrix.coerce(ideal.ring)


# Local matrices

def _t(exponent: int = 1) -> RingElement:
    return BURAU_RING.var("t", exponent)


def a1() -> BurauMatrix:
    return BurauMatrix.from_rows([[1 - _t(-1), _t(-1)], [1, 0]])


def a2() -> BurauMatrix:
    return BurauMatrix.from_rows([[0, 1], [_t(), 1 - _t()]])


def a1_bar() -> BurauMatrix:
    """A1 with t -> t^-1, the other half of the two-crossing band."""
    return BurauMatrix.from_rows([[1 - _t(), _t()], [1, 0]])


def b1() -> BurauMatrix:
    return BurauMatrix.from_rows([[2 - _t(-1), _t(-1) - 1], [1 - _t(-1), _t(-1)]])


def a1_cubed_closed_form() -> BurauMatrix:
    q = _t(2) - _t() + 1
    return BurauMatrix.from_rows([[1 - _t(-3) * q, _t(-3) * q], [_t(-2) * q, 1 - _t(-2) * q]])


def b1_power_closed_form(k: int) -> BurauMatrix:
    """B1^k = I + k(1 - t^-1)[[1, -1], [1, -1]]."""
    d = k * (1 - _t(-1))
    return BurauMatrix.from_rows([[1 + d, -d], [d, 1 - d]])


def b1_power(k: int) -> BurauMatrix:
    """
    B1^k by repeated multiplication, checked against the closed form.

    Raises:
        FormulaMismatchError: the two computations disagree
    """
    base = b1() if k >= 0 else b1().inverse()
    result = BurauMatrix.identity(2)
    for _ in range(abs(k)):
        result = result @ base
    if result != b1_power_closed_form(k):
        raise FormulaMismatchError(f"B1^{k} differs from its closed form")
    return result


CROSSING_KINDS = ("A1", "A2", "B1", "B1_power")


def crossing_matrix(kind: str, k: int = 1) -> BurauMatrix:
    """
    Local 2x2 matrix of a crossing, or of the two-crossing band B1 and its powers.

    Args:
        kind: one of A1, A2, B1, B1_power
        k: exponent for B1_power

    Returns:
        BurauMatrix: the exact matrix
    """
    if kind == "A1":
        return a1()
    if kind == "A2":
        return a2()
    if kind == "B1":
        return b1()
    if kind == "B1_power":
        return b1_power(k)
    raise RingError(f"Unknown crossing matrix {kind!r}; expected one of {', '.join(CROSSING_KINDS)}")


def letter_matrix(letter: int, strands: int, ring: RingSpec = BURAU_RING) -> BurauMatrix:
    """
    Matrix of one generator: s_i acts on coordinates (n-i, n-i+1), identity elsewhere.
    """
    local = a1() if letter > 0 else a2()
    if ring is not BURAU_RING:
        local = local.coerce(ring)
    start = strands - abs(letter) - 1
    rows = [[ring.constant(1 if i == j else 0) for j in range(strands)] for i in range(strands)]
    for r in range(2):
        for c in range(2):
            rows[start + r][start + c] = local[r, c]
    return BurauMatrix.from_rows(rows, ring)


def braid_burau(word: BraidWord, ring: RingSpec = BURAU_RING) -> BurauMatrix:
    """
    Burau matrix of a braid word, the left-to-right product of letter matrices.

    Args:
        word: braid word on n strands
        ring: ring to multiply in (a quotient ring reduces along the way)

    Returns:
        BurauMatrix: n x n matrix; the empty word gives the identity
    """
    result = BurauMatrix.identity(word.strands, ring)
    for letter in word.letters:
        result = result @ letter_matrix(letter, word.strands, ring)
    return result
