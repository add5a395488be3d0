"""
Coloring module for skein4

This module computes the space of Fox 3-colorings of a tangle or link
diagram: arcs are the classes of edges joined through overpasses, every
crossing imposes 2*over = under + under (mod 3), and free circles carry an
unconstrained color. It also restricts colorings to the boundary and checks
that random 3-moves leave (rank, boundary image) unchanged.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from skein4.app.errors import InvalidMoveError
from skein4.app.schemas.records import ColoringRecord, SuiteReport
from skein4.app.services.tangles.braid import BraidWord
from skein4.app.services.tangles.diagram import Diagram, build_diagram
from skein4.app.services.tangles.expr import Braid, TangleExpr, format_expr
from skein4.app.services.tangles.moves import apply_move, sites
from skein4.app.services.tricolor import gf3

# Configure logging
logger = logging.getLogger(__name__)

Coloring = Tuple[int, ...]


@dataclass(frozen=True)
class ColoringSpace:
    """
    Solution space of the crossing relations over GF(3).

    Args:
        ambient: number of arcs (free circles included)
        basis: spanning colorings, one per free arc of the elimination
        boundary_points: arc of each boundary point, counterclockwise from t1
        relations: one row per crossing
    """

    ambient: int
    basis: Tuple[Coloring, ...]
    boundary_points: Tuple[int, ...]
    relations: Tuple[Tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def satisfies(self, coloring: Sequence[int]) -> bool:
        for row in self.relations:
            if sum(r * c for r, c in zip(row, coloring)) % gf3.P:
                return False
        return True

    def count_by_enumeration(self) -> int:
        """Number of colorings by trying all 3^ambient assignments."""
        return sum(1 for coloring in product(range(gf3.P), repeat=self.ambient) if self.satisfies(coloring))


def arcs_of(diagram: Diagram) -> Tuple[Dict[int, int], int]:
    """Map every edge label to its arc index; returns (map, arc count)."""
    parent: Dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in diagram.boundary:
        find(e)
    for a, b, c, d in diagram.crossings:
        for e in (a, c):
            find(e)
        rb, rd = find(b), find(d)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)

    arc_index: Dict[int, int] = {}
    edge_arc: Dict[int, int] = {}
    for e in sorted(parent):
        root = find(e)
        if root not in arc_index:
            arc_index[root] = len(arc_index)
        edge_arc[e] = arc_index[root]
    return edge_arc, len(arc_index)


def _diagram(target: Union[TangleExpr, BraidWord, Diagram]) -> Diagram:
    if isinstance(target, Diagram):
        return target
    if isinstance(target, BraidWord):
        return Diagram.braid(target)
    return build_diagram(target)


def coloring_space(target: Union[TangleExpr, BraidWord, Diagram]) -> ColoringSpace:
    """
    3-coloring space of a tangle, link or braid word (read as a tangle).

    Args:
        target: expression, braid word or wired diagram

    Returns:
        ColoringSpace: basis and rank of the solution space

    Raises:
        UnsupportedClassError: the expression has no diagram
    """
    diagram = _diagram(target)
    edge_arc, arc_count = arcs_of(diagram)
    ambient = arc_count + diagram.loops
    relations = []
    for a, b, c, _ in diagram.crossings:
        row = [0] * ambient
        row[edge_arc[b]] += 2
        row[edge_arc[a]] -= 1
        row[edge_arc[c]] -= 1
        relations.append(tuple(x % gf3.P for x in row))
    matrix = gf3.as_matrix(relations, ambient)
    basis = tuple(tuple(int(x) for x in row) for row in gf3.nullspace(matrix))
    boundary_points = tuple(edge_arc[e] for e in diagram.boundary)
    logger.debug(f"{len(diagram.crossings)} crossings, {ambient} arcs, rank {len(basis)}")
    return ColoringSpace(ambient, basis, boundary_points, tuple(relations))


def boundary_image(space: ColoringSpace) -> Tuple[Coloring, ...]:
    """
    Image of the restriction to boundary points, as a canonical RREF basis.

    A link has no boundary and an empty image.
    """
    if not space.boundary_points:
        return ()
    rows = [[vector[arc] for arc in space.boundary_points] for vector in space.basis]
    return gf3.row_space(gf3.as_matrix(rows, len(space.boundary_points)))


def coloring_invariant(target: Union[TangleExpr, BraidWord, Diagram]) -> Tuple[int, Tuple[Coloring, ...]]:
    space = coloring_space(target)
    return space.rank, boundary_image(space)


def coloring_record(expr: TangleExpr, text: Optional[str] = None) -> ColoringRecord:
    space = coloring_space(expr)
    return ColoringRecord(
        input=text or format_expr(expr),
        arcs=space.ambient,
        rank=space.rank,
        boundary_basis=[list(row) for row in boundary_image(space)],
    )


def random_braid_tangle(rng: random.Random, strands: int = 3, max_crossings: int = 12) -> Braid:
    length = rng.randint(0, max_crossings)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
    return Braid(BraidWord(strands, letters))


def threemove_invariance_check(
    expr: Optional[TangleExpr] = None,
    trials: int = 200,
    seed: int = 0,
    max_crossings: int = 12,
) -> SuiteReport:
    """
    Apply random +-3-moves and compare (rank, boundary image) before and after.

    Args:
        expr: expression to move; random 3-braid tangles when omitted
        trials: number of moves
        seed: seed of the move choices
        max_crossings: crossing bound of the random braid tangles

    Returns:
        SuiteReport: one item; violations carry the move trace
    """
    rng = random.Random(seed)
    logger.info(f"3-move invariance: {trials} trials, seed {seed}")
    violations: List[str] = []
    current = expr
    reference = coloring_invariant(expr) if expr is not None else None
    for trial in range(trials):
        if expr is None:
            current = random_braid_tangle(rng, 3, max_crossings)
            reference = coloring_invariant(current)
        candidates = sites(current)
        if not candidates:
            continue
        site = rng.choice(candidates)
        n = rng.choice((3, -3))
        try:
            moved = apply_move(current, site, n)
        except InvalidMoveError as e:
            logger.debug(f"Skipping site {site}: {e}")
            continue
        after = coloring_invariant(moved)
        if after != reference:
            violations.append(f"trial {trial}: {format_expr(current)} --{n:+d} at {site}--> {format_expr(moved)}")
        if expr is not None:
            current = moved
    report = SuiteReport(suite="tricolor-invariance")
    report.add(f"3-move invariance x{trials}", not violations, detail="; ".join(violations[:3]))
    for violation in violations:
        logger.error(f"3-coloring changed under a 3-move: {violation}")
    return report


def brute_force_rank(space: ColoringSpace) -> Optional[int]:
    """log3 of the enumerated count, or None when the count is not a power of 3."""
    count = space.count_by_enumeration()
    exponent = 0
    while count > 1 and count % gf3.P == 0:
        count //= gf3.P
        exponent += 1
    return exponent if count == 1 else None
