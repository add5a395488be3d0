"""
Diagram module for skein4

This module provides the wiring of an expression as a planar diagram:
crossings listed counterclockwise as (a, b, c, d) with a and c on the under
strand, edge labels shared by the two ends of every arc segment, and the
boundary edges listed counterclockwise from t1 (NW for 2-tangles). It
computes closure statistics, removes R1/R2 configurations and encodes
crossing-free-closed tangles canonically.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from skein4.app.errors import UnsupportedClassError
from skein4.app.services.tangles.braid import BraidWord
from skein4.app.services.tangles.expr import (
    Braid,
    BraidClosure,
    Circle,
    Close,
    Compose,
    CupCap,
    Denominator,
    Family,
    IntegerTangle,
    Mirror,
    Mutate,
    Numerator,
    Rational,
    Rotate,
    TangleExpr,
    TangleSum,
)
from skein4.app.services.tangles.families import expand_family, expand_rational, vertical_twist

# Configure logging
logger = logging.getLogger(__name__)

Crossing = Tuple[int, int, int, int]
Port = Tuple[int, int]  # (crossing index or -1 for the boundary, slot or boundary position)


def top_position(i: int, n: int) -> int:
    """Boundary position of the top end of strand i (1-based)."""
    return 0 if i == 1 else 2 * n + 1 - i


def bottom_position(i: int) -> int:
    return i


def _relabel(boundary: Sequence[int], crossings: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], Tuple[Crossing, ...]]:
    mapping: Dict[int, int] = {}

    def label(edge: int) -> int:
        if edge not in mapping:
            mapping[edge] = len(mapping)
        return mapping[edge]

    new_boundary = tuple(label(e) for e in boundary)
    new_crossings = tuple(tuple(label(e) for e in c) for c in crossings)
    return new_boundary, new_crossings


class _UnionFind:
    def __init__(self):
        self.parent: Dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[max(rx, ry)] = min(rx, ry)
        return True


def glue_edges(
    boundary: Sequence[int],
    crossings: Sequence[Sequence[int]],
    pairs: Sequence[Tuple[int, int]],
    loops: int,
    touched: Sequence[int] = (),
) -> Tuple[Tuple[int, ...], Tuple[Crossing, ...], int]:
    """Identify edges pairwise; edge classes left without ends become free loops."""
    uf = _UnionFind()
    for x, y in pairs:
        uf.union(x, y)
    new_boundary = [uf.find(e) for e in boundary]
    new_crossings = [tuple(uf.find(e) for e in c) for c in crossings]
    present = set(new_boundary)
    for c in new_crossings:
        present.update(c)
    candidates = {uf.find(e) for pair in pairs for e in pair} | {uf.find(e) for e in touched}
    loops += sum(1 for root in candidates if root not in present)
    b, c = _relabel(new_boundary, new_crossings)
    return b, c, loops


@dataclass(frozen=True)
class Diagram:
    """
    Planar diagram of an n-tangle (n = arity) or a link (arity 0).

    Every edge label occurs exactly twice among boundary and crossing slots.
    """

    arity: int
    boundary: Tuple[int, ...]
    crossings: Tuple[Crossing, ...]
    loops: int = 0

    # Constructors

    @classmethod
    def identity(cls, n: int) -> "Diagram":
        boundary = [0] * (2 * n)
        for i in range(1, n + 1):
            boundary[bottom_position(i)] = i
            boundary[top_position(i, n)] = i
        b, c = _relabel(boundary, ())
        return cls(n, b, c)

    @classmethod
    def letter(cls, n: int, letter: int) -> "Diagram":
        i = abs(letter)
        boundary = [0] * (2 * n)
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                boundary[bottom_position(j)] = j
                boundary[top_position(j, n)] = j
        bl, br, tl, tr = 100, 101, 102, 103
        boundary[bottom_position(i)] = bl
        boundary[bottom_position(i + 1)] = br
        boundary[top_position(i, n)] = tl
        boundary[top_position(i + 1, n)] = tr
        node = (br, tr, tl, bl) if letter > 0 else (bl, br, tr, tl)
        b, c = _relabel(boundary, (node,))
        return cls(n, b, c)

    @classmethod
    def cupcap(cls, n: int, i: int) -> "Diagram":
        boundary = [0] * (2 * n)
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                boundary[bottom_position(j)] = j
                boundary[top_position(j, n)] = j
        boundary[bottom_position(i)] = boundary[bottom_position(i + 1)] = 100
        boundary[top_position(i, n)] = boundary[top_position(i + 1, n)] = 101
        b, c = _relabel(boundary, ())
        return cls(n, b, c)

    @classmethod
    def braid(cls, word: BraidWord) -> "Diagram":
        diagram = cls.identity(word.strands)
        for letter in word.letters:
            diagram = diagram.compose(cls.letter(word.strands, letter))
        return diagram

    # Operations

    @property
    def edge_count(self) -> int:
        edges = set(self.boundary)
        for c in self.crossings:
            edges.update(c)
        return len(edges)

    def compose(self, upper: "Diagram") -> "Diagram":
        """Stack ``upper`` on top of this diagram."""
        n = self.arity
        if upper.arity != n or n == 0:
            raise UnsupportedClassError(f"Cannot stack a {upper.arity}-tangle on a {n}-tangle")
        offset = self.edge_count + 1
        up_boundary = [e + offset for e in upper.boundary]
        up_crossings = [tuple(e + offset for e in c) for c in upper.crossings]
        tops = {top_position(i, n) for i in range(1, n + 1)}
        boundary = [up_boundary[p] if p in tops else self.boundary[p] for p in range(2 * n)]
        pairs = [
            (self.boundary[top_position(i, n)], up_boundary[bottom_position(i)])
            for i in range(1, n + 1)
        ]
        b, c, loops = glue_edges(boundary, list(self.crossings) + up_crossings, pairs, self.loops + upper.loops)
        return Diagram(n, b, c, loops)

    def rotate(self, steps: int) -> "Diagram":
        """Move every boundary point ``steps`` positions counterclockwise."""
        size = len(self.boundary)
        if not size:
            return self
        boundary = [0] * size
        for p, e in enumerate(self.boundary):
            boundary[(p + steps) % size] = e
        b, c = _relabel(boundary, self.crossings)
        return Diagram(self.arity, b, c, self.loops)

    def mirror(self) -> "Diagram":
        crossings = tuple((b, c, d, a) for a, b, c, d in self.crossings)
        return Diagram(self.arity, self.boundary, crossings, self.loops)

    def with_circle(self, count: int = 1) -> "Diagram":
        return Diagram(self.arity, self.boundary, self.crossings, self.loops + count)

    def _close(self, position_pairs: Sequence[Tuple[int, int]]) -> "Diagram":
        pairs = [(self.boundary[p], self.boundary[q]) for p, q in position_pairs]
        b, c, loops = glue_edges((), self.crossings, pairs, self.loops)
        return Diagram(0, b, c, loops)

    def numerator(self) -> "Diagram":
        self._require_two("N")
        return self._close([(0, 3), (1, 2)])

    def denominator(self) -> "Diagram":
        self._require_two("D")
        return self._close([(0, 1), (2, 3)])

    def braid_closure(self) -> "Diagram":
        n = self.arity
        return self._close([(top_position(i, n), bottom_position(i)) for i in range(1, n + 1)])

    def _require_two(self, what: str) -> None:
        if self.arity != 2:
            raise UnsupportedClassError(f"{what} closes 2-tangles only")

    # Traversal

    def ports(self) -> Dict[int, List[Port]]:
        ports: Dict[int, List[Port]] = defaultdict(list)
        for pos, e in enumerate(self.boundary):
            ports[e].append((-1, pos))
        for ci, crossing in enumerate(self.crossings):
            for slot, e in enumerate(crossing):
                ports[e].append((ci, slot))
        return ports


def _other(ports: Dict[int, List[Port]], edge: int, port: Port) -> Port:
    p1, p2 = ports[edge]
    return p2 if p1 == port else p1


def _head_port(diagram: Diagram, ports: Dict[int, List[Port]], edge: int) -> Port:
    """Deterministic direction along a closed component, stable under crossing switches."""
    p1, p2 = ports[edge]

    def continuation(port: Port) -> int:
        ci, slot = port
        return diagram.crossings[ci][(slot + 2) % 4]

    c1, c2 = continuation(p1), continuation(p2)
    if c1 != c2:
        return p1 if c1 < c2 else p2
    if p1[0] != p2[0]:
        return p1 if p1[0] < p2[0] else p2
    return p1 if (p1[1] + 1) % 4 == p2[1] else p2


def link_passages(diagram: Diagram) -> List[List[Port]]:
    """
    Oriented traversal of every closed component that has crossings.

    Components are ordered by their least edge label; each component is the
    list of (crossing, entry slot) passages in order.
    """
    if diagram.arity:
        raise UnsupportedClassError("Passages are defined for links only")
    ports = diagram.ports()
    seen = set()
    components: List[List[Port]] = []
    for start in sorted(ports):
        if start in seen:
            continue
        head = _head_port(diagram, ports, start)
        passages: List[Port] = []
        edge, port = start, head
        while True:
            seen.add(edge)
            ci, slot = port
            passages.append(port)
            out = (ci, (slot + 2) % 4)
            edge = diagram.crossings[ci][out[1]]
            port = _other(ports, edge, out)
            if edge == start and port == head:
                break
        components.append(passages)
    return components


def crossing_sign(under_entry: int, over_entry: int) -> int:
    """+1 when the under strand runs a->c exactly when the over strand runs d->b."""
    return 1 if (under_entry == 0) == (over_entry == 3) else -1


@dataclass(frozen=True)
class LinkPresentation:
    """Closure statistics of a link expression"""

    expr: TangleExpr
    writhe: int
    framing: int
    components: int


def oriented_signs(diagram: Diagram) -> Tuple[Dict[int, int], Dict[int, Tuple[int, int]], int]:
    """
    Crossing signs under the traversal orientation.

    Returns:
        Tuple: (sign per crossing, component index of the (under, over)
        strands per crossing, number of closed components)
    """
    entries: Dict[int, Dict[str, Tuple[int, int]]] = defaultdict(dict)
    components = link_passages(diagram)
    for k, passages in enumerate(components):
        for ci, slot in passages:
            entries[ci]["under" if slot % 2 == 0 else "over"] = (slot, k)
    signs = {}
    owners = {}
    for ci, record in entries.items():
        (us, uk), (os_, ok) = record["under"], record["over"]
        signs[ci] = crossing_sign(us, os_)
        owners[ci] = (uk, ok)
    return signs, owners, len(components) + diagram.loops


def diagram_stats(diagram: Diagram) -> Tuple[int, int, int]:
    """(writhe, framing, components) of a link diagram under the traversal orientation."""
    signs, owners, components = oriented_signs(diagram)
    writhe = sum(signs.values())
    framing = sum(s for ci, s in signs.items() if owners[ci][0] == owners[ci][1])
    return writhe, framing, components


@lru_cache(maxsize=4096)
def build_diagram(expr: TangleExpr) -> Diagram:
    """Wire an expression into a planar diagram."""
    if isinstance(expr, Braid):
        return Diagram.braid(expr.word)
    if isinstance(expr, CupCap):
        return Diagram.cupcap(expr.strands, expr.index)
    if isinstance(expr, Compose):
        return build_diagram(expr.lower).compose(build_diagram(expr.upper))
    if isinstance(expr, Rotate):
        return build_diagram(expr.child).rotate(expr.steps)
    if isinstance(expr, Circle):
        return build_diagram(expr.child).with_circle()
    if isinstance(expr, Mirror):
        return build_diagram(expr.child).mirror()
    if isinstance(expr, Mutate):
        from skein4.app.services.tangles.transforms import mutate

        return build_diagram(mutate(expr.child, expr.axis))
    if isinstance(expr, IntegerTangle):
        return build_diagram(vertical_twist(expr.twists)).rotate(1)
    if isinstance(expr, Rational):
        return build_diagram(expand_rational(expr.terms))
    if isinstance(expr, TangleSum):
        left = build_diagram(expr.left).rotate(-1)
        right = build_diagram(expr.right).rotate(-1)
        return right.compose(left).rotate(1)
    if isinstance(expr, Numerator):
        return build_diagram(expr.child).numerator()
    if isinstance(expr, Denominator):
        return build_diagram(expr.child).denominator()
    if isinstance(expr, BraidClosure):
        return Diagram.braid(expr.word).braid_closure()
    if isinstance(expr, Close):
        return build_diagram(expr.child).braid_closure()
    if isinstance(expr, Family):
        return build_diagram(expand_family(expr))
    raise UnsupportedClassError(f"No diagram for {type(expr).__name__}")


def closure_stats(link: TangleExpr) -> LinkPresentation:
    """
    Writhe, framing and component count of a link expression.

    Braid closures are oriented along the braid; other links along the
    deterministic traversal of their diagram.
    """
    if link.arity != 0:
        raise UnsupportedClassError(f"closure_stats needs a link, got a {link.arity}-tangle")
    diagram = build_diagram(link)
    writhe, framing, components = diagram_stats(diagram)
    if isinstance(link, BraidClosure):
        writhe = link.word.writhe
        components = link.word.closure_components()
    return LinkPresentation(expr=link, writhe=writhe, framing=framing, components=components)


# Simplification


def _find_r1(crossings: Sequence[Crossing]) -> Optional[Tuple[int, int]]:
    for ci, c in enumerate(crossings):
        for s in range(4):
            if c[s] == c[(s + 1) % 4]:
                return ci, s
    return None


def kink_sign(slot: int) -> int:
    """Framing of the curl closing slots (slot, slot+1): +1 for (a,b) or (c,d)."""
    return 1 if slot % 2 == 0 else -1


def _find_r2(crossings: Sequence[Crossing], ports: Dict[int, List[Port]]) -> Optional[Tuple[int, int, int, int]]:
    for x, cx in enumerate(crossings):
        for s in range(4):
            e, f = cx[s], cx[(s + 1) % 4]
            if e == f:
                continue
            (pe,) = [p for p in ports[e] if p != (x, s)]
            (pf,) = [p for p in ports[f] if p != (x, (s + 1) % 4)]
            y, t1 = pe
            y2, t2 = pf
            if y < 0 or y != y2 or y == x:
                continue
            if t1 == (t2 + 1) % 4 and s % 2 == t1 % 2:
                return x, s, y, t1
    return None


def simplify(diagram: Diagram) -> Tuple[Diagram, int]:
    """
    Remove curls (R1) and bigons with one strand over at both crossings (R2).

    Returns:
        Tuple[Diagram, int]: the reduced diagram and the total framing of the
        removed curls
    """
    boundary, crossings, loops = diagram.boundary, list(diagram.crossings), diagram.loops
    kinks = 0
    while True:
        hit = _find_r1(crossings)
        if hit is not None:
            ci, s = hit
            c = crossings[ci]
            kinks += kink_sign(s)
            u, v = c[(s + 2) % 4], c[(s + 3) % 4]
            rest = crossings[:ci] + crossings[ci + 1:]
            boundary, new, loops = glue_edges(boundary, rest, [(u, v)], loops)
            crossings = list(new)
            continue
        ports = Diagram(diagram.arity, boundary, tuple(crossings), loops).ports()
        hit2 = _find_r2(crossings, ports)
        if hit2 is None:
            break
        x, s, y, t1 = hit2
        cx, cy = crossings[x], crossings[y]
        t2 = (t1 - 1) % 4
        g, h = cx[(s + 2) % 4], cx[(s + 3) % 4]
        g2, h2 = cy[(t1 + 2) % 4], cy[(t2 + 2) % 4]
        rest = [c for i, c in enumerate(crossings) if i not in (x, y)]
        boundary, new, loops = glue_edges(boundary, rest, [(g, g2), (h, h2)], loops)
        crossings = list(new)
    return Diagram(diagram.arity, tuple(boundary), tuple(crossings), loops), kinks


def canonical_code(diagram: Diagram) -> Optional[Tuple]:
    """
    Canonical encoding of a tangle diagram whose crossings all lie on strands
    that reach the boundary; None when a closed component carries crossings.

    Free loops are not part of the code.
    """
    ports = diagram.ports()
    numbering: Dict[int, Tuple[int, int]] = {}
    code: List[Tuple] = []
    visited = set()
    for start in range(len(diagram.boundary)):
        if start in visited:
            continue
        visited.add(start)
        edge = diagram.boundary[start]
        port: Port = (-1, start)
        while True:
            nxt = _other(ports, edge, port)
            ci, slot = nxt
            if ci < 0:
                visited.add(slot)
                code.append(("e", slot))
                break
            if ci not in numbering:
                numbering[ci] = (len(numbering), slot)
                code.append(("n", slot % 2))
            else:
                number, first = numbering[ci]
                code.append(("o", number, (slot - first) % 4))
            port = (ci, (slot + 2) % 4)
            edge = diagram.crossings[ci][port[1]]
    if len(numbering) != len(diagram.crossings):
        return None
    return (diagram.arity,) + tuple(code)
