"""
Move module for skein4

This module locates n-move sites (two parallel strands) in braid words and
tangle expressions and inserts half-twists there.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from skein4.app.errors import InvalidMoveError
from skein4.app.services.tangles.braid import BraidWord
from skein4.app.services.tangles.expr import (
    Braid,
    BraidClosure,
    Family,
    IntegerTangle,
    Mirror,
    Rational,
    TangleExpr,
    node_at,
    replace_at,
)

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MoveSite:
    """
    Location of a two-strand band.

    Args:
        path: child indices leading to the node (empty for a bare braid word)
        position: insertion point inside a braid word
        generator: generator index of the band inside a braid word
        term: term index inside rat(...) or pretzel(...)
        handedness: +1 when a positive move adds positive half-twists to the
            diagram, -1 under an odd number of mirrors or rational flips
    """

    path: Tuple[int, ...] = ()
    position: Optional[int] = None
    generator: Optional[int] = None
    term: Optional[int] = None
    handedness: int = 1


def _insert(word: BraidWord, site: MoveSite, n: int) -> BraidWord:
    if site.position is None or site.generator is None:
        raise InvalidMoveError("A braid site needs a position and a generator")
    if not 0 <= site.position <= len(word.letters):
        raise InvalidMoveError(f"Position {site.position} outside a word of length {len(word.letters)}")
    if not 1 <= site.generator < word.strands:
        raise InvalidMoveError(f"Generator {site.generator} out of range for {word.strands} strands")
    sign = 1 if n >= 0 else -1
    twist = (sign * site.generator,) * abs(n)
    letters = word.letters[:site.position] + twist + word.letters[site.position:]
    return BraidWord(word.strands, letters)


def _bump(values: Tuple[int, ...], index: Optional[int], n: int) -> Tuple[int, ...]:
    if index is None or not 0 <= index < len(values):
        raise InvalidMoveError(f"Term index {index} out of range")
    return values[:index] + (values[index] + n,) + values[index + 1:]


def apply_move(target: Union[TangleExpr, BraidWord], site: MoveSite, n: int):
    """
    Insert n half-twists at a site.

    Args:
        target: braid word or tangle expression
        site: band locator
        n: number of half-twists (sign selects their handedness)

    Returns:
        the same kind of object with the twists added
    """
    if isinstance(target, BraidWord):
        return _insert(target, site, n)
    try:
        node = node_at(target, site.path)
    except IndexError as exc:
        raise InvalidMoveError(f"No node at path {site.path}: {exc}") from exc
    if isinstance(node, Braid):
        replacement = Braid(_insert(node.word, site, n))
    elif isinstance(node, BraidClosure):
        replacement = BraidClosure(_insert(node.word, site, n))
    elif isinstance(node, IntegerTangle):
        replacement = IntegerTangle(node.twists + n)
    elif isinstance(node, Rational):
        replacement = Rational(_bump(node.terms, site.term, n))
    elif isinstance(node, Family) and node.kind == "torus":
        replacement = Family("torus", (2, node.params[1] + n))
    elif isinstance(node, Family) and node.kind == "pretzel":
        replacement = Family("pretzel", _bump(node.params, site.term, n))
    else:
        raise InvalidMoveError(f"{type(node).__name__} has no two-strand band to twist")
    return replace_at(target, site.path, replacement)


def braid_sites(word: BraidWord, path: Tuple[int, ...] = (), handedness: int = 1) -> List[MoveSite]:
    return [
        MoveSite(path=path, position=p, generator=g, handedness=handedness)
        for p in range(len(word.letters) + 1)
        for g in range(1, word.strands)
    ]


def sites(expr: TangleExpr) -> List[MoveSite]:
    """Enumerate every n-move site of an expression in a stable order."""
    found: List[MoveSite] = []

    def walk(node: TangleExpr, path: Tuple[int, ...], hand: int) -> None:
        if isinstance(node, (Braid, BraidClosure)):
            found.extend(braid_sites(node.word, path, hand))
            return
        if isinstance(node, IntegerTangle):
            found.append(MoveSite(path=path, handedness=hand))
            return
        if isinstance(node, Rational):
            last = len(node.terms) - 1
            for j in range(len(node.terms)):
                found.append(MoveSite(path=path, term=j, handedness=hand * (-1) ** (last - j)))
            return
        if isinstance(node, Family):
            if node.kind == "torus":
                found.append(MoveSite(path=path, handedness=hand))
            elif node.kind == "pretzel":
                found.extend(MoveSite(path=path, term=j, handedness=hand) for j in range(len(node.params)))
            return
        if isinstance(node, Mirror):
            hand = -hand
        for i, child in enumerate(node.children()):
            walk(child, path + (i,), hand)

    walk(expr, (), 1)
    return found
