"""
Three-braid reduction module for skein4

This module rewrites any 3-braid as a linear combination of the 24
braid-type basic tangles: squares are expanded with the skein relation,
alternating length-4 windows other than (s1 s2^-1)^2 are replaced by a
group-equal word with squares, and every lower-order term is carried.
"""

import logging
from typing import Dict, List, Sequence, Union

from skein4.app import config
from skein4.app.errors import ArityError, BudgetExceededError
from skein4.app.services.coeff.specs import CoeffSpec
from skein4.app.services.engine.basis3 import (
    ALTERNATING_REPRESENTATIVE,
    Key3,
    braid_basis,
    is_alternating_window,
    normal_form,
)
from skein4.app.services.engine.vectors import MemoTable, SkeinVector
from skein4.app.services.tangles.braid import BraidWord, Letters, free_reduce

# Configure logging
logger = logging.getLogger(__name__)

# Group identities turning the other alternating windows into words with squares
WINDOW_REWRITES: Dict[Letters, Letters] = {
    (-1, 2, -1, 2): (-1, -1, -2, 1, 2, 2),
    (-2, 1, -2, 1): (1, 2, 2, -1, -1, -2),
    (2, -1, 2, -1): (2, 2, 1, -2, -1, -1),
}

# (s1 s2^-1)^2 = s1^2 s2 s1^-1 s2^-2
REPRESENTATIVE_EXPANSION: Letters = (1, 1, 2, -1, -2, -2)

_tables: Dict[str, MemoTable] = {}


def _table(spec: CoeffSpec) -> MemoTable:
    if spec.name not in _tables:
        _tables.setdefault(spec.name, MemoTable(f"three_braid:{spec.name}"))
    return _tables[spec.name]


def expand_square(letters: Letters, index: int, spec: CoeffSpec) -> List[tuple]:
    """
    Skein expansion of the square starting at ``index``.

    Returns:
        list of (coefficient, word) pairs for the s^-1, empty and s terms
    """
    x = letters[index]
    g = abs(x)
    rule = spec.square_rule() if x > 0 else spec.inverse_square_rule()
    head, tail = letters[:index], letters[index + 2:]
    return [
        (rule[0], head + (-g,) + tail),
        (rule[1], head + tail),
        (rule[2], head + (g,) + tail),
    ]


def _first_square(letters: Letters) -> int:
    for i in range(len(letters) - 1):
        if letters[i] == letters[i + 1]:
            return i
    raise ValueError("word has no square")


class _Reducer:
    def __init__(self, spec: CoeffSpec):
        self.spec = spec
        self.table = _table(spec)
        self.steps = 0

    def reduce(self, letters: Letters) -> SkeinVector:
        return self.table.get_or_compute(letters, lambda: self._compute(letters))

    def _combine(self, terms) -> SkeinVector:
        result = SkeinVector.zero(3, self.spec.ring)
        for coefficient, word in terms:
            if coefficient.is_zero():
                continue
            result = result + self.reduce(free_reduce(word)).scale(coefficient)
        return result

    def _compute(self, letters: Letters) -> SkeinVector:
        self.steps += 1
        if self.steps > config.REDUCTION_BUDGET:
            raise BudgetExceededError(
                f"3-braid reduction exceeded {config.REDUCTION_BUDGET} steps",
                stuck=str(BraidWord(3, letters)),
            )
        best, hit = normal_form(letters)
        if hit is not None:
            return self._combine(expand_square(hit, _first_square(hit), self.spec))
        if best in braid_basis():
            return SkeinVector.basis(3, self.spec.ring, Key3.braid(best))
        for offset in range(len(best) - 3):
            window = best[offset:offset + 4]
            if is_alternating_window(window) and window != ALTERNATING_REPRESENTATIVE:
                rewritten = best[:offset] + WINDOW_REWRITES[window] + best[offset + 4:]
                logger.debug(f"Rewriting alternating window {window} of {best}")
                return self.reduce(free_reduce(rewritten))
        raise BudgetExceededError("No reduction applies to a non-basis word", stuck=str(BraidWord(3, best)))


def reduce_3braid(word: Union[BraidWord, Sequence[int]], spec: CoeffSpec) -> SkeinVector:
    """
    Reduce a 3-braid to the braid-type basis.

    Args:
        word: braid on 3 strands (or its letters)
        spec: coefficient spec

    Returns:
        SkeinVector: arity-3 vector over braid-type Key3 keys
    """
    if isinstance(word, BraidWord):
        if word.strands != 3:
            raise ArityError(f"reduce_3braid needs a 3-braid, got {word.strands} strands", subexpression=str(word))
        letters = word.letters
    else:
        letters = tuple(word)
        BraidWord(3, letters)
    return _Reducer(spec).reduce(free_reduce(letters))
