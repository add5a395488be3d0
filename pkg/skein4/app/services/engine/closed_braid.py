"""
Closed three-braid module for skein4

This module evaluates braid closures of 3-braids as combinations of trivial
links. Words are reduced up to conjugation and the flip s1 <-> s2; a
generator used once is removed by Markov destabilization, squares (also
across the end of the cyclic word) are expanded with the skein relation, and
the alternating words (s1 s2^-1)^m are rewritten until they acquire squares.
The closure of (s1 s2^-1)^2 is the figure-eight knot and is valued through
the 2-algebraic evaluator.
"""

import logging
from typing import Dict, Sequence, Tuple, Union

from skein4.app import config
from skein4.app.errors import ArityError, BudgetExceededError
from skein4.app.services.coeff.specs import CoeffSpec
from skein4.app.services.engine.table_cache import VectorStore
from skein4.app.services.engine.three_braid import REPRESENTATIVE_EXPANSION, expand_square
from skein4.app.services.engine.two_tangle import close_2tangle, eval_2tangle, twist_vector
from skein4.app.services.engine.vectors import MemoTable, SkeinVector
from skein4.app.services.tangles.braid import BraidWord, Letters, braid_search, cyclic_reduce, word_key
from skein4.app.services.tangles.diagram import closure_stats
from skein4.app.services.tangles.expr import Numerator, Rational

# Configure logging
logger = logging.getLogger(__name__)

# Two-bridge presentation of the closure of (s1 s2^-1)^2
FIGURE_EIGHT = Numerator(Rational((2, 2)))


def _flip(letters: Sequence[int]) -> Letters:
    return tuple((3 - abs(l)) * (1 if l > 0 else -1) for l in letters)


def conjugacy_key(letters: Sequence[int]) -> Letters:
    """Least rotation of the word or of its flip."""
    word = cyclic_reduce(letters)
    if not word:
        return word
    candidates = []
    for w in (word, _flip(word)):
        candidates.extend(w[k:] + w[:k] for k in range(len(w)))
    return min(candidates, key=word_key)


def cyclic_square(letters: Sequence[int]) -> int:
    """Start of the first square of the cyclic word, or -1."""
    n = len(letters)
    if n < 2:
        return -1
    for i in range(n):
        if letters[i] == letters[(i + 1) % n]:
            return i
    return -1


def is_alternating(letters: Sequence[int]) -> bool:
    """(s_i^e s_j^-e)^m as a cyclic word, m >= 2."""
    n = len(letters)
    if n < 4 or n % 2:
        return False
    return all(
        abs(letters[i]) != abs(letters[(i + 1) % n]) and (letters[i] > 0) != (letters[(i + 1) % n] > 0)
        for i in range(n)
    )


def _used_once(letters: Sequence[int]) -> int:
    counts: Dict[int, int] = {}
    for letter in letters:
        counts[abs(letter)] = counts.get(abs(letter), 0) + 1
    for index, count in sorted(counts.items()):
        if count == 1:
            return index
    return 0


def _reducible(letters: Sequence[int]) -> bool:
    return (
        not letters
        or len({abs(l) for l in letters}) == 1
        or _used_once(letters) != 0
        or cyclic_square(letters) >= 0
    )


def two_strand_closure(exponent: int, spec: CoeffSpec) -> SkeinVector:
    """Closure of the 2-braid s^exponent."""
    return close_2tangle(twist_vector(exponent, spec), spec, numerator=False)


def _key_text(letters: Letters) -> Tuple[str, str]:
    return str(BraidWord(3, letters)), ""


_tables: Dict[str, MemoTable] = {}


def _table(spec: CoeffSpec) -> MemoTable:
    if spec.name not in _tables:
        store = VectorStore("closed_braid", spec, 0, _key_text, int)
        _tables.setdefault(spec.name, MemoTable(f"closed_braid:{spec.name}", store))
    return _tables[spec.name]


class _ClosureEvaluator:
    def __init__(self, spec: CoeffSpec):
        self.spec = spec
        self.table = _table(spec)
        self.steps = 0

    def value(self, letters: Sequence[int]) -> SkeinVector:
        key = conjugacy_key(letters)
        return self.table.get_or_compute(key, lambda: self._compute(key))

    def _combine(self, terms) -> SkeinVector:
        result = SkeinVector.zero(0, self.spec.ring)
        for coefficient, word in terms:
            if coefficient.is_zero():
                continue
            result = result + self.value(word).scale(coefficient)
        return result

    def _compute(self, letters: Letters) -> SkeinVector:
        self.steps += 1
        if self.steps > config.REDUCTION_BUDGET:
            raise BudgetExceededError(
                f"Closed 3-braid evaluation exceeded {config.REDUCTION_BUDGET} steps",
                stuck=str(BraidWord(3, letters)),
            )
        spec = self.spec
        if not letters:
            return SkeinVector.link(spec.t ** 3)
        if len({abs(l) for l in letters}) == 1:
            # The unused strand closes to a split circle
            return two_strand_closure(sum(1 if l > 0 else -1 for l in letters), spec).scale(spec.t)
        once = _used_once(letters)
        if once:
            (letter,) = [l for l in letters if abs(l) == once]
            rest = sum(1 if l > 0 else -1 for l in letters if abs(l) != once)
            return two_strand_closure(rest, spec).scale(spec.a_power(1 if letter > 0 else -1))
        start = cyclic_square(letters)
        if start >= 0:
            rotated = letters[start:] + letters[:start]
            return self._combine(expand_square(rotated, 0, spec))
        best, hit = braid_search(letters, 3, cyclic=True, flip=True, stop=_reducible)
        if hit is not None:
            return self.value(hit)
        if not is_alternating(best):
            raise BudgetExceededError("No reduction applies to a closed 3-braid", stuck=str(BraidWord(3, best)))
        if len(best) == 4:
            return self._figure_eight()
        logger.debug(f"Rewriting alternating closed braid {best}")
        return self.value(REPRESENTATIVE_EXPANSION + best[4:])

    def _figure_eight(self) -> SkeinVector:
        # The closure of (s1 s2^-1)^2 has writhe 0
        framing = closure_stats(FIGURE_EIGHT).framing
        value = close_2tangle(eval_2tangle(FIGURE_EIGHT.child, self.spec), self.spec, numerator=True)
        return value.scale(self.spec.a_power(-framing))


def eval_closed_3braid(word: Union[BraidWord, Sequence[int]], spec: CoeffSpec) -> SkeinVector:
    """
    Value of the braid closure of a 3-braid.

    Args:
        word: braid on 3 strands (or its letters)
        spec: coefficient spec

    Returns:
        SkeinVector: link vector over t-powers

    Raises:
        ArityError: the braid is not on 3 strands
        BudgetExceededError: the reduction did not terminate within the budget
    """
    if isinstance(word, BraidWord):
        if word.strands != 3:
            raise ArityError(f"eval_closed_3braid needs a 3-braid, got {word.strands} strands", subexpression=str(word))
        letters = word.letters
    else:
        letters = tuple(word)
        BraidWord(3, letters)
    return _ClosureEvaluator(spec).value(letters)
