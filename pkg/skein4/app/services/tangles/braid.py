"""
Braid word module for skein4

This module provides braid words on n strands and a breadth-first normal
form search over free reduction, the braid relations and (for closed braids)
rotation of the word.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from skein4.app import config
from skein4.app.errors import BudgetExceededError, Skein4Error

# Configure logging
logger = logging.getLogger(__name__)

Letters = Tuple[int, ...]


def letter_key(letter: int) -> Tuple[int, bool]:
    """Order letters as s1 < s1^-1 < s2 < s2^-1 < ..."""
    return (abs(letter), letter < 0)


def word_key(letters: Sequence[int]) -> Tuple[int, Tuple[Tuple[int, bool], ...]]:
    return (len(letters), tuple(letter_key(l) for l in letters))


def free_reduce(letters: Iterable[int]) -> Letters:
    out: List[int] = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(letters: Iterable[int]) -> Letters:
    word = list(free_reduce(letters))
    start, end = 0, len(word)
    while end - start >= 2 and word[start] == -word[end - 1]:
        start += 1
        end -= 1
    return tuple(word[start:end])


@dataclass(frozen=True)
class BraidWord:
    """
    Word in the braid group on ``strands`` strands.

    Letters are signed generator indices: +i is s_i, -i is s_i^-1.
    """

    strands: int
    letters: Letters = ()

    def __post_init__(self):
        if self.strands < 1:
            raise Skein4Error(f"A braid needs at least one strand, got {self.strands}")
        letters = tuple(int(l) for l in self.letters)
        for letter in letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise Skein4Error(f"Generator {letter} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise Skein4Error("Cannot multiply braids on different numbers of strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return f"braid{self.strands}[{' '.join(str(l) for l in self.letters)}]"

    @property
    def writhe(self) -> int:
        return sum(1 if l > 0 else -1 for l in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-l for l in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-l for l in self.letters))

    def flip(self) -> "BraidWord":
        """Conjugate by the half twist: s_i -> s_(n-i)."""
        n = self.strands
        return BraidWord(n, tuple((n - abs(l)) * (1 if l > 0 else -1) for l in self.letters))

    def free_reduced(self) -> "BraidWord":
        return BraidWord(self.strands, free_reduce(self.letters))

    def permutation(self) -> Tuple[int, ...]:
        """perm[i] = top position of the strand that starts at bottom position i (0-based)."""
        position = list(range(self.strands))
        for letter in self.letters:
            i = abs(letter) - 1
            position[i], position[i + 1] = position[i + 1], position[i]
        result = [0] * self.strands
        for top, bottom in enumerate(position):
            result[bottom] = top
        return tuple(result)

    def closure_components(self) -> int:
        perm = self.permutation()
        seen = set()
        cycles = 0
        for start in range(self.strands):
            if start in seen:
                continue
            cycles += 1
            j = start
            while j not in seen:
                seen.add(j)
                j = perm[j]
        return cycles

    def generator_counts(self) -> dict:
        counts: dict = {}
        for letter in self.letters:
            counts[abs(letter)] = counts.get(abs(letter), 0) + 1
        return counts


def _relation_window(x: int, y: int, z: int) -> Optional[Letters]:
    """Length-preserving rewrite of s_i^e1 s_j^e2 s_i^e3 with |i-j| = 1, or None."""
    if abs(x) != abs(z) or abs(abs(x) - abs(y)) != 1:
        return None
    sx, sy, sz = x > 0, y > 0, z > 0
    if sx == sy == sz:
        return (y, x, y)
    if sx == sy and sz != sx:
        return (-y, x, y)
    if sy == sz and sx != sy:
        return (y, z, -y)
    return None


def braid_neighbours(letters: Letters, strands: int, cyclic: bool = False, flip: bool = False) -> List[Letters]:
    """All words one relation (or rotation/flip) away from ``letters``."""
    out: List[Letters] = []
    n = len(letters)
    for p in range(n - 1):
        x, y = letters[p], letters[p + 1]
        if abs(abs(x) - abs(y)) >= 2:
            out.append(letters[:p] + (y, x) + letters[p + 2:])
    for p in range(n - 2):
        window = _relation_window(*letters[p:p + 3])
        if window is not None:
            out.append(letters[:p] + window + letters[p + 3:])
    if cyclic:
        for k in range(1, n):
            out.append(letters[k:] + letters[:k])
    if flip:
        out.append(tuple((strands - abs(l)) * (1 if l > 0 else -1) for l in letters))
    return out


def braid_search(
    letters: Sequence[int],
    strands: int,
    cyclic: bool = False,
    flip: bool = False,
    stop: Optional[Callable[[Letters], bool]] = None,
    max_length: Optional[int] = None,
    frontier_cap: Optional[int] = None,
) -> Tuple[Letters, Optional[Letters]]:
    """
    Breadth-first search over the class of a braid word.

    Whenever a shorter word turns up the search restarts from it.

    Args:
        letters: starting word
        strands: number of strands
        cyclic: allow rotations and cyclic cancellation (conjugacy class)
        flip: also allow conjugation by the half twist
        stop: optional predicate; the first word satisfying it is returned
        max_length: length bound, defaults to config.BRAID_MAX_LENGTH
        frontier_cap: bound on visited words, defaults to config.BRAID_FRONTIER_CAP

    Returns:
        Tuple: (least word found, first word satisfying ``stop`` or None)
    """
    max_length = config.BRAID_MAX_LENGTH if max_length is None else max_length
    frontier_cap = config.BRAID_FRONTIER_CAP if frontier_cap is None else frontier_cap
    reduce = cyclic_reduce if cyclic else free_reduce
    current = reduce(letters)

    while True:
        if len(current) > max_length:
            raise BudgetExceededError(
                f"Braid word of length {len(current)} exceeds the bound {max_length}",
                stuck=str(BraidWord(strands, current)),
            )
        if stop is not None and stop(current):
            return current, current
        seen = {current}
        queue = deque([current])
        best = current
        shorter: Optional[Letters] = None
        while queue and shorter is None:
            word = queue.popleft()
            for candidate in braid_neighbours(word, strands, cyclic, flip):
                candidate = reduce(candidate)
                if len(candidate) < len(current):
                    shorter = candidate
                    break
                if candidate in seen:
                    continue
                seen.add(candidate)
                if len(seen) > frontier_cap:
                    raise BudgetExceededError(
                        f"Braid search visited more than {frontier_cap} words",
                        stuck=str(BraidWord(strands, current)),
                    )
                if stop is not None and stop(candidate):
                    return candidate, candidate
                if word_key(candidate) < word_key(best):
                    best = candidate
                queue.append(candidate)
        if shorter is None:
            return best, None
        current = shorter


def braid_normalize(word: BraidWord, cyclic: bool = False, flip: bool = False) -> BraidWord:
    """
    Length-minimal, lexicographically least representative of a braid.

    Args:
        word: braid word
        cyclic: normalize the conjugacy class instead of the element

    Returns:
        BraidWord: representative in the same class
    """
    best, _ = braid_search(word.letters, word.strands, cyclic=cyclic, flip=flip)
    return BraidWord(word.strands, best)


def parse_letters(text: str) -> Letters:
    """Parse ``1 -2 1`` (spaces or commas) into letters."""
    parts = text.replace(",", " ").split()
    return tuple(int(p) for p in parts)
