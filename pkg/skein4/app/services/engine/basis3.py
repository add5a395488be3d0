"""
Basis module for skein4

This module enumerates the basic 3-tangles: 24 braid-type tangles (braid
words of length at most four that no braid relation turns into a word with a
square) and 16 non-invertible ones, each described by how its bottom and top
boundary points are joined.

A non-invertible 3-tangle without closed components has one cap at the
bottom, one cup at the top and one through strand. The bottom part is one of
A12, A23 (cap on bottom points 1,2 or 2,3) or A13o, A13u (cap on bottom
points 1,3 with the through strand passing over or under it); the top part is
one of B12, B23, B13o, B13u.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import prod
from typing import Dict, FrozenSet, Optional, Sequence, Tuple, Union

from skein4.app.errors import Skein4Error
from skein4.app.services.tangles.braid import BraidWord, Letters, braid_search, free_reduce, word_key

# Configure logging
logger = logging.getLogger(__name__)

Token = Union[int, str]

BOTTOMS = ("A12", "A23", "A13o", "A13u")
TOPS = ("B12", "B23", "B13o", "B13u")

# Representative of the four alternating length-4 configurations
ALTERNATING_REPRESENTATIVE: Letters = (1, -2, 1, -2)

EXPECTED_BRAID_TYPE = 24
EXPECTED_NON_INVERTIBLE = 16

# Canonical word over s1^+-1, s2^+-1, U1, U2 of each (bottom, top) pair
PAIR_WORDS: Dict[Tuple[str, str], Tuple[Token, ...]] = {
    ("A12", "B12"): ("U1",),
    ("A23", "B23"): ("U2",),
    ("A12", "B23"): ("U1", "U2"),
    ("A23", "B12"): ("U2", "U1"),
    ("A13o", "B12"): (2, "U1"),
    ("A13u", "B12"): (-2, "U1"),
    ("A13u", "B23"): (1, "U2"),
    ("A13o", "B23"): (-1, "U2"),
    ("A12", "B13u"): ("U1", 2),
    ("A12", "B13o"): ("U1", -2),
    ("A23", "B13o"): ("U2", 1),
    ("A23", "B13u"): ("U2", -1),
    ("A13u", "B13o"): (1, "U2", 1),
    ("A13o", "B13o"): (-1, "U2", 1),
    ("A13u", "B13u"): (1, "U2", -1),
    ("A13o", "B13u"): (-1, "U2", -1),
}


@dataclass(frozen=True)
class Key3:
    """Basis key of the 3-tangle module: a braid word or a (bottom, top) pair."""

    word: Letters = ()
    pair: Optional[Tuple[str, str]] = None

    @classmethod
    def braid(cls, letters: Sequence[int]) -> "Key3":
        return cls(word=tuple(letters))

    @classmethod
    def of_pair(cls, bottom: str, top: str) -> "Key3":
        if bottom not in BOTTOMS or top not in TOPS:
            raise Skein4Error(f"Unknown non-invertible basis tangle ({bottom}, {top})")
        return cls(pair=(bottom, top))

    @classmethod
    def parse(cls, text: str) -> "Key3":
        text = text.strip()
        if text.startswith("b[") and text.endswith("]"):
            return cls.braid(tuple(int(p) for p in text[2:-1].split()))
        if "|" in text:
            bottom, top = text.split("|", 1)
            return cls.of_pair(bottom, top)
        raise Skein4Error(f"Cannot read basis key {text!r}")

    @property
    def is_braid(self) -> bool:
        return self.pair is None

    @property
    def bottom(self) -> str:
        return self.pair[0]

    @property
    def top(self) -> str:
        return self.pair[1]

    @property
    def tokens(self) -> Tuple[Token, ...]:
        """Canonical word of the key over s1^+-1, s2^+-1, U1, U2."""
        return tuple(self.word) if self.is_braid else PAIR_WORDS[self.pair]

    @property
    def crossings(self) -> int:
        return sum(1 for token in self.tokens if isinstance(token, int))

    def sort_key(self):
        if self.is_braid:
            return (0,) + word_key(self.word)
        return (1, BOTTOMS.index(self.bottom), TOPS.index(self.top))

    def __str__(self) -> str:
        if self.is_braid:
            return f"b[{' '.join(str(l) for l in self.word)}]"
        return f"{self.bottom}|{self.top}"


IDENTITY_KEY = Key3()


def has_square(letters: Sequence[int]) -> bool:
    return any(letters[i] == letters[i + 1] for i in range(len(letters) - 1))


def is_alternating_window(window: Sequence[int]) -> bool:
    """s_i^e s_j^-e s_i^e s_j^-e with {i, j} = {1, 2}."""
    if len(window) != 4:
        return False
    x, y, z, w = window
    return x == z and y == w and abs(x) != abs(y) and (x > 0) != (y > 0)


def normal_form(letters: Sequence[int]) -> Tuple[Letters, Optional[Letters]]:
    """(least word of the class, first word of the class with a square or None)."""
    return braid_search(letters, 3, stop=has_square)


@lru_cache(maxsize=None)
def braid_basis() -> FrozenSet[Letters]:
    """
    The braid-type basic 3-tangles as normalized words.

    Raises:
        Skein4Error: the count differs from 24, which means a convention bug
    """
    found = set()
    for length in range(5):
        for letters in product((1, -1, 2, -2), repeat=length):
            if free_reduce(letters) != letters or has_square(letters):
                continue
            best, hit = normal_form(letters)
            if hit is not None:
                continue
            if len(best) == 4 and is_alternating_window(best) and best != ALTERNATING_REPRESENTATIVE:
                continue
            found.add(best)
    if len(found) != EXPECTED_BRAID_TYPE:
        raise Skein4Error(f"Enumerated {len(found)} braid-type basic 3-tangles, expected {EXPECTED_BRAID_TYPE}")
    return frozenset(found)


@dataclass(frozen=True)
class Basis3:
    """The 40 basic 3-tangles"""

    braid_type: Tuple[BraidWord, ...]
    non_invertible: Tuple[Key3, ...]
    _index: Dict[Key3, int] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        for i, key in enumerate(self.keys):
            self._index[key] = i

    @property
    def keys(self) -> Tuple[Key3, ...]:
        return tuple(Key3.braid(w.letters) for w in self.braid_type) + self.non_invertible

    def index(self, key: Key3) -> int:
        return self._index[key]

    def __contains__(self, key: Key3) -> bool:
        return key in self._index

    def __len__(self) -> int:
        return len(self._index)


def _non_invertible_keys() -> Tuple[Key3, ...]:
    """Pairs reached, with a unit coefficient, by short words containing a U generator."""
    from skein4.app.services.coeff.specs import builtin_spec
    from skein4.app.services.engine.tangle3 import eval_tokens

    spec = builtin_spec("generic")
    tokens = (1, -1, 2, -2, "U1", "U2")
    found = set()
    for length in range(1, 4):
        for word in product(tokens, repeat=length):
            if not any(isinstance(tok, str) for tok in word):
                continue
            if sum(1 for tok in word if isinstance(tok, int)) > 2:
                continue
            vector = eval_tokens(word, spec)
            if len(vector) != 1:
                continue
            (key, coefficient), = vector.items()
            if not key.is_braid and coefficient.is_unit():
                found.add(key)
    if len(found) != EXPECTED_NON_INVERTIBLE:
        raise Skein4Error(f"Enumerated {len(found)} non-invertible basic 3-tangles, expected {EXPECTED_NON_INVERTIBLE}")
    return tuple(sorted(found, key=Key3.sort_key))


@lru_cache(maxsize=None)
def enumerate_basis3() -> Basis3:
    """
    Enumerate the 24 braid-type and 16 non-invertible basic 3-tangles.

    Returns:
        Basis3: the 40-element basis
    """
    braids = tuple(BraidWord(3, w) for w in sorted(braid_basis(), key=word_key))
    basis = Basis3(braid_type=braids, non_invertible=_non_invertible_keys())
    logger.info(f"Enumerated {len(basis.braid_type)} braid-type and {len(basis.non_invertible)} non-invertible 3-tangles")
    return basis


def g(n: int) -> int:
    """Conjectured number of basic n-tangles, prod_{i=1}^{n-1} (3^i + 1)."""
    if n < 1:
        raise ValueError("g(n) needs n >= 1")
    return prod(3 ** i + 1 for i in range(1, n))
