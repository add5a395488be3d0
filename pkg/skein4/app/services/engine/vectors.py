"""
Skein vector module for skein4

This module provides finite linear combinations of basis tangles with ring
coefficients, and the concurrent-safe memo tables the evaluators share.
"""

import logging
import threading
from typing import Callable, Dict, Hashable, Iterator, Mapping, Optional, Protocol, Tuple, Union

from skein4.app.errors import MixedRingError
from skein4.app.services.coeff.specs import MARKER
from skein4.app.services.poly import RingElement, RingSpec, format_poly

# Configure logging
logger = logging.getLogger(__name__)

Key = Hashable
Scalar = Union[RingElement, int]

# Display order of the four basic 2-tangles
TWO_ORDER = ("I", "U", "S", "Sbar")


def _key_order(key: Key):
    order = getattr(key, "sort_key", None)
    if order is not None:
        return order()
    if isinstance(key, str):
        return (TWO_ORDER.index(key),) if key in TWO_ORDER else (len(TWO_ORDER), key)
    return key


class SkeinVector:
    """
    Linear combination of basis keys.

    Keys are t-powers (int) for links, one of I, U, S, Sbar for 2-tangles and
    Key3 values for 3-tangles. Zero coefficients are never stored.
    """

    __slots__ = ("arity", "ring", "_entries")

    def __init__(self, arity: int, ring: RingSpec, entries: Optional[Mapping[Key, RingElement]] = None):
        self.arity = arity
        self.ring = ring
        self._entries: Dict[Key, RingElement] = {}
        for key, coefficient in (entries or {}).items():
            if coefficient.spec != ring:
                raise MixedRingError(f"Coefficient of {key} is not in ring {ring.name}")
            if not coefficient.is_zero():
                self._entries[key] = coefficient

    # Constructors

    @classmethod
    def zero(cls, arity: int, ring: RingSpec) -> "SkeinVector":
        return cls(arity, ring)

    @classmethod
    def basis(cls, arity: int, ring: RingSpec, key: Key, coefficient: Optional[Scalar] = None) -> "SkeinVector":
        if coefficient is None:
            coefficient = ring.one()
        elif isinstance(coefficient, int):
            coefficient = ring.constant(coefficient)
        return cls(arity, ring, {key: coefficient})

    @classmethod
    def link(cls, value: RingElement) -> "SkeinVector":
        """Split a link value into trivial-link components t^k."""
        entries = value.collect(MARKER)
        return cls(0, value.spec, entries)

    # Views

    def items(self) -> Iterator[Tuple[Key, RingElement]]:
        for key in sorted(self._entries, key=_key_order):
            yield key, self._entries[key]

    def keys(self):
        return sorted(self._entries, key=_key_order)

    def coefficient(self, key: Key) -> RingElement:
        return self._entries.get(key, self.ring.zero())

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: Key) -> bool:
        return key in self._entries

    def is_zero(self) -> bool:
        return not self._entries

    @property
    def value(self) -> RingElement:
        """Link value sum(c_k * t^k); for tangles the coefficients summed with their t-powers."""
        total = self.ring.zero()
        t = self.ring.var(MARKER)
        for key, coefficient in self._entries.items():
            total = total + (coefficient * t ** key if isinstance(key, int) else coefficient)
        return total

    # Arithmetic

    def _check(self, other: "SkeinVector") -> None:
        if other.arity != self.arity or other.ring != self.ring:
            raise MixedRingError(
                f"Cannot combine a {self.arity}-vector over {self.ring.name} "
                f"with a {other.arity}-vector over {other.ring.name}"
            )

    def __add__(self, other: "SkeinVector") -> "SkeinVector":
        self._check(other)
        acc = dict(self._entries)
        for key, coefficient in other._entries.items():
            acc[key] = acc[key] + coefficient if key in acc else coefficient
        return SkeinVector(self.arity, self.ring, acc)

    def __neg__(self) -> "SkeinVector":
        return SkeinVector(self.arity, self.ring, {k: -c for k, c in self._entries.items()})

    def __sub__(self, other: "SkeinVector") -> "SkeinVector":
        return self + (-other)

    def scale(self, factor: Scalar) -> "SkeinVector":
        if isinstance(factor, int):
            factor = self.ring.constant(factor)
        if factor.is_one():
            return self
        return SkeinVector(self.arity, self.ring, {k: c * factor for k, c in self._entries.items()})

    def __rmul__(self, factor: Scalar) -> "SkeinVector":
        return self.scale(factor)

    def expand(self, image: Callable[[Key], "SkeinVector"], arity: Optional[int] = None) -> "SkeinVector":
        """Linear extension of a map on basis keys."""
        result = SkeinVector.zero(self.arity if arity is None else arity, self.ring)
        for key, coefficient in self._entries.items():
            result = result + image(key).scale(coefficient)
        return result

    def map_coefficients(self, fn: Callable[[RingElement], RingElement], ring: RingSpec) -> "SkeinVector":
        return SkeinVector(self.arity, ring, {k: fn(c) for k, c in self._entries.items()})

    # Comparison and text

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkeinVector):
            return NotImplemented
        return self.arity == other.arity and self.ring == other.ring and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.arity, self.ring.name, frozenset(self._entries.items())))

    def format(self) -> str:
        if self.arity == 0:
            return format_poly(self.value)
        if not self._entries:
            return "0"
        return " + ".join(f"({format_poly(c)})*[{k}]" for k, c in self.items())

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"SkeinVector(arity={self.arity}, {self.format()})"


class TableStore(Protocol):
    """Backing store of a memo table"""

    def fetch(self, key: Key) -> Optional[SkeinVector]:
        ...

    def save(self, key: Key, value: SkeinVector) -> None:
        ...


class MemoTable:
    """
    Concurrent-safe cache with at-most-once insertion.

    ``compute`` runs outside the lock, so recursive lookups are allowed; when
    two threads race, the first inserted value wins and is returned to both.
    """

    def __init__(self, name: str, store: Optional[TableStore] = None):
        self.name = name
        self.store = store
        self._lock = threading.Lock()
        self._data: Dict[Key, object] = {}
        self.misses = 0

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: Key) -> bool:
        with self._lock:
            return key in self._data

    def get(self, key: Key):
        with self._lock:
            return self._data.get(key)

    def get_or_compute(self, key: Key, compute: Callable[[], object]):
        with self._lock:
            if key in self._data:
                return self._data[key]
        value = self.store.fetch(key) if self.store is not None else None
        loaded = value is not None
        if not loaded:
            self.misses += 1
            logger.debug(f"Memo miss in {self.name}: {key}")
            value = compute()
        with self._lock:
            value = self._data.setdefault(key, value)
        if not loaded and self.store is not None:
            self.store.save(key, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
