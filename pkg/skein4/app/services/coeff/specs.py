"""
Coefficient spec module for skein4

This module provides the named specializations (a, b0, b1, b2, b3) of the
fourth skein relation

    b0*L0 + b1*L1 + b2*L2 + b3*L3 = 0,    L^(1) = a*L

each living in its own Laurent polynomial ring with the trivial-component
marker t adjoined.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Tuple

from skein4.app.errors import RingError, Skein4Error
from skein4.app.services.poly import PowerRelation, RingElement, RingSpec

# Configure logging
logger = logging.getLogger(__name__)

MARKER = "t"


@dataclass(frozen=True)
class CoeffSpec:
    """
    A specialization of the skein and framing coefficients.

    Args:
        name: CLI name of the spec
        ring: ring holding the coefficients, with the marker t adjoined
        a: framing unit
        b: the four skein coefficients (b0, b1, b2, b3)
        description: one-line human description
    """

    name: str
    ring: RingSpec
    a: RingElement
    b: Tuple[RingElement, RingElement, RingElement, RingElement]
    description: str = ""
    _units: Dict[str, RingElement] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if MARKER not in self.ring.variables:
            raise RingError(f"Spec {self.name} has no trivial-component marker {MARKER}")
        for label, value in (("a", self.a), ("b0", self.b[0]), ("b3", self.b[3])):
            if not value.is_unit():
                raise RingError(f"{label} = {value} is not a unit in spec {self.name}")
            self._units[label] = value.inverse()
        for k, value in enumerate(self.b):
            if MARKER in value.variables_used():
                raise RingError(f"b{k} of spec {self.name} mentions the marker {MARKER}")

    @property
    def b0(self) -> RingElement:
        return self.b[0]

    @property
    def b1(self) -> RingElement:
        return self.b[1]

    @property
    def b2(self) -> RingElement:
        return self.b[2]

    @property
    def b3(self) -> RingElement:
        return self.b[3]

    @property
    def a_inv(self) -> RingElement:
        return self._units["a"]

    @property
    def b0_inv(self) -> RingElement:
        return self._units["b0"]

    @property
    def b3_inv(self) -> RingElement:
        return self._units["b3"]

    @property
    def t(self) -> RingElement:
        return self.ring.var(MARKER)

    def one(self) -> RingElement:
        return self.ring.one()

    def zero(self) -> RingElement:
        return self.ring.zero()

    def a_power(self, k: int) -> RingElement:
        return self.a ** k

    def square_rule(self) -> Tuple[RingElement, RingElement, RingElement]:
        """Coefficients of s^2 = c(-1)*s^-1 + c(0)*1 + c(1)*s for a positive crossing s."""
        m = -self.b3_inv
        return (m * self.b0, m * self.b1, m * self.b2)

    def inverse_square_rule(self) -> Tuple[RingElement, RingElement, RingElement]:
        """Coefficients of s^-2 = c(-1)*s^-1 + c(0)*1 + c(1)*s."""
        m = -self.b0_inv
        return (m * self.b1, m * self.b2, m * self.b3)


def _make_spec(name, ring, a, b, description) -> CoeffSpec:
    return CoeffSpec(name=name, ring=ring, a=a, b=tuple(b), description=description)


def _spec_i() -> CoeffSpec:
    ring = RingSpec(
        "spec-i",
        ("x", "a", "t"),
        invertible=frozenset({"a"}),
        relations=(PowerRelation.of("a", 4, {0: 1}),),
    )
    x, a = ring.vars("x", "a")
    return _make_spec(
        "spec-i", ring, a, (ring.one(), a * x, -(a ** 2) * x, -(a ** 3)),
        "L0 + ax L1 - a^2x L2 - a^3 L3 over Z[x][a]/(a^4-1)",
    )


def _spec_ii() -> CoeffSpec:
    ring = RingSpec(
        "spec-ii",
        ("x", "a", "t"),
        invertible=frozenset({"x", "a"}),
        relations=(PowerRelation.of("a", 4, {0: 1}),),
    )
    x, a = ring.vars("x", "a")
    return _make_spec(
        "spec-ii", ring, a, (ring.one(), a * x, -(a ** 2), -(a ** 3) * x),
        "L0 + ax L1 - a^2 L2 - a^3x L3 over Z[x^(+-1)][a]/(a^4-1)",
    )


def _spec_iii() -> CoeffSpec:
    ring = RingSpec("spec-iii", ("b", "t"), invertible=frozenset({"b"}))
    b = ring.var("b")
    binv = ring.var("b", -1)
    return _make_spec(
        "spec-iii", ring, -(b ** 3),
        (ring.one(), b ** 3 + binv, b ** 2 + binv ** 2, b),
        "L0 + b(b^2+b^-2) L1 + (b^2+b^-2) L2 + b L3, framing -b^3",
    )


def _kauffman() -> CoeffSpec:
    ring = RingSpec("kauffman", ("z", "a", "t"), invertible=frozenset({"z", "a"}))
    z, a = ring.vars("z", "a")
    return _make_spec(
        "kauffman", ring, a, (ring.one(), -(z + a), z * a + 1, -a),
        "Kauffman specialization L0 - (z+a) L1 + (za+1) L2 - a L3",
    )


def _generic() -> CoeffSpec:
    ring = RingSpec(
        "generic",
        ("a", "b0", "b1", "b2", "b3", "t"),
        invertible=frozenset({"a", "b0", "b3"}),
    )
    a, b0, b1, b2, b3 = ring.vars("a", "b0", "b1", "b2", "b3")
    return _make_spec("generic", ring, a, (b0, b1, b2, b3), "symbolic a, b0..b3 with a, b0, b3 units")


def _p1() -> CoeffSpec:
    ring = RingSpec("p1", ("x", "t"))
    x = ring.var("x")
    return _make_spec("p1", ring, ring.one(), (ring.one(), x, -x, ring.constant(-1)), "spec-i at a = 1")


_BUILDERS = {
    "spec-i": _spec_i,
    "spec-ii": _spec_ii,
    "spec-iii": _spec_iii,
    "kauffman": _kauffman,
    "generic": _generic,
    "p1": _p1,
}


def spec_names() -> Tuple[str, ...]:
    return tuple(_BUILDERS)


def _canonical_name(name: str) -> str:
    return name.strip().lower().replace("_", "-")


@lru_cache(maxsize=None)
def _build(name: str) -> CoeffSpec:
    spec = _BUILDERS[name]()
    logger.debug(f"Built coefficient spec {name}: {spec.description}")
    return spec


def builtin_spec(name: str) -> CoeffSpec:
    """
    Return a named builtin spec.

    Args:
        name: one of spec-i, spec-ii, spec-iii, kauffman, generic, p1
            (SPEC_I style spellings are accepted)

    Returns:
        CoeffSpec: a shared immutable instance
    """
    key = _canonical_name(name)
    if key not in _BUILDERS:
        raise Skein4Error(f"Unknown coefficient spec {name!r}; expected one of {', '.join(_BUILDERS)}")
    return _build(key)
