"""
Polynomial ring module for skein4

This module provides exact multivariate Laurent polynomials over the integers,
kept in canonical form modulo power relations (v^p -> q(v)) and an optional
integer modulus.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

import sympy as sp

from skein4.app.errors import (
    MixedRingError,
    NonUnitError,
    NormalizationError,
    RingError,
    UnboundVariableError,
)

# Configure logging
logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
TermMap = Mapping[Exponents, int]


def symmetric_residue(value: int, modulus: Optional[int]) -> int:
    """Reduce an integer to the residue of least absolute value (ties go positive)."""
    if not modulus:
        return value
    residue = value % modulus
    if residue > modulus // 2:
        residue -= modulus
    return residue


@dataclass(frozen=True)
class PowerRelation:
    """
    Rewrite rule ``variable^degree -> replacement``.

    The replacement is a univariate polynomial in the same variable given as
    (exponent, coefficient) pairs with exponents in [0, degree).
    """

    variable: str
    degree: int
    replacement: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, variable: str, degree: int, replacement: Mapping[int, int]) -> "PowerRelation":
        items = tuple(sorted((e, c) for e, c in replacement.items() if c))
        return cls(variable, degree, items)

    @property
    def constant_term(self) -> int:
        return dict(self.replacement).get(0, 0)


@dataclass(frozen=True)
class RingSpec:
    """
    Declaration of a quotient of Z[v1^(+-1), ..., vk^(+-1)].

    Args:
        name: identifier used in messages and cache keys
        variables: ordered variable names; output order follows this order
        invertible: variables allowed to carry negative exponents
        relations: at most one power relation per variable
        modulus: optional integer modulus on coefficients
    """

    name: str
    variables: Tuple[str, ...]
    invertible: FrozenSet[str] = frozenset()
    relations: Tuple[PowerRelation, ...] = ()
    modulus: Optional[int] = None
    _index: Dict[str, int] = field(default_factory=dict, compare=False, hash=False, repr=False)
    _inverses: Dict[int, Tuple[Tuple[int, int], ...]] = field(
        default_factory=dict, compare=False, hash=False, repr=False
    )

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise RingError(f"Duplicate variable names in ring {self.name}")
        unknown = set(self.invertible) - set(self.variables)
        if unknown:
            raise RingError(f"Invertible variables {sorted(unknown)} not declared in ring {self.name}")
        if self.modulus is not None and self.modulus < 2:
            raise RingError(f"Integer modulus must be at least 2, got {self.modulus}")
        object.__setattr__(self, "invertible", frozenset(self.invertible))
        self._index.update({name: i for i, name in enumerate(self.variables)})

        seen = set()
        for relation in self.relations:
            if relation.variable not in self._index:
                raise RingError(f"Relation on undeclared variable {relation.variable}")
            if relation.variable in seen:
                raise RingError(f"More than one relation on {relation.variable}")
            seen.add(relation.variable)
            if relation.degree < 1 or any(not 0 <= e < relation.degree for e, _ in relation.replacement):
                raise RingError(f"Relation on {relation.variable} does not lower the degree")
            if relation.variable in self.invertible:
                self._inverses[self._index[relation.variable]] = self._inverse_of(relation)

    def _inverse_of(self, relation: PowerRelation) -> Tuple[Tuple[int, int], ...]:
        # v^p = q0 + v*q'(v)  =>  v^-1 = (v^(p-1) - q'(v)) / q0, needs q0 = +-1
        q0 = relation.constant_term
        if q0 not in (1, -1):
            raise RingError(
                f"{relation.variable} is declared invertible but its relation has constant term {q0}"
            )
        inverse: Dict[int, int] = {relation.degree - 1: q0}
        for e, c in relation.replacement:
            if e > 0:
                inverse[e - 1] = inverse.get(e - 1, 0) - c * q0
        return tuple(sorted((e, c) for e, c in inverse.items() if c))

    def index(self, variable: str) -> int:
        try:
            return self._index[variable]
        except KeyError:
            raise RingError(f"Variable {variable} is not declared in ring {self.name}") from None

    def relation_for(self, variable: str) -> Optional[PowerRelation]:
        for relation in self.relations:
            if relation.variable == variable:
                return relation
        return None

    @property
    def is_free(self) -> bool:
        """True when no relation and no modulus is declared."""
        return not self.relations and self.modulus is None

    def extend(self, name: str, variables: Iterable[str] = (), invertible: Iterable[str] = ()) -> "RingSpec":
        """Return a ring with extra variables appended."""
        extra = tuple(v for v in variables if v not in self._index)
        return RingSpec(
            name=name,
            variables=self.variables + extra,
            invertible=self.invertible | frozenset(invertible),
            relations=self.relations,
            modulus=self.modulus,
        )

    # Element constructors

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return self.constant(1)

    def constant(self, value: int) -> "RingElement":
        return ring_normalize({(0,) * len(self.variables): value}, self)

    def var(self, name: str, exponent: int = 1) -> "RingElement":
        return self.monomial({name: exponent})

    def monomial(self, powers: Mapping[str, int], coefficient: int = 1) -> "RingElement":
        exps = [0] * len(self.variables)
        for name, e in powers.items():
            exps[self.index(name)] += e
        return ring_normalize({tuple(exps): coefficient}, self)

    def vars(self, *names: str) -> Tuple["RingElement", ...]:
        return tuple(self.var(name) for name in names)


def _rewrite(exps: Exponents, coeff: int, spec: RingSpec) -> Optional[List[Tuple[Exponents, int]]]:
    """Apply the first applicable relation to one term, or return None if reduced."""
    for relation in spec.relations:
        i = spec._index[relation.variable]
        e = exps[i]
        p = relation.degree
        if 0 <= e < p:
            continue
        if e < 0 and i not in spec._inverses:
            continue
        replacement = relation.replacement
        if len(replacement) == 1 and replacement[0][0] == 0 and replacement[0][1] in (1, -1):
            # v^p = +-1 collapses in one step
            quotient, remainder = divmod(e, p)
            sign = replacement[0][1] ** abs(quotient)
            return [(exps[:i] + (remainder,) + exps[i + 1:], coeff * sign)]
        if e >= p:
            return [(exps[:i] + (e - p + j,) + exps[i + 1:], coeff * c) for j, c in replacement]
        return [(exps[:i] + (e + 1 + j,) + exps[i + 1:], coeff * c) for j, c in spec._inverses[i]]
    return None


def ring_normalize(raw_terms: TermMap, spec: RingSpec) -> "RingElement":
    """
    Bring a raw term map into canonical form.

    Args:
        raw_terms: map from exponent vectors to integer coefficients
        spec: the governing ring

    Returns:
        RingElement: the unique canonical representative
    """
    width = len(spec.variables)
    acc: Dict[Exponents, int] = {}
    stack: List[Tuple[Exponents, int]] = [(tuple(e), c) for e, c in raw_terms.items() if c]
    while stack:
        exps, coeff = stack.pop()
        if not coeff:
            continue
        if len(exps) != width:
            raise NormalizationError(f"Exponent vector {exps} does not fit ring {spec.name}")
        for name, e in zip(spec.variables, exps):
            if e < 0 and name not in spec.invertible:
                raise NormalizationError(f"Negative exponent on non-invertible variable {name}")
        if spec.relations:
            rewritten = _rewrite(exps, coeff, spec)
            if rewritten is not None:
                stack.extend(rewritten)
                continue
        acc[exps] = acc.get(exps, 0) + coeff
    terms = {}
    for exps, coeff in acc.items():
        coeff = symmetric_residue(coeff, spec.modulus)
        if coeff:
            terms[exps] = coeff
    return RingElement(spec, terms)


Operand = Union["RingElement", int]


class RingElement:
    """Immutable canonical element of a RingSpec."""

    __slots__ = ("spec", "_items", "_hash")

    def __init__(self, spec: RingSpec, terms: TermMap):
        self.spec = spec
        self._items: Tuple[Tuple[Exponents, int], ...] = tuple(sorted(terms.items()))
        self._hash: Optional[int] = None

    # Basic views

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._items)

    def items(self) -> Iterator[Tuple[Exponents, int]]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def is_zero(self) -> bool:
        return not self._items

    def __bool__(self) -> bool:
        return bool(self._items)

    def is_constant(self) -> bool:
        return not self._items or (len(self._items) == 1 and not any(self._items[0][0]))

    def constant_value(self) -> int:
        if not self.is_constant():
            raise RingError(f"{self} is not a constant")
        return self._items[0][1] if self._items else 0

    def is_one(self) -> bool:
        return self.is_constant() and self.constant_value() == 1

    # Arithmetic

    def _coerce(self, other: Operand) -> "RingElement":
        if isinstance(other, RingElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise MixedRingError(f"Cannot combine elements of {self.spec.name} and {other.spec.name}")
            return other
        if isinstance(other, int):
            return self.spec.constant(other)
        return NotImplemented

    def __add__(self, other: Operand) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._items)
        for exps, coeff in other._items:
            acc[exps] = acc.get(exps, 0) + coeff
        return ring_normalize(acc, self.spec)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        if self.spec.modulus:
            return ring_normalize({e: -c for e, c in self._items}, self.spec)
        return RingElement(self.spec, {e: -c for e, c in self._items})

    def __sub__(self, other: Operand) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Operand) -> "RingElement":
        return (-self) + other

    def __mul__(self, other: Operand) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[Exponents, int] = {}
        for e1, c1 in self._items:
            for e2, c2 in other._items:
                exps = tuple(x + y for x, y in zip(e1, e2))
                acc[exps] = acc.get(exps, 0) + c1 * c2
        return ring_normalize(acc, self.spec)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.spec.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inverse(self) -> "RingElement":
        """Inverse of a unit monomial; raises NonUnitError otherwise."""
        if len(self._items) != 1:
            raise NonUnitError(f"{self} is not a unit in {self.spec.name}")
        exps, coeff = self._items[0]
        if coeff not in (1, -1):
            if not self.spec.modulus:
                raise NonUnitError(f"{self} is not a unit in {self.spec.name}")
            try:
                coeff = pow(coeff, -1, self.spec.modulus)
            except ValueError:
                raise NonUnitError(f"{self} is not a unit in {self.spec.name}") from None
        for name, e in zip(self.spec.variables, exps):
            if e and name not in self.spec.invertible:
                raise NonUnitError(f"{self} is not a unit: {name} is not invertible")
        return ring_normalize({tuple(-e for e in exps): coeff}, self.spec)

    def is_unit(self) -> bool:
        try:
            self.inverse()
        except NonUnitError:
            return False
        return True

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.is_constant() and self.constant_value() == symmetric_residue(other, self.spec.modulus)
        if not isinstance(other, RingElement):
            return NotImplemented
        return (other.spec is self.spec or other.spec == self.spec) and self._items == other._items

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec.name, self._items))
        return self._hash

    # Structure

    def degree_range(self, variable: str) -> Tuple[int, int]:
        i = self.spec.index(variable)
        if not self._items:
            return (0, 0)
        degrees = [exps[i] for exps, _ in self._items]
        return (min(degrees), max(degrees))

    def collect(self, variable: str) -> Dict[int, "RingElement"]:
        """Split into coefficients of powers of one variable."""
        i = self.spec.index(variable)
        buckets: Dict[int, Dict[Exponents, int]] = {}
        for exps, coeff in self._items:
            k = exps[i]
            buckets.setdefault(k, {})[exps[:i] + (0,) + exps[i + 1:]] = coeff
        return {k: RingElement(self.spec, terms) for k, terms in sorted(buckets.items())}

    def variables_used(self) -> FrozenSet[str]:
        used = set()
        for exps, _ in self._items:
            used.update(name for name, e in zip(self.spec.variables, exps) if e)
        return frozenset(used)

    def coerce(self, target: RingSpec) -> "RingElement":
        """Re-read the element in another ring whose variables include these."""
        if target is self.spec:
            return self
        positions = []
        for name in self.spec.variables:
            positions.append(target.index(name) if name in target._index else None)
        raw: Dict[Exponents, int] = {}
        width = len(target.variables)
        for exps, coeff in self._items:
            out = [0] * width
            for pos, e, name in zip(positions, exps, self.spec.variables):
                if e and pos is None:
                    raise UnboundVariableError(f"{name} does not exist in ring {target.name}")
                if pos is not None:
                    out[pos] = e
            key = tuple(out)
            raw[key] = raw.get(key, 0) + coeff
        return ring_normalize(raw, target)

    def substitute(
        self,
        bindings: Mapping[str, "RingElement"],
        target: Optional[RingSpec] = None,
        keep_others: bool = False,
    ) -> "RingElement":
        return ring_substitute(self, bindings, target, keep_others)

    # Text

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"RingElement({self.spec.name}: {format_poly(self)})"


def ring_arith(op: str, lhs: RingElement, rhs: Union[RingElement, int, None] = None) -> RingElement:
    """
    Dispatch one of add, mul, neg, pow.

    Args:
        op: operation name
        lhs: left operand
        rhs: right operand, or the integer exponent for pow

    Returns:
        RingElement: exact canonical result
    """
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "neg":
        return -lhs
    if op == "pow":
        if not isinstance(rhs, int):
            raise RingError("pow expects an integer exponent")
        return lhs ** rhs
    raise RingError(f"Unknown ring operation {op}")


def ring_substitute(
    elem: RingElement,
    bindings: Mapping[str, RingElement],
    target: Optional[RingSpec] = None,
    keep_others: bool = False,
) -> RingElement:
    """
    Image of an element under the homomorphism fixed by bindings.

    Args:
        elem: element to map
        bindings: variable name -> image in the target ring
        target: target ring; defaults to the ring of the bindings
        keep_others: map unbound variables to the same-named target variable

    Returns:
        RingElement: the image
    """
    if target is None:
        if not bindings:
            target = elem.spec
        else:
            target = next(iter(bindings.values())).spec
    images: List[Optional[RingElement]] = []
    for name in elem.spec.variables:
        if name in bindings:
            image = bindings[name]
            if image.spec is not target and image.spec != target:
                raise MixedRingError(f"Binding for {name} is not in ring {target.name}")
            images.append(image)
        elif keep_others and name in target._index:
            images.append(target.var(name))
        else:
            images.append(None)

    inverses: Dict[int, RingElement] = {}
    powers: Dict[Tuple[int, int], RingElement] = {}
    result = target.zero()
    for exps, coeff in elem.items():
        term = target.constant(coeff)
        for i, e in enumerate(exps):
            if not e:
                continue
            image = images[i]
            if image is None:
                raise UnboundVariableError(f"Variable {elem.spec.variables[i]} is not bound")
            if (i, e) not in powers:
                if e < 0:
                    if i not in inverses:
                        try:
                            inverses[i] = image.inverse()
                        except Exception:
                            raise NonUnitError(
                                f"Image of invertible variable {elem.spec.variables[i]} is not a unit"
                            ) from None
                    powers[(i, e)] = inverses[i] ** (-e)
                else:
                    powers[(i, e)] = image ** e
            term = term * powers[(i, e)]
        result = result + term
    return result


def _term_key(item: Tuple[Exponents, int]) -> Tuple[int, Exponents]:
    exps = item[0]
    return (sum(exps), exps)


def format_poly(elem: RingElement) -> str:
    """
    Render in the poly-ring text format, e.g. ``3*b^11*t - 1*b^13*t^2``.

    Terms are ordered by total degree, ties by exponent vector.
    """
    if elem.is_zero():
        return "0"
    parts: List[str] = []
    for index, (exps, coeff) in enumerate(sorted(elem.items(), key=_term_key)):
        factors = []
        for name, e in zip(elem.spec.variables, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        magnitude = str(abs(coeff))
        body = "*".join([magnitude] + factors) if factors else magnitude
        if index == 0:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)


def _symbols(spec: RingSpec) -> Tuple[sp.Symbol, ...]:
    return tuple(sp.Symbol(name) for name in spec.variables)


def to_sympy(elem: RingElement) -> sp.Expr:
    symbols = _symbols(elem.spec)
    expr = sp.Integer(0)
    for exps, coeff in elem.items():
        term = sp.Integer(coeff)
        for symbol, e in zip(symbols, exps):
            if e:
                term *= symbol ** e
        expr += term
    return expr


def from_sympy(expr: sp.Expr, spec: RingSpec) -> RingElement:
    """Read an expanded sympy expression with integer coefficients into a ring."""
    expanded = sp.expand(expr)
    raw: Dict[Exponents, int] = {}
    width = len(spec.variables)
    for monomial, coeff in expanded.as_coefficients_dict().items():
        if coeff == 0:
            continue
        if not coeff.is_Integer:
            raise RingError(f"Non-integer coefficient {coeff} in {expr}")
        exps = [0] * width
        if monomial != 1:
            for base, e in monomial.as_powers_dict().items():
                if not base.is_Symbol or not e.is_Integer:
                    raise RingError(f"Not a Laurent monomial: {monomial}")
                exps[spec.index(str(base))] += int(e)
        key = tuple(exps)
        raw[key] = raw.get(key, 0) + int(coeff)
    return ring_normalize(raw, spec)


def divide_exact(numerator: RingElement, denominator: RingElement) -> RingElement:
    """
    Exact quotient in a free Laurent ring.

    The quotient may only need inverses of invertible monomials; anything else
    is reported as a non-unit denominator.

    Raises:
        NonUnitError: denominator is zero or does not divide the numerator
        RingError: the ring carries relations or a modulus
    """
    if numerator.spec != denominator.spec:
        raise MixedRingError("Cannot divide elements of different rings")
    spec = numerator.spec
    if denominator.is_zero():
        raise NonUnitError("Division by zero")
    if denominator.is_unit():
        return numerator * denominator.inverse()
    if not spec.is_free:
        raise RingError(f"Exact division needs a free Laurent ring, not {spec.name}")
    if numerator.is_zero():
        return numerator
    ratio = sp.cancel(to_sympy(numerator) / to_sympy(denominator))
    top, bottom = sp.fraction(ratio)
    remainder = from_sympy(bottom, spec)
    if not remainder.is_unit():
        raise NonUnitError(f"{denominator} does not divide {numerator} in {spec.name}")
    logger.debug(f"Exact division in {spec.name} left monomial denominator {remainder}")
    return from_sympy(top, spec) * remainder.inverse()
