import random

import pytest

from skein4.app.errors import (
    MixedRingError,
    NonUnitError,
    NormalizationError,
    PolynomialSyntaxError,
    RingError,
    UnboundVariableError,
)
from skein4.app.services.poly import (
    PowerRelation,
    RingSpec,
    divide_exact,
    format_poly,
    parse_poly,
    ring_arith,
    ring_substitute,
)


@pytest.fixture
def quartic():
    return RingSpec(
        "quartic",
        ("x", "a", "t"),
        invertible=frozenset({"a"}),
        relations=(PowerRelation.of("a", 4, {0: 1}),),
    )


@pytest.fixture
def hexagon():
    # t^2 = t - 1
    return RingSpec(
        "hexagon",
        ("t",),
        invertible=frozenset({"t"}),
        relations=(PowerRelation.of("t", 2, {1: 1, 0: -1}),),
    )


def test_fourth_root_of_unity_reduces(quartic):
    a = quartic.var("a")
    assert a ** 4 == 1
    assert a ** 5 == a
    assert a ** -1 == a ** 3
    assert a.inverse() * a == 1


def test_inverse_through_relation(hexagon):
    t = hexagon.var("t")
    assert t ** -1 == 1 - t
    assert t ** 3 == -1
    assert t ** 6 == 1
    assert hexagon.var("t", -7) == t ** -1


def test_integer_modulus_uses_symmetric_residues():
    ring = RingSpec("mod3", ("t",), invertible=frozenset({"t"}), modulus=3)
    assert ring.constant(4) == 1
    assert format_poly(ring.constant(2)) == "-1"
    t = ring.var("t")
    assert (3 * t).is_zero()
    assert (2 * t).inverse() == -(t ** -1)


def test_integer_operands_on_both_sides(quartic):
    x = quartic.var("x")
    assert 1 - x == -(x - 1)
    assert 2 * x == x + x
    assert 3 + x == x + 3


def test_mixed_rings_rejected(quartic, hexagon):
    with pytest.raises(MixedRingError):
        quartic.var("t") + hexagon.var("t")


def test_non_invertible_negative_exponent(quartic):
    with pytest.raises(NormalizationError):
        quartic.var("x", -1)


def test_non_unit_inverse(quartic):
    x = quartic.var("x")
    with pytest.raises(NonUnitError):
        (1 + x).inverse()
    with pytest.raises(NonUnitError):
        x.inverse()
    assert not (2 * quartic.var("a")).is_unit()
    assert (-quartic.var("a")).is_unit()


def test_invertible_relation_needs_unit_constant():
    with pytest.raises(RingError):
        RingSpec("bad", ("t",), invertible=frozenset({"t"}), relations=(PowerRelation.of("t", 2, {0: 2}),))


def test_format_orders_by_total_degree():
    ring = RingSpec("b", ("b", "t"), invertible=frozenset({"b"}))
    b, t = ring.vars("b", "t")
    value = 3 * b ** 11 * t - b ** 13 * t ** 2
    assert format_poly(value) == "3*b^11*t - 1*b^13*t^2"
    assert format_poly((t - 1) ** 2) == "1 - 2*t + 1*t^2"
    assert format_poly(ring.zero()) == "0"
    assert format_poly(b ** -1) == "1*b^-1"


def test_parse_reads_format_back():
    ring = RingSpec("b", ("b", "t"), invertible=frozenset({"b"}))
    text = "3*b^11*t + 7*b^7*t + 9*b^3*t + 8*b^-1*t - 1*b^13*t^2"
    value = parse_poly(text, ring)
    assert parse_poly(format_poly(value), ring) == value
    assert parse_poly("(b + b^-1)^2", ring) == parse_poly("b^2 + 2 + b^-2", ring)


@pytest.mark.parametrize("text", ["", "   ", "x/2", "x + y", "x^-1", "x**", "1.5*x"])
def test_parse_errors(quartic, text):
    with pytest.raises(PolynomialSyntaxError):
        parse_poly(text, quartic)


def test_parse_applies_relations(quartic):
    assert parse_poly("a^6 + a^2", quartic) == 2 * quartic.var("a", 2)


def test_divide_exact():
    ring = RingSpec("free", ("x", "a"), invertible=frozenset({"a"}))
    x, a = ring.vars("x", "a")
    assert divide_exact(x ** 2 - 1, x - 1) == x + 1
    assert divide_exact(a * x ** 2 - a, a ** 2 * (x + 1)) == a ** -1 * (x - 1)
    with pytest.raises(NonUnitError):
        divide_exact(x + 2, x - 1)
    with pytest.raises(NonUnitError):
        divide_exact(x, ring.zero())


def test_substitute(quartic):
    target = RingSpec("target", ("y",))
    y = target.var("y")
    x, t = quartic.vars("x", "t")
    image = ring_substitute(x ** 2 + t, {"x": y + 1, "t": target.one()})
    assert image == y ** 2 + 2 * y + 2
    with pytest.raises(UnboundVariableError):
        ring_substitute(x + t, {"x": y})


def test_substitute_keeps_other_variables(quartic):
    x, a = quartic.vars("x", "a")
    image = (x * a).substitute({"x": quartic.constant(-2)}, keep_others=True)
    assert image == -2 * a


def test_coerce(quartic):
    small = RingSpec("small", ("x", "t"))
    x = small.var("x")
    assert (x + 1).coerce(quartic) == quartic.var("x") + 1
    with pytest.raises(UnboundVariableError):
        quartic.var("a").coerce(small)


def test_collect(quartic):
    x, a, t = quartic.vars("x", "a", "t")
    value = x * t + a * t ** 2 + 5
    parts = value.collect("t")
    assert sorted(parts) == [0, 1, 2]
    assert parts[1] == x
    assert parts[2] == a
    assert value.degree_range("t") == (0, 2)


def test_ring_arith_dispatch(quartic):
    x = quartic.var("x")
    assert ring_arith("add", x, 1) == x + 1
    assert ring_arith("mul", x, x) == x ** 2
    assert ring_arith("neg", x) == -x
    assert ring_arith("pow", quartic.var("a"), -1) == quartic.var("a", 3)
    with pytest.raises(RingError):
        ring_arith("pow", x, x)
    with pytest.raises(RingError):
        ring_arith("div", x, x)


def test_ring_normalize(quartic):
    from skein4.app.services.poly import ring_normalize

    a = quartic.var("a")
    assert ring_normalize({(0, 5, 0): 1}, quartic) == a
    assert ring_normalize({(0, 0, 1): 3, (0, 4, 1): -3}, quartic).is_zero()
    element = (quartic.var("x") + a ** 3) ** 2
    assert ring_normalize(dict(element.items()), quartic) == element
    with pytest.raises(NormalizationError):
        ring_normalize({(-1, 0, 0): 1}, quartic)


@pytest.mark.parametrize(
    "text",
    ["t^(9^9^9)", "9^9^9", "t^2^3", "t**99", "t^x", "(t+1)^300", "t^1000001", "2^5*t"],
)
def test_parse_rejects_unbounded_powers(text):
    ring = RingSpec("laurent", ("t",), invertible=frozenset({"t"}))
    with pytest.raises(PolynomialSyntaxError):
        parse_poly(text, ring)


def test_parse_accepts_bounded_powers():
    ring = RingSpec("laurent", ("t",), invertible=frozenset({"t"}))
    t = ring.var("t")
    assert parse_poly("t ^ -3", ring) == t ** -3
    assert parse_poly("((t+1)^2)^2", ring) == (t + 1) ** 4
    assert parse_poly("t^100000", ring) == t ** 100000


# Properties on random elements


def random_element(ring, rng, terms=4, low=-3, high=5):
    value = ring.zero()
    for _ in range(terms):
        powers = {}
        for name in ring.variables:
            lowest = low if name in ring.invertible else 0
            powers[name] = rng.randint(lowest, high)
        value = value + ring.monomial(powers, rng.randint(-4, 4))
    return value


def test_distributivity_gives_one_canonical_form(quartic):
    rng = random.Random(11)
    for _ in range(50):
        p, q, r = (random_element(quartic, rng) for _ in range(3))
        left, right = (p + q) * r, p * r + q * r
        assert left == right
        assert format_poly(left) == format_poly(right)


def test_substitution_is_a_homomorphism():
    source = RingSpec("source", ("x", "a", "t"), invertible=frozenset({"a"}))
    target = RingSpec("target", ("y", "z"), invertible=frozenset({"z"}))
    y, z = target.vars("y", "z")
    bindings = {"x": y + 1, "a": -(z ** 2), "t": y * z ** -1 - 2}
    rng = random.Random(5)
    for _ in range(100):
        p, q = random_element(source, rng, terms=3, high=3), random_element(source, rng, terms=3, high=3)
        assert ring_substitute(p * q, bindings) == ring_substitute(p, bindings) * ring_substitute(q, bindings)
        assert ring_substitute(p + q, bindings) == ring_substitute(p, bindings) + ring_substitute(q, bindings)


@pytest.mark.parametrize("modulus", [2, 3])
def test_normalization_terminates_in_reduced_form(modulus):
    from skein4.app.services.poly import ring_normalize

    ring = RingSpec(
        f"quartic_mod{modulus}",
        ("x", "a"),
        invertible=frozenset({"a"}),
        relations=(PowerRelation.of("a", 4, {0: 1}),),
        modulus=modulus,
    )
    rng = random.Random(modulus)
    for _ in range(50):
        raw = {}
        for _ in range(6):
            key = (rng.randint(0, 6), rng.randint(-40, 40))
            raw[key] = raw.get(key, 0) + rng.randint(-50, 50)
        element = ring_normalize(raw, ring)
        for (x_exp, a_exp), coeff in element.items():
            assert 0 <= a_exp < 4
            assert coeff != 0 and abs(coeff) <= modulus // 2
        assert ring_normalize(dict(element.items()), ring) == element
