import pytest

from skein4.app.errors import NoScalarRelationError, RingError, Skein4Error
from skein4.app.services.coeff import (
    CoeffSpec,
    bracket_check,
    builtin_spec,
    check_conditions,
    disjoint_union_factor,
    h_annihilates,
    h_invariant,
    spec_names,
    trivial_link_resolution,
    trivial_link_value,
)
from skein4.app.services.poly import RingSpec, parse_poly
from skein4.app.services.tangles import BraidWord


def test_builtin_names():
    assert set(spec_names()) >= {"spec-i", "spec-ii", "spec-iii", "kauffman", "generic", "p1"}
    assert builtin_spec("SPEC_I") is builtin_spec("spec-i")
    with pytest.raises(Skein4Error):
        builtin_spec("spec-iv")


@pytest.mark.parametrize("name", ["spec-i", "spec-ii", "spec-iii", "p1"])
def test_conditions_hold(name):
    assert all(check_conditions(builtin_spec(name)).values())


def test_kauffman_conditions():
    results = check_conditions(builtin_spec("kauffman"))
    assert results == {"C4.1": True, "C4.2a": False, "C4.2b": False, "C4.3": False}


def test_generic_conditions_all_fail(generic):
    assert not any(check_conditions(generic).values())


def test_spec_i_coefficients(spec_i):
    x, a = spec_i.ring.vars("x", "a")
    assert spec_i.b == (spec_i.one(), a * x, -(a ** 2) * x, -(a ** 3))
    assert spec_i.a_inv == a ** 3


def test_spec_iii_framing(spec_iii):
    b = spec_iii.ring.var("b")
    assert spec_iii.a == -(b ** 3)
    assert spec_iii.b1 == b * (b ** 2 + b ** -2)


def test_square_rule_from_relation(spec_iii):
    # s^2 = -(b0 s^-1 + b1 + b2 s) / b3
    c_inv, c0, c1 = spec_iii.square_rule()
    b = spec_iii.ring.var("b")
    assert c_inv == -(b ** -1)
    assert c0 == -(b ** 2 + b ** -2)
    assert c1 == -(b + b ** -3)


def test_non_unit_framing_rejected():
    ring = RingSpec("bad", ("x", "t"))
    x = ring.var("x")
    with pytest.raises(RingError):
        CoeffSpec("bad", ring, x, (ring.one(), x, x, ring.one()))


def test_no_scalar_relation_when_conditions_hold(spec_i):
    with pytest.raises(NoScalarRelationError):
        disjoint_union_factor(spec_i)


def test_kauffman_disjoint_union_factor(kauffman):
    mu = disjoint_union_factor(kauffman)
    assert mu == parse_poly("a*z^-1 + a^-1*z^-1 - 1", kauffman.ring)


def test_trivial_link_resolution(kauffman):
    mu = disjoint_union_factor(kauffman)
    t = kauffman.t
    assert trivial_link_value(kauffman, 1) == t
    assert trivial_link_value(kauffman, 3) == mu ** 2 * t
    value = 2 * t ** 3 - kauffman.ring.var("z") * t
    assert trivial_link_resolution(value, kauffman) == 2 * mu ** 2 * t - kauffman.ring.var("z") * t
    with pytest.raises(ValueError):
        trivial_link_value(kauffman, 0)


def test_h_invariant(spec_ii):
    a, t = spec_ii.ring.vars("a", "t")
    assert h_invariant(BraidWord(2, (1, 1, 1))) == a ** 3 * t
    assert h_invariant(BraidWord(2, (1, 1))) == a ** 2 * t ** 2
    assert h_invariant(BraidWord(3, ())) == t ** 3
    assert h_invariant(BraidWord(3, (1, -2, 1, -2))) == t


@pytest.mark.parametrize("letters", [(1,), (1, -2, 1, -2), (2, 2, -1, 2), (-1, -1, 2)])
def test_h_annihilates_spec_ii_not_spec_i(spec_i, spec_ii, letters):
    word = BraidWord(3, letters)
    for site in range(len(letters)):
        assert h_annihilates(spec_ii, word, site)
        assert not h_annihilates(spec_i, word, site)


def test_h_needs_a_and_marker(spec_iii):
    with pytest.raises(RingError):
        h_invariant(BraidWord(2, (1,)), spec_iii)


def test_bracket_satisfies_spec_iii_relation():
    assert bracket_check()
