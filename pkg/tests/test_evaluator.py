import pytest

from skein4.app.errors import ArityError, BudgetExceededError, Skein4Error, UnsupportedClassError
from skein4.app.services.engine import evaluate, family_value, invariant, kauffman_oracle, link_value
from skein4.app.services.engine.family_values import expected_anchors, twist_anchor
from skein4.app.services.engine.kauffman_oracle import compare_with_engine
from skein4.app.services.engine.table_cache import VectorStore, clear_tables, decode_vector, encode_vector
from skein4.app.services.engine.vectors import SkeinVector
from skein4.app.services.evaluation import burau_text, evaluate_text, parse_braid, tricolor_text
from skein4.app.services.poly import format_poly
from skein4.app.services.tangles import mirror


# Hand-computed link values


@pytest.mark.parametrize(
    "text, spec_name, expected",
    [
        ("N(braid2[])", "spec-i", "1*t"),
        ("N(int(0))", "spec-i", "1*t^2"),
        ("D(braid2[])", "spec-i", "1*t^2"),
        ("close(braid3[])", "spec-i", "1*t^3"),
        ("circle(N(int(0)))", "spec-iii", "1*t^3"),
        ("torus(2,1)", "spec-i", "1*a*t"),
        ("torus(2,2)", "spec-i", "1*t - 1*x*t + 1*x*a^2*t^2"),
        ("torus(2,2)", "p1", "1*t - 1*x*t + 1*x*t^2"),
        ("torus(2,3)", "p1", "1*t^2 + 1*x^2*t - 1*x^2*t^2"),
        ("close(braid5[1 2])", "spec-i", "1*a^2*t^3"),
    ],
)
def test_link_values(parse, text, spec_name, expected):
    from skein4.app.services.coeff import builtin_spec

    assert format_poly(link_value(parse(text), builtin_spec(spec_name)).value) == expected


def test_kink_values(spec_iii, parse):
    a = spec_iii.a
    assert link_value(parse("N(braid2[1])"), spec_iii).value == spec_iii.a_inv * spec_iii.t
    assert link_value(parse("D(braid2[1])"), spec_iii).value == a * spec_iii.t


def test_evaluate_dispatches_on_arity(spec_i, parse):
    assert evaluate(parse("N(braid2[])"), spec_i).arity == 0
    assert evaluate(parse("rat(2 2)"), spec_i).arity == 2
    assert evaluate(parse("braid3[1]"), spec_i).arity == 3
    with pytest.raises(UnsupportedClassError):
        evaluate(parse("braid4[1]"), spec_i)


def test_unsplittable_four_braid(spec_i, parse):
    with pytest.raises(UnsupportedClassError):
        link_value(parse("close(braid4[1 2 3])"), spec_i)


def test_mirror_inverts_b(spec_iii, parse):
    link = parse("torus(2,3)")
    value = link_value(link, spec_iii).value
    swapped = value.substitute({"b": spec_iii.ring.var("b", -1)}, keep_others=True)
    assert link_value(mirror(link), spec_iii).value == swapped
    assert link_value(parse("mirror(torus(2,3))"), spec_iii).value == swapped


def test_p1_at_x_zero_and_minus_two(p1, small_links, parse):
    ring = p1.ring
    for text in small_links:
        value = link_value(parse(text), p1).value
        assert len(value.substitute({"x": ring.zero()}, keep_others=True)) == 1
        assert value.substitute({"x": ring.constant(-2), "t": ring.one()}).is_one()


# Families


@pytest.mark.parametrize("n", range(1, 9))
def test_torus_family_consistency(spec_i, parse, n):
    direct = family_value("torus", (2, n), spec_i)
    assert direct == link_value(parse(f"N(int({n}))"), spec_i)
    assert direct == link_value(parse(f"close(braid2[{' '.join(['1'] * n)}])"), spec_i)


def test_twist_anchors(spec_iii):
    expected = expected_anchors(spec_iii)
    for m in (1, 0, -1):
        assert twist_anchor(m, spec_iii) == expected[m]


@pytest.mark.parametrize("n", [1, 2, 3, -2])
def test_twist_family_matches_expansion(spec_iii, parse, n):
    assert family_value("twist", (n,), spec_iii) == link_value(parse(f"twist({n})"), spec_iii)


def test_twist_one_is_trefoil(spec_i):
    assert family_value("twist", (1,), spec_i) == family_value("torus", (2, 3), spec_i)


@pytest.mark.parametrize("columns", [(3, 3, 3), (2, -3, -3), (1, 1)])
def test_pretzel_family_matches_expansion(spec_i, parse, columns):
    text = "pretzel(" + ",".join(str(c) for c in columns) + ")"
    assert family_value("pretzel", columns, spec_i) == link_value(parse(text), spec_i)


# Invariants


def test_invariant_record(parse):
    value = invariant("p2", parse("torus(2,1)"))
    assert value.spec.name == "spec-iii"
    assert value.framing == 1
    assert value.normalized == value.spec.t
    hopf = invariant("P1", parse("torus(2,2)"))
    assert hopf.components == 2
    assert format_poly(hopf.value) == "1*t - 1*x*t + 1*x*t^2"


def test_unknown_invariant(parse):
    with pytest.raises(Skein4Error):
        invariant("p3", parse("torus(2,3)"))
    with pytest.raises(ArityError):
        invariant("p1", parse("rat(2 2)"))


def test_p2_distinguishes_trefoil_from_mirror(parse):
    right = invariant("p2", parse("torus(2,3)")).normalized
    left = invariant("p2", parse("torus(2,-3)")).normalized
    assert right != left


# Kauffman oracle


@pytest.mark.parametrize("text", ["N(braid2[])", "N(braid2[1])", "torus(2,2)", "torus(2,3)", "N(rat(2 2))"])
def test_oracle_agrees_with_engine(parse, text):
    oracle, engine = compare_with_engine(parse(text))
    assert oracle == engine


def test_oracle_unknot(kauffman, parse):
    assert kauffman_oracle(parse("N(braid2[])")) == kauffman.t
    assert kauffman_oracle(parse("N(int(0))")) == kauffman.ring.var("z", -1) * (kauffman.a + kauffman.a_inv) * kauffman.t - kauffman.t


def test_oracle_budget(parse):
    with pytest.raises(BudgetExceededError):
        kauffman_oracle(parse("torus(2,5)"), bound=3)


# Persistent tables


def test_vector_text_round_trip(spec_iii):
    b, t = spec_iii.ring.vars("b", "t")
    vector = SkeinVector.link(3 * b ** 11 * t - b ** -2 * t ** 2)
    assert decode_vector(encode_vector(vector), 0, spec_iii, int) == vector


def test_vector_store_persists(spec_i):
    store = VectorStore("test_store", spec_i, 0, lambda key: (str(key), ""), int)
    value = SkeinVector.link(spec_i.a * spec_i.t)
    store.save(7, value)
    assert store.fetch(7) == value
    assert store.fetch(8) is None
    assert clear_tables(spec_i.name) >= 1


# Evaluation service


def test_evaluate_text():
    record = evaluate_text("torus(2,1)", "spec-i")
    assert record.value == "1*a*t"
    assert record.normalized_value == "1*t"
    assert (record.writhe, record.framing, record.components) == (1, 1, 1)
    assert record.timing_ms is not None


def test_evaluate_text_invariant():
    record = evaluate_text("torus(2,3)", invariant_name="p1")
    assert record.spec == "p1"
    assert record.value == "1*t^2 + 1*x^2*t - 1*x^2*t^2"


def test_evaluate_text_needs_link():
    with pytest.raises(ArityError):
        evaluate_text("rat(2 2)")


def test_parse_braid():
    assert parse_braid("braid3[1 -2]").letters == (1, -2)
    assert parse_braid("close(braid2[1 1])").strands == 2
    with pytest.raises(Skein4Error):
        parse_braid("N(int(2))")


def test_burau_and_tricolor_text():
    record = burau_text("braid3[1 2]", "t^2-t+1")
    assert record.ideal == "(t^2-t+1)"
    assert len(record.rows) == 3
    assert burau_text("braid2[1]").ideal is None
    assert tricolor_text("torus(2,3)").rank == 2
