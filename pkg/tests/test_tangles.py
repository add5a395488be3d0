import pytest

from skein4.app.errors import (
    ArityError,
    BudgetExceededError,
    InvalidMoveError,
    Skein4Error,
    TangleSyntaxError,
    UnsupportedClassError,
)
from skein4.app.services.tangles import (
    Braid,
    BraidClosure,
    BraidWord,
    IntegerTangle,
    Mirror,
    MoveSite,
    Rational,
    Rotate,
    TangleSum,
    apply_move,
    braid_normalize,
    build_diagram,
    closure_stats,
    cyclic_reduce,
    format_expr,
    free_reduce,
    make_family,
    mirror,
    mutate,
    rotate,
    sites,
)
from skein4.app.services.tangles.braid import braid_search, parse_letters
from skein4.app.services.tangles.expr import crossing_count
from skein4.app.services.tangles.families import expand_rational
from skein4.app.services.tangles.transforms import expand_nodes, two_tangle_paths


# Braid words


def test_free_and_cyclic_reduction():
    assert free_reduce((1, 2, -2, -1, 1)) == (1,)
    assert cyclic_reduce((-1, 2, 1)) == (2,)
    assert cyclic_reduce((1, -1)) == ()


def test_braid_word_validation():
    with pytest.raises(Skein4Error):
        BraidWord(3, (3,))
    with pytest.raises(Skein4Error):
        BraidWord(3, (0,))
    assert str(BraidWord(3, (1, -2))) == "braid3[1 -2]"


def test_permutation_and_components():
    assert BraidWord(2, (1, 1)).closure_components() == 2
    assert BraidWord(2, (1, 1, 1)).closure_components() == 1
    assert BraidWord(3, ()).closure_components() == 3
    assert BraidWord(3, (1, -2, 1, -2)).closure_components() == 1
    assert BraidWord(3, (1, 2)).permutation() == (2, 0, 1)


def test_normalize_uses_braid_relations():
    assert braid_normalize(BraidWord(3, (2, 1, 2))).letters == (1, 2, 1)
    assert braid_normalize(BraidWord(3, (1, -1, 2))).letters == (2,)
    assert braid_normalize(BraidWord(4, (3, 1))).letters == (1, 3)


def test_cyclic_normalize():
    word = BraidWord(3, (1, -2, 1, 2))
    assert braid_normalize(word, cyclic=True).letters == (1, 2)


@pytest.mark.parametrize("letters", [(1, 2, 1, -2, -1), (2, 1, 2, 1), (-1, 2, 2, -1, 1)])
def test_normalize_keeps_permutation_and_writhe(letters):
    word = BraidWord(3, letters)
    normal = braid_normalize(word)
    assert normal.permutation() == word.permutation()
    assert normal.writhe == word.writhe
    assert len(normal) <= len(word)


def test_search_budget():
    with pytest.raises(BudgetExceededError) as info:
        braid_search((1, 2, 1), 3, max_length=2)
    assert info.value.stuck == "braid3[1 2 1]"


def test_parse_letters():
    assert parse_letters("1 -2, 1") == (1, -2, 1)


# Parser and formatter


@pytest.mark.parametrize(
    "text",
    [
        "N(sum(rat(2 2),int(-1)))",
        "close(braid3[1 -2 1 -2])",
        "close(comp(braid3[1],U(2,3)))",
        "D(mz(rat(3 1 2)))",
        "N(mirror(sum(int(2),rot(1,braid2[1 1]))))",
        "circle(N(int(0)))",
        "pretzel(3,3,3)",
    ],
)
def test_format_reproduces_input(parse, text):
    assert format_expr(parse(text)) == text


def test_syntax_error_positions(parse):
    with pytest.raises(TangleSyntaxError) as info:
        parse("N(int(2)")
    assert info.value.position == 8
    with pytest.raises(TangleSyntaxError) as info:
        parse("N(int(x))")
    assert info.value.position == 6
    with pytest.raises(TangleSyntaxError):
        parse("N(int(2))) ")
    with pytest.raises(TangleSyntaxError):
        parse("knot(3)")
    with pytest.raises(TangleSyntaxError):
        parse("N(int(2)) $")


def test_reference_without_catalog(parse):
    with pytest.raises(TangleSyntaxError):
        parse("@trefoil")


def test_arity_errors(parse):
    with pytest.raises(ArityError) as info:
        parse("N(braid3[1])")
    assert "braid3[1]" in str(info.value)
    with pytest.raises(ArityError):
        parse("comp(braid2[1],braid3[1])")
    with pytest.raises(ArityError):
        parse("sum(int(1),close(braid2[1]))")
    with pytest.raises(ArityError):
        parse("close(N(int(1)))")


def test_unsupported_families(parse):
    with pytest.raises(UnsupportedClassError):
        parse("torus(3,4)")


def test_arity(parse):
    assert parse("braid3[1 2]").arity == 3
    assert parse("rat(2 2)").arity == 2
    assert parse("N(rat(2 2))").arity == 0
    assert parse("close(braid3[1 2])") == BraidClosure(BraidWord(3, (1, 2)))


# Families and symmetries


def test_rational_expansion():
    assert expand_rational((2, 2)) == TangleSum(Rotate(1, Mirror(IntegerTangle(2))), IntegerTangle(2))
    assert make_family("rational", (3,)) == IntegerTangle(3)


def test_crossing_count(parse):
    assert crossing_count(parse("N(rat(2 1 1 2))")) == 6
    assert crossing_count(parse("twist(3)")) == 5
    assert crossing_count(parse("pretzel(3,-3,3)")) == 9
    assert crossing_count(parse("close(braid3[1 -2 1 -2])")) == 4


def test_mirror(parse):
    assert mirror(parse("rat(2 -3)")) == Rational((-2, 3))
    assert mirror(parse("torus(2,5)")) == parse("torus(2,-5)")
    expr = parse("N(sum(rat(2 2),braid2[1 1]))")
    assert mirror(mirror(expr)) == expr
    assert expand_nodes(parse("mirror(braid2[1 -1 1])")) == Braid(BraidWord(2, (-1, 1, -1)))


def test_mutation(parse):
    left, right = parse("rat(2 2)"), parse("braid2[1 -1 1 1]")
    assert mutate(TangleSum(left, right), "z") == TangleSum(mutate(right, "z"), mutate(left, "z"))
    assert mutate(TangleSum(left, right), "y") == TangleSum(mutate(left, "y"), mutate(right, "y"))
    assert mutate(right, "x") == right
    assert mutate(right, "y").word.letters == (1, 1, -1, 1)
    with pytest.raises(ArityError):
        mutate(parse("N(int(1))"), "z")


@pytest.mark.parametrize("axis", ["x", "y", "z"])
def test_mutation_is_an_involution(parse, axis):
    for text in (
        "sum(rat(2 -1),comp(braid2[1 -1 1],int(3)))",
        "comp(rot(1,braid2[1 1]),mirror(rat(3 2)))",
        "sum(my(comp(int(2),braid2[-1])),rot(-3,sum(int(1),U(1,2))))",
    ):
        expr = parse(text)
        assert mutate(mutate(expr, axis), axis) == expr


def test_rotate(parse):
    assert rotate(parse("int(3)"), 2) == IntegerTangle(3)
    assert rotate(parse("braid2[1]"), 4) == parse("braid2[1]")
    assert rotate(Rotate(1, parse("braid3[1]")), 1) == Rotate(2, parse("braid3[1]"))
    with pytest.raises(ArityError):
        rotate(parse("N(int(1))"), 1)


def test_two_tangle_paths(parse):
    expr = parse("N(sum(rat(2 2),int(1)))")
    assert two_tangle_paths(expr) == [(0,), (0, 0), (0, 1)]


# Diagrams and closure statistics


@pytest.mark.parametrize(
    "text, writhe, components",
    [
        ("N(braid2[])", 0, 1),
        ("N(int(0))", 0, 2),
        ("D(braid2[])", 0, 2),
        ("torus(2,3)", 3, 1),
        ("torus(2,-3)", -3, 1),
        ("close(braid2[1 1 1])", 3, 1),
        ("close(braid3[1 -2 1 -2])", 0, 1),
        ("close(braid3[])", 0, 3),
        ("N(rat(2 2))", 0, 1),
    ],
)
def test_closure_stats(parse, text, writhe, components):
    stats = closure_stats(parse(text))
    assert stats.writhe == writhe
    assert stats.components == components


def test_mirror_negates_writhe(parse, small_links):
    for text in small_links:
        link = parse(text)
        stats, mirrored = closure_stats(link), closure_stats(mirror(link))
        assert mirrored.components == stats.components
        assert mirrored.writhe == -stats.writhe
        assert mirrored.framing == -stats.framing


def test_knot_framing_equals_writhe(parse):
    for text in ("torus(2,5)", "N(rat(3 2))", "close(braid3[1 1 2 -1 2])"):
        stats = closure_stats(parse(text))
        if stats.components == 1:
            assert stats.framing == stats.writhe


def test_hopf_framing_is_zero(parse):
    stats = closure_stats(parse("torus(2,2)"))
    assert stats.components == 2
    assert abs(stats.writhe) == 2
    assert stats.framing == 0


def test_diagram_edges_occur_twice(parse):
    diagram = build_diagram(parse("sum(rat(3 2),braid2[1 -1 1])"))
    labels = list(diagram.boundary) + [e for c in diagram.crossings for e in c]
    assert all(labels.count(e) == 2 for e in set(labels))
    assert len(diagram.crossings) == 8
    assert len(diagram.boundary) == 4


def test_closure_stats_needs_link(parse):
    with pytest.raises(UnsupportedClassError):
        closure_stats(parse("rat(2 2)"))


# Moves


def test_braid_move():
    word = BraidWord(3, (1,))
    moved = apply_move(word, MoveSite(position=1, generator=2), -3)
    assert moved.letters == (1, -2, -2, -2)
    with pytest.raises(InvalidMoveError):
        apply_move(word, MoveSite(position=5, generator=1), 3)


def test_expression_moves(parse):
    assert apply_move(parse("N(int(2))"), MoveSite(path=(0,)), 3) == parse("N(int(5))")
    assert apply_move(parse("N(rat(2 2))"), MoveSite(path=(0,), term=0), -3) == parse("N(rat(-1 2))")
    assert apply_move(parse("torus(2,3)"), MoveSite(), 2) == parse("torus(2,5)")
    with pytest.raises(InvalidMoveError):
        apply_move(parse("close(U(1,3))"), MoveSite(path=(0,)), 3)


def test_sites(parse):
    found = sites(parse("N(rat(2 3))"))
    assert [(s.path, s.term, s.handedness) for s in found] == [((0,), 0, -1), ((0,), 1, 1)]
    assert len(sites(parse("close(braid3[1 2])"))) == 3 * 2
    assert all(s.handedness == -1 for s in sites(parse("N(mirror(int(2)))")))


def test_transform_dispatch(parse):
    from skein4.app.services.tangles.transforms import transform

    tangle = parse("rat(3 2)")
    assert transform(tangle, "mirror") == mirror(tangle)
    assert transform(tangle, "mutate", "x") == mutate(tangle, "x")
    assert transform(tangle, "rotate", steps=1) == rotate(tangle, 1)
    with pytest.raises(Skein4Error):
        transform(tangle, "reflect")
