import numpy as np
import pytest

from skein4.app.services.tangles import BraidWord
from skein4.app.services.tricolor import boundary_image, coloring_record, coloring_space, threemove_invariance_check
from skein4.app.services.tricolor import gf3
from skein4.app.services.tricolor.coloring import brute_force_rank, coloring_invariant


def test_rref_and_rank():
    matrix = gf3.as_matrix([[1, 2, 0], [2, 1, 0], [0, 1, 1]], 3)
    reduced, pivots = gf3.rref(matrix)
    assert pivots == [0, 1]
    assert gf3.rank(matrix) == 2
    assert reduced.tolist() == [[1, 0, 1], [0, 1, 1]]


def test_nullspace_solves_system():
    matrix = gf3.as_matrix([[2, 2, 1, 0], [0, 1, 2, 1]], 4)
    basis = gf3.nullspace(matrix)
    assert basis.shape == (2, 4)
    assert not ((matrix @ basis.T) % gf3.P).any()


def test_empty_matrix():
    matrix = gf3.as_matrix([], 3)
    assert gf3.rank(matrix) == 0
    assert gf3.nullspace(matrix).shape == (3, 3)


@pytest.mark.parametrize(
    "text, rank",
    [
        ("N(braid2[])", 1),
        ("N(int(0))", 2),
        ("torus(2,3)", 2),
        ("torus(2,-3)", 2),
        ("torus(2,2)", 1),
        ("N(rat(2 2))", 1),
        ("pretzel(3,3,3)", 3),
        ("close(braid3[1 -2 1 -2 1 -2])", 1),
    ],
)
def test_link_ranks(parse, text, rank):
    space = coloring_space(parse(text))
    assert space.rank == rank
    assert boundary_image(space) == ()


def test_constant_coloring_always_solves(parse):
    space = coloring_space(parse("N(rat(3 2))"))
    assert space.satisfies([1] * space.ambient)
    assert all(space.satisfies(v) for v in space.basis)


def test_identity_tangle_boundary_image(parse):
    space = coloring_space(parse("braid2[]"))
    assert space.rank == 2
    assert boundary_image(space) == ((1, 1, 0, 0), (0, 0, 1, 1))


def test_braid_word_target():
    assert coloring_space(BraidWord(3, (1, 1, 1))).rank == coloring_space(BraidWord(3, ())).rank


def test_elimination_matches_enumeration(parse, small_links):
    for text in small_links:
        space = coloring_space(parse(text))
        if space.ambient <= 7:
            assert brute_force_rank(space) == space.rank


def test_three_move_keeps_invariant(parse):
    before = coloring_invariant(parse("rat(2 1)"))
    assert coloring_invariant(parse("rat(5 1)")) == before
    assert coloring_invariant(parse("rat(-1 1)")) == before


def test_random_three_moves():
    report = threemove_invariance_check(trials=60, seed=3)
    assert report.passed
    assert report.items[0].name == "3-move invariance x60"


def test_three_moves_on_a_link(parse):
    assert threemove_invariance_check(parse("N(rat(2 2))"), trials=10, seed=1).passed


def test_coloring_record(parse):
    record = coloring_record(parse("torus(2,3)"))
    assert record.input == "torus(2,3)"
    assert record.rank == 2
    assert record.arcs == 3
    assert record.boundary_basis == []
    assert "rank=2" in record.to_line()


def test_vector_types():
    space = coloring_space(BraidWord(2, (1,)))
    assert all(isinstance(x, int) for v in space.basis for x in v)
    assert isinstance(gf3.as_matrix([[1]], 1), np.ndarray)
