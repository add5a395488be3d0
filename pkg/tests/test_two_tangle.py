import pytest

from skein4.app.services.engine import characteristic_polynomial, close_2tangle, eval_2tangle, multiplication_table
from skein4.app.services.engine.evaluator import link_value
from skein4.app.services.engine.twist import (
    check_closed_form,
    eigen_checks,
    period_three_at_x_zero,
    twist_power,
)
from skein4.app.services.engine.two_tangle import I, S, SBAR, U, multiply_basis, rotate_vector, twist_vector
from skein4.app.services.engine.vectors import MemoTable, SkeinVector
from skein4.app.services.poly import parse_poly


# Twist operator


@pytest.mark.parametrize("n", [n for n in range(-12, 13) if n])
def test_closed_form_matches_matrix_power(n):
    assert check_closed_form(n)


def test_eigenvectors():
    results = eigen_checks()
    assert set(results) == {"tau:1", "tau:s^2", "tau:s^-2", "tau2:1", "tau2:s^4", "tau2:s^-4"}
    assert all(results.values())


def test_period_three_at_x_zero():
    assert period_three_at_x_zero()


def test_characteristic_polynomial_spec_iii(spec_iii):
    chi = characteristic_polynomial(spec_iii)
    expected = parse_poly("-lam^3 + (b^4 + 1)*lam^2 - (b^8 + b^4)*lam + b^8", chi.spec)
    assert chi == expected


def test_twist_power_inverts(generic):
    assert twist_power(generic, 0) == (generic.zero(), generic.one(), generic.zero())
    assert twist_power(generic, -1) == (generic.a_inv, generic.zero(), generic.zero())


def test_twist_vector_p1(p1):
    x = p1.ring.var("x")
    vector = twist_vector(3, p1)
    assert vector.coefficient(SBAR) == -x
    assert vector.coefficient(I) == 1 - x ** 2
    assert vector.coefficient(S) == x + x ** 2


# Basic 2-tangle algebra


def test_multiplication_table(spec_i):
    table = multiplication_table(spec_i)
    assert len(table) == 16
    t, a = spec_i.t, spec_i.a
    assert table[(I, S)] == SkeinVector.basis(2, spec_i.ring, S)
    assert table[(U, U)] == SkeinVector.basis(2, spec_i.ring, U, t)
    assert table[(S, SBAR)] == SkeinVector.basis(2, spec_i.ring, I)
    assert table[(S, U)] == SkeinVector.basis(2, spec_i.ring, U, spec_i.a_inv)
    assert table[(U, SBAR)] == SkeinVector.basis(2, spec_i.ring, U, a)


def test_square_of_crossing(spec_iii):
    square = multiply_basis(S, S, spec_iii)
    c_inv, c0, c1 = spec_iii.square_rule()
    assert square == SkeinVector(2, spec_iii.ring, {SBAR: c_inv, I: c0, S: c1})
    assert square == twist_vector(2, spec_iii)


def test_quarter_turn_is_an_involution(spec_i, parse):
    vector = eval_2tangle(parse("rat(3 2)"), spec_i)
    assert rotate_vector(rotate_vector(vector, 1), 1) == vector
    assert rotate_vector(SkeinVector.basis(2, spec_i.ring, S), 1) == SkeinVector.basis(2, spec_i.ring, SBAR)


def test_integer_tangle_is_rotated_twist(spec_i, parse):
    assert eval_2tangle(parse("int(0)"), spec_i) == SkeinVector.basis(2, spec_i.ring, U)
    assert eval_2tangle(parse("int(2)"), spec_i) == rotate_vector(twist_vector(2, spec_i), 1)
    assert eval_2tangle(parse("rot(1,braid2[1 1])"), spec_i) == eval_2tangle(parse("int(2)"), spec_i)


def test_circle_scales_by_t(spec_i, parse):
    assert eval_2tangle(parse("circle(braid2[1])"), spec_i) == SkeinVector.basis(2, spec_i.ring, S, spec_i.t)


def test_closure_values(spec_i):
    t, a = spec_i.t, spec_i.a
    ring = spec_i.ring
    numerator = {I: t, U: t ** 2, S: spec_i.a_inv * t, SBAR: a * t}
    denominator = {I: t ** 2, U: t, S: a * t, SBAR: spec_i.a_inv * t}
    for key in (I, U, S, SBAR):
        basis = SkeinVector.basis(2, ring, key)
        assert close_2tangle(basis, spec_i).value == numerator[key]
        assert close_2tangle(basis, spec_i, numerator=False).value == denominator[key]


@pytest.mark.parametrize("n", [n for n in range(-4, 7) if n])
def test_numerator_of_integer_tangle_is_torus_link(spec_i, parse, n):
    expected = link_value(parse(f"torus(2,{n})"), spec_i)
    assert link_value(parse(f"N(int({n}))"), spec_i) == expected
    letters = " ".join(["1" if n > 0 else "-1"] * abs(n))
    assert link_value(parse(f"close(braid2[{letters}])"), spec_i) == expected


def test_sum_with_zero_tangle(spec_iii, parse):
    # int(0) is the unit of tangle sum
    value = eval_2tangle(parse("rat(2 2)"), spec_iii)
    assert eval_2tangle(parse("sum(rat(2 2),int(0))"), spec_iii) == value
    assert eval_2tangle(parse("sum(int(0),rat(2 2))"), spec_iii) == value


# Vectors and memo tables


def test_link_vector_splits_by_components(spec_i):
    x, t = spec_i.ring.vars("x", "t")
    vector = SkeinVector.link(x * t + 3 * t ** 2)
    assert vector.keys() == [1, 2]
    assert vector.coefficient(2) == 3
    assert vector.value == x * t + 3 * t ** 2


def test_memo_table_computes_once():
    table = MemoTable("test")
    calls = []

    def compute():
        calls.append(1)
        return "value"

    assert table.get_or_compute("k", compute) == "value"
    assert table.get_or_compute("k", compute) == "value"
    assert len(calls) == 1
    assert table.misses == 1
    assert "k" in table


def test_twist_matrix(spec_iii):
    from skein4.app.services.engine import twist_matrix
    from skein4.app.services.engine.twist import mat_mul, mat_vec, twist_inverse_matrix

    zero, one = spec_iii.zero(), spec_iii.one()
    tau = twist_matrix(spec_iii)
    assert mat_vec(tau, (zero, one, zero)) == (zero, zero, spec_iii.a)
    identity = mat_mul(tau, twist_inverse_matrix(spec_iii))
    assert all(identity[i][j] == (one if i == j else zero) for i in range(3) for j in range(3))


def test_two_algebraic_closures(spec_i, parse):
    from skein4.app.errors import UnsupportedClassError
    from skein4.app.services.engine import eval_link_2algebraic

    assert eval_link_2algebraic(parse("circle(N(braid2[]))"), spec_i).value == spec_i.t ** 2
    assert eval_link_2algebraic(parse("torus(2,1)"), spec_i).value == spec_i.a * spec_i.t
    with pytest.raises(UnsupportedClassError):
        eval_link_2algebraic(parse("close(braid3[1 2])"), spec_i)
