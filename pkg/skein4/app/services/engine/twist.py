"""
Twist operator module for skein4

This module provides the half-twist operator tau on the span of
L(-1), L(0), L(1) (a twist region with -1, 0, 1 crossings), its powers and
characteristic polynomial, and the closed forms that hold for spec-i once x
is written as -s^2 - s^-2 - 1.
"""

import logging
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from skein4.app.errors import FormulaMismatchError
from skein4.app.services.coeff.specs import CoeffSpec, builtin_spec
from skein4.app.services.poly import PowerRelation, RingElement, RingSpec

# Configure logging
logger = logging.getLogger(__name__)

Triple = Tuple[RingElement, RingElement, RingElement]
Matrix = Tuple[Tuple[RingElement, ...], ...]

LAMBDA = "lam"

# Z[s^(+-1), a]/(a^4 - 1) with the marker t, where spec-i's closed forms live
S_RING = RingSpec(
    "spec-i-s",
    ("s", "a", "t"),
    invertible=frozenset({"s", "a"}),
    relations=(PowerRelation.of("a", 4, {0: 1}),),
)


def _columns_to_matrix(columns: Sequence[Sequence[RingElement]]) -> Matrix:
    return tuple(tuple(columns[j][i] for j in range(3)) for i in range(3))


def mat_vec(m: Matrix, v: Sequence[RingElement]) -> Triple:
    return tuple(sum((m[i][j] * v[j] for j in range(3)), m[i][0].spec.zero()) for i in range(3))


def mat_mul(m: Matrix, n: Matrix) -> Matrix:
    zero = m[0][0].spec.zero()
    return tuple(
        tuple(sum((m[i][k] * n[k][j] for k in range(3)), zero) for j in range(3))
        for i in range(3)
    )


@lru_cache(maxsize=None)
def twist_matrix(spec: CoeffSpec) -> Matrix:
    """
    Matrix of tau in the basis (L(-1), L(0), L(1)).

    Columns are tau(L(-1)) = a L(0), tau(L(0)) = a L(1) and
    tau(L(1)) = a L(2) = -a b3^-1 (b0 L(-1) + b1 L(0) + b2 L(1)).
    """
    zero, a = spec.zero(), spec.a
    m = -(a * spec.b3_inv)
    return _columns_to_matrix([
        (zero, a, zero),
        (zero, zero, a),
        (m * spec.b0, m * spec.b1, m * spec.b2),
    ])


@lru_cache(maxsize=None)
def twist_inverse_matrix(spec: CoeffSpec) -> Matrix:
    """Matrix of tau^-1; needs b0 to be a unit."""
    zero, ai = spec.zero(), spec.a_inv
    m = -(ai * spec.b0_inv)
    return _columns_to_matrix([
        (m * spec.b1, m * spec.b2, m * spec.b3),
        (ai, zero, zero),
        (zero, ai, zero),
    ])


_powers: Dict[Tuple[CoeffSpec, int], Triple] = {}


def twist_power(spec: CoeffSpec, n: int) -> Triple:
    """
    Coordinates of tau^n(L(0)) in the basis (L(-1), L(0), L(1)).

    Since tau^n(L(0)) = a^n L(n), a twist region with n crossings is
    a^-n times this triple.
    """
    key = (spec, n)
    if key in _powers:
        return _powers[key]
    if n == 0:
        value: Triple = (spec.zero(), spec.one(), spec.zero())
    elif n > 0:
        value = mat_vec(twist_matrix(spec), twist_power(spec, n - 1))
    else:
        value = mat_vec(twist_inverse_matrix(spec), twist_power(spec, n + 1))
    _powers[key] = value
    return value


def characteristic_polynomial(spec: CoeffSpec) -> RingElement:
    """det(A_tau - lam * Id) in the spec ring with ``lam`` adjoined."""
    ring = spec.ring.extend(f"{spec.ring.name}[{LAMBDA}]", [LAMBDA])
    lam = ring.var(LAMBDA)
    a = [[entry.coerce(ring) for entry in row] for row in twist_matrix(spec)]
    for i in range(3):
        a[i][i] = a[i][i] - lam
    return (
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    )


# Closed forms for spec-i


def to_s_ring(element: RingElement) -> RingElement:
    """Rewrite a spec-i element with x := -s^2 - s^-2 - 1."""
    s = S_RING.var("s")
    bindings = {"x": -(s ** 2) - s ** -2 - 1}
    return element.substitute(bindings, target=S_RING, keep_others=True)


def _bracket(k: int) -> RingElement:
    s = S_RING.var("s")
    return s ** k - s ** -k


def closed_form_denominator() -> RingElement:
    s = S_RING.var("s")
    return (s + s ** -1) * _bracket(1) ** 2


def closed_form_numerator(n: int) -> Triple:
    """Numerators of tau^n(L(0)) over (s + s^-1)(s - s^-1)^2."""
    s, a = S_RING.vars("s", "a")
    return (
        _bracket(n) * _bracket(n - 1) * a ** -1,
        -(s + s ** -1) * _bracket(n - 1) * _bracket(n + 1),
        _bracket(n + 1) * _bracket(n) * a,
    )


def closed_form_residual(n: int) -> Triple:
    """Denominator times the matrix power minus the closed-form numerators; zero when they agree."""
    spec = builtin_spec("spec-i")
    denominator = closed_form_denominator()
    power = twist_power(spec, n)
    numerator = closed_form_numerator(n)
    return tuple(denominator * to_s_ring(power[i]) - numerator[i] for i in range(3))


def check_closed_form(n: int) -> bool:
    return all(r.is_zero() for r in closed_form_residual(n))


def require_closed_form(n: int) -> None:
    if not check_closed_form(n):
        raise FormulaMismatchError(f"Closed form for tau^{n}(L0) disagrees with the matrix power")


def eigenvectors() -> Dict[str, Tuple[RingElement, Triple]]:
    """Eigenvalue and eigenvector of tau for spec-i, keyed by a label."""
    s, a = S_RING.vars("s", "a")
    si = s ** -1
    return {
        "1": (S_RING.one(), (a ** -1, -(s ** 2 + s ** -2), a)),
        "s^2": (s ** 2, (a ** -1 * si, -(s + si), a * s)),
        "s^-2": (s ** -2, (a ** -1 * s, -(s + si), a * si)),
    }


def eigen_checks() -> Dict[str, bool]:
    """
    Check tau E = lam E and tau^2 E = lam^2 E for the three eigenvectors.

    Returns:
        Dict[str, bool]: ``tau:<lam>`` and ``tau2:<lam^2>`` entries
    """
    spec = builtin_spec("spec-i")
    matrix = tuple(tuple(to_s_ring(e) for e in row) for row in twist_matrix(spec))
    square = mat_mul(matrix, matrix)
    squared_labels = {"1": "1", "s^2": "s^4", "s^-2": "s^-4"}
    results = {}
    for label, (lam, vector) in eigenvectors().items():
        image = mat_vec(matrix, vector)
        results[f"tau:{label}"] = all((image[i] - lam * vector[i]).is_zero() for i in range(3))
        image2 = mat_vec(square, vector)
        results[f"tau2:{squared_labels[label]}"] = all(
            (image2[i] - lam ** 2 * vector[i]).is_zero() for i in range(3)
        )
    return results


def period_three_at_x_zero() -> bool:
    """With x = 0 in spec-i, tau^3(L(0)) = L(0)."""
    spec = builtin_spec("spec-i")
    target = RingSpec("spec-i-x0", ("a", "t"), invertible=frozenset({"a"}), relations=spec.ring.relations)
    bindings = {"x": target.zero()}
    power = [c.substitute(bindings, target=target, keep_others=True) for c in twist_power(spec, 3)]
    return power[0].is_zero() and power[1].is_one() and power[2].is_zero()


def torus_closed_form(n: int) -> RingElement:
    """(s + s^-1)(s - s^-1)^2 * a^n * T(2,n) written out in S_RING."""
    s, a, t = S_RING.vars("s", "a", "t")
    return (
        _bracket(n) * (a ** -2 * _bracket(n - 1) + a ** 2 * _bracket(n + 1)) * t
        - (s + s ** -1) * _bracket(n - 1) * _bracket(n + 1) * t ** 2
    )
