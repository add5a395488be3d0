"""
End-to-end checks on the larger catalog links.

These evaluate 9_42 and run the full suites, so they are marked slow.
"""

import pytest

from skein4.app.services.checks import run_suite
from skein4.app.services.coeff import builtin_spec
from skein4.app.services.engine import invariant, link_value
from skein4.app.services.poly import parse_poly
from skein4.app.services.tangles import mirror, parse_tangle
from skein4.app.services.tricolor import coloring_space

pytestmark = pytest.mark.slow

P2_9_42 = (
    "(3*b^11 + 7*b^7 + 9*b^3 + 8*b^-1 + 6*b^-5 + 4*b^-9 + 3*b^-13 + b^-17)*t"
    " - (b^13 + 6*b^9 + 14*b^5 + 20*b + 19*b^-3 + 12*b^-7 + 5*b^-11 + b^-15)*t^2"
    " + (b^11 + 4*b^7 + 8*b^3 + 10*b^-1 + 8*b^-5 + 4*b^-9 + b^-13)*t^3"
)

# The displayed polynomial is the blackboard-framed value of the catalog
# diagram, whose writhe and framing are both 1.
RAW_OFFSET = 0
NINE_42_FRAMING = 1


def framing_offset(value, expected, spec, bound=30):
    """The k with value * (-b^3)^k == expected, or None."""
    factor = spec.a
    for k in range(-bound, bound + 1):
        if value * factor ** k == expected:
            return k
    return None


@pytest.fixture(scope="module")
def nine_42():
    return parse_tangle("@9_42")


def test_p2_of_9_42(nine_42):
    spec = builtin_spec("spec-iii")
    expected = parse_poly(P2_9_42, spec.ring)
    result = invariant("p2", nine_42)
    assert result.components == 1
    assert (result.writhe, result.framing) == (NINE_42_FRAMING, NINE_42_FRAMING)
    assert framing_offset(result.value, expected, spec) == RAW_OFFSET
    assert framing_offset(result.normalized, expected, spec) == RAW_OFFSET + NINE_42_FRAMING


def test_9_42_is_chiral_under_p2(nine_42):
    spec = builtin_spec("spec-iii")
    value = link_value(nine_42, spec).value
    mirrored = link_value(mirror(nine_42), spec).value
    swapped = value.substitute({"b": spec.ring.var("b", -1)}, keep_others=True)
    assert mirrored == swapped
    assert invariant("p2", nine_42).normalized != invariant("p2", mirror(nine_42)).normalized


def test_9_42_colorings(nine_42):
    assert coloring_space(nine_42).rank == 1


@pytest.mark.parametrize("suite", ["conditions", "basis-counts", "burau-battery"])
def test_suites_pass(suite):
    report = run_suite(suite)
    assert report.passed, [item.to_line() for item in report.failures()]


def test_invariance_suite_full():
    report = run_suite("invariance-suite")
    assert report.passed, [item.to_line() for item in report.failures()]
