"""Residue sums: exact path against both numeric oracles."""

from fractions import Fraction
from random import Random

import pytest

from residualtrace.algebra import MPoly, RatFunc
from residualtrace.errors import DomainError
from residualtrace.residues import (
    ContourSpec,
    RationalForm1D,
    contour_oracle,
    default_contour,
    oracle_report,
    pointwise_residues,
    residue_sum,
)

V = ("x", "y")
X = MPoly.variable(V, "x")
Y = MPoly.variable(V, "y")


def test_residue_sum_examples():
    # y / (y^2 - x): remainder of y is y, top coefficient 1
    assert residue_sum(RationalForm1D(Y, Y * Y - X)) == RatFunc.one(("x",))
    # y^2 / (y^2 - x): remainder x has no y^1 part
    assert residue_sum(RationalForm1D(Y * Y, Y * Y - X)).is_zero()


def test_residue_sum_nonmonic_denominator():
    # 1 / (2y - x): single pole at x/2 with residue 1/2
    form = RationalForm1D(MPoly.constant(V, 1), Y.scale(2) - X)
    assert form.den == Y.scale(2) - X
    assert residue_sum(form) == RatFunc.constant(("x",), Fraction(1, 2))


def test_residue_sum_no_fiber_poles_is_zero():
    form = RationalForm1D(Y, X + 1)
    assert residue_sum(form).is_zero()


def test_zero_denominator_rejected():
    with pytest.raises(DomainError):
        RationalForm1D(Y, MPoly.zero(V))


def test_form_reduces_common_factor():
    form = RationalForm1D(Y * (Y - X), (Y - X) * (Y + X))
    assert form.den.degree("y") == 1


def test_pointwise_residues_example():
    # (2y - 1) / (y^2 - y) has residue 1 at both 0 and 1, for any x
    form = RationalForm1D(Y.scale(2) - 1 + X - X, Y * Y - Y)
    pairs = pointwise_residues(form, [0.3])
    assert len(pairs) == 2
    poles = [p for p, _ in pairs]
    assert abs(poles[0] - 0) < 1e-9 and abs(poles[1] - 1) < 1e-9
    for _, res in pairs:
        assert abs(res - 1) < 1e-9


def test_pointwise_repeated_root_raises():
    # triple pole: computed roots split ~eps^(1/3), so |den'| ~ eps^(2/3)
    # falls below the 1e-9 * scale guard (a bare double pole splits ~eps^(1/2)
    # and slips past it; only residue_sum is trusted near such points)
    form = RationalForm1D(MPoly.constant(V, 1), (Y - 1) * (Y - 1) * (Y - 1))
    with pytest.raises(DomainError):
        pointwise_residues(form, [0.0])


def test_pointwise_no_poles_empty():
    form = RationalForm1D(Y, X * X + 1)
    assert pointwise_residues(form, [2.0]) == []


def test_contour_matches_exact():
    form = RationalForm1D(Y, Y * Y - X)
    exact = residue_sum(form)
    for xv in (0.7, -1.3, 2.2 + 0.4j):
        got = contour_oracle(form, [xv])
        want = exact.eval_numeric({"x": xv})
        assert abs(got - want) < 1e-10


def test_contour_rejects_pole_outside():
    form = RationalForm1D(MPoly.constant(V, 1), Y - X)
    with pytest.raises(DomainError):
        contour_oracle(form, [10.0], ContourSpec(radius=1.0))


def test_contour_spec_validation():
    with pytest.raises(DomainError):
        ContourSpec(radius=0.0)
    with pytest.raises(DomainError):
        ContourSpec(radius=1.0, points=4)


def test_default_contour_encloses_all_poles():
    form = RationalForm1D(MPoly.constant(V, 1), (Y - 3) * (Y + 5))
    spec = default_contour(form, [0.0])
    assert spec.radius > 5.0


def test_oracle_report_rows():
    form = RationalForm1D(Y, Y * Y - X)
    rows = oracle_report(form, [[0.5], [1.5]])
    assert len(rows) == 2
    for row in rows:
        assert row["contour_error"] < 1e-9
        assert row["pointwise_error"] < 1e-9


def test_oracle_agreement_random():
    """Exact residue sums match the quadrature oracle on random data."""
    rng = Random(5)
    for _ in range(15):
        d = rng.randint(1, 4)
        pieces = {d: MPoly.constant(V, 1)}
        for i in range(d):
            c = rng.randint(-3, 3)
            cx = rng.randint(-2, 2)
            if c or cx:
                pieces[i] = MPoly.constant(V, c) + X.scale(cx)
        den = MPoly.from_univariate(V, "y", pieces)
        num = Y ** rng.randint(0, d - 1) if d > 1 else MPoly.constant(V, 1)
        form = RationalForm1D(num, den)
        exact = residue_sum(form)
        xv = rng.uniform(-2, 2)
        try:
            got = contour_oracle(form, [xv])
        except DomainError:
            continue
        want = exact.eval_numeric({"x": complex(xv)})
        assert abs(got - want) < 1e-8
