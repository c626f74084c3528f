"""Degree detection, trace inversion, and rationality of series samples."""

from fractions import Fraction
from random import Random

import pytest

from residualtrace.algebra import MPoly, RatFunc
from residualtrace.currents import ZeroCurrent, validate
from residualtrace.errors import ContinuationError, DegreeDetectionError, DomainError
from residualtrace.reconstruct import (
    SeriesSample,
    continue_current,
    detect_degree,
    detect_rational,
    reconstruct,
    sample_series,
)
from residualtrace.sampling import random_current
from residualtrace.traces import TraceSequence, traces

V = ("x", "y")
X = MPoly.variable(V, "x")
Y = MPoly.variable(V, "y")
B = ("x",)
XB = MPoly.variable(B, "x")
XR = RatFunc.variable(B, "x")


def seq(*values):
    return TraceSequence(entries=tuple(
        v if isinstance(v, RatFunc) else RatFunc.constant(B, v) for v in values))


def test_detect_degree_running_example():
    t = TraceSequence(entries=(
        RatFunc.zero(B), RatFunc.one(B), RatFunc.zero(B), XR,
        RatFunc.zero(B), XR * XR))
    assert detect_degree(t, 3) == 2


def test_detect_degree_zero_sequence():
    assert detect_degree(seq(0, 0, 0, 0), 2) == 0


def test_detect_degree_rejects_accidental_minor():
    # H_1 = [2] is nonsingular but its depth-1 recurrence fails on the tail
    t = seq(2, 1, 1, 1, 1, 1)
    assert detect_degree(t, 3) == 2


def test_detect_degree_failure_reported():
    # factorial growth satisfies no fixed-depth constant recurrence
    t = seq(1, 1, 2, 6, 24, 120)
    with pytest.raises(DegreeDetectionError):
        detect_degree(t, 2)
    with pytest.raises(DomainError):
        detect_degree(t, 0)


def test_reconstruct_running_example():
    t = TraceSequence(entries=(RatFunc.zero(B), RatFunc.one(B), RatFunc.zero(B), XR))
    report = reconstruct(t, 2)
    assert report.degree == 2
    assert report.residual_violations == 0
    assert not report.meromorphic_coefficients
    assert report.current == validate(Y * Y - X, MPoly.constant(V, 1))


def test_reconstruct_split_example():
    report = reconstruct(seq(2, 1, 1, 1), 2)
    assert report.current == validate(Y * Y - Y, Y.scale(2) - 1)


def test_reconstruct_single_point():
    # u_k = 5 * 2^k comes from p = y - 2, r = 5
    report = reconstruct(seq(5, 10, 20, 40), 2)
    assert report.degree == 1
    assert report.current == validate(Y - 2, MPoly.constant(V, 5))


def test_reconstruct_zero_sentinel():
    report = reconstruct(seq(0, 0, 0, 0), 3)
    assert report.degree == 0
    assert report.current == ZeroCurrent(1)
    assert report.residual_violations == 0


def test_reconstruct_reproduces_traces():
    rng = Random(23)
    for _ in range(10):
        c = random_current(rng, n=1, max_degree=4, coeff_degree=2)
        t = traces(c, 2 * c.degree + 2)
        report = reconstruct(t, c.degree)
        assert report.current == c
        assert traces(report.current, len(t)).entries == t.entries


def test_reconstruct_minimality_on_squared_factor():
    # p = (y - x)^2 with gcd(r, p) = 1: the annihilator has degree exactly 2
    p = (Y - X) * (Y - X)
    c = validate(p, MPoly.constant(V, 1))
    t = traces(c, 6)
    report = reconstruct(t, 3)
    assert report.degree == 2
    assert report.current == c


def test_reconstruct_flags_meromorphic_coefficients():
    # u_k = 2^k / x: recurrence coefficient is polynomial but r_0 = 1/x is not
    entries = tuple(RatFunc.constant(B, 2 ** k) / XR for k in range(4))
    report = reconstruct(TraceSequence(entries=entries), 2)
    assert report.degree == 1
    assert report.current is None
    assert report.meromorphic_coefficients
    assert report.residual_violations == 0
    assert report.denominator_coefficients == (RatFunc.constant(B, -2),)
    assert report.numerator_coefficients == (RatFunc.one(B) / XR,)


def test_detect_rational_geometric():
    s = SeriesSample(base_point=0, coefficients=tuple(Fraction(1) for _ in range(8)))
    f = detect_rational(s, 0, 1)
    one = MPoly.constant(B, 1)
    assert f == RatFunc(one, one - XB)


def test_detect_rational_rejects_exp_prefix():
    coeffs = tuple(Fraction(1, __import__("math").factorial(k)) for k in range(8))
    assert detect_rational(SeriesSample(0, coeffs), 3, 3) is None


def test_detect_rational_rejects_near_geometric():
    # 1, 3, 9, 28: the unique (1,1) candidate 1/(1-3x) fails at index 3
    s = SeriesSample(0, (Fraction(1), Fraction(3), Fraction(9), Fraction(28)))
    assert detect_rational(s, 1, 1) is None


def test_detect_rational_zero_series():
    s = SeriesSample(0, (Fraction(0),) * 6)
    f = detect_rational(s, 2, 2)
    assert f is not None and f.is_zero()


def test_detect_rational_needs_enough_coefficients():
    s = SeriesSample(0, (Fraction(1),) * 4)
    with pytest.raises(DomainError):
        detect_rational(s, 2, 2)


def test_detect_rational_roundtrip():
    rng = Random(5)
    done = 0
    while done < 12:
        num = MPoly(B, {(k,): Fraction(rng.randint(-3, 3)) for k in range(3)})
        den = MPoly(B, {(k,): Fraction(rng.randint(-3, 3)) for k in range(2)})
        den = den + XB * XB
        if num.is_zero():
            continue
        f = RatFunc(num, den)
        x0 = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
        try:
            s = sample_series(f, x0, 8)
        except DomainError:
            continue
        g = detect_rational(s, 2, 2)
        assert g == f
        done += 1


def test_sample_series_geometric():
    f = RatFunc(MPoly.constant(B, 1), MPoly.constant(B, 1) - XB)
    s = sample_series(f, 0, 5)
    assert s.coefficients == (Fraction(1),) * 5
    # at x0 = 1/2 the same function expands with powers of 2
    s2 = sample_series(f, Fraction(1, 2), 4)
    assert s2.coefficients == (Fraction(2), Fraction(4), Fraction(8), Fraction(16))


def test_sample_series_polar_point_rejected():
    f = RatFunc(MPoly.constant(B, 1), MPoly.constant(B, 1) - XB)
    with pytest.raises(DomainError, match="polar"):
        sample_series(f, 1, 4)


def test_continue_current_roundtrip():
    c = validate(Y * Y - X, MPoly.constant(V, 1))
    t = traces(c, 6)
    series = [sample_series(e, 1, 8) for e in t.entries]
    report = continue_current(series, 2, 2, 0)
    assert report.current == c


def test_continue_current_names_failing_trace():
    good = [sample_series(RatFunc.constant(B, 1), 0, 8) for _ in range(4)]
    bad = SeriesSample(0, tuple(
        Fraction(1, __import__("math").factorial(k)) for k in range(8)))
    with pytest.raises(ContinuationError) as exc:
        continue_current([bad] + good[1:], 2, 3, 3)
    assert exc.value.index == 0


def test_continue_current_zero_series():
    series = [SeriesSample(0, (Fraction(0),) * 6) for _ in range(4)]
    report = continue_current(series, 2, 2, 2)
    assert report.current == ZeroCurrent(1)


def test_continue_current_input_checks():
    s = sample_series(RatFunc.one(B), 0, 6)
    with pytest.raises(DomainError):
        continue_current([s, s, s], 2, 2, 2)
    other = sample_series(RatFunc.one(B), 1, 6)
    with pytest.raises(DomainError, match="base point"):
        continue_current([s, s, s, other], 2, 2, 2)
