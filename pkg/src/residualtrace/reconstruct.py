"""Recovering a current from finitely many traces, and traces from series data.

The inverse direction of the trace map: given u_0 .. u_m, find the minimal
fiber degree d whose Hankel system is solvable and whose recurrence
annihilates every available entry, then rebuild p from the recurrence
coefficients and r from the triangular relation

    r = y^{d-1} u_0 + y^{d-2} (u_1 + a_1 u_0) + ... ,

coefficient of y^{d-1-j} being sum_{i<=j} a_i u_{j-i} with a_0 = 1.

Series-sampled traces go through a rationality test first: a kernel-based
Pade candidate within prescribed numerator and denominator degree bounds,
accepted only if its Taylor series reproduces every supplied coefficient.
If any valid candidate exists, every nonzero kernel vector reduces to the
same one, so a failed verification really means no candidate exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import MPoly, RatFunc, as_fraction, kernel_vector, solve_linear
from .currents import ResidualCurrent, ZeroCurrent, validate
from .errors import (
    ContinuationError,
    DegreeDetectionError,
    DomainError,
    SingularSystemError,
)
from .traces import TraceSequence, hankel, recurrence_check, traces

__all__ = [
    "SeriesSample",
    "ReconstructionReport",
    "detect_degree",
    "reconstruct",
    "detect_rational",
    "continue_current",
    "sample_series",
]


@dataclass(frozen=True)
class SeriesSample:
    """Taylor coefficients of one trace at a rational base point."""

    base_point: Fraction
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "base_point", as_fraction(self.base_point))
        object.__setattr__(
            self, "coefficients", tuple(as_fraction(c) for c in self.coefficients))

    def __len__(self):
        return len(self.coefficients)


@dataclass(frozen=True)
class ReconstructionReport:
    """Outcome of a reconstruction.

    `current` is a ResidualCurrent on success, the ZeroCurrent sentinel for
    all-zero traces, and None when the recurrence or numerator coefficients
    fall outside the polynomial ring (then `meromorphic_coefficients` is
    set and the raw coefficients are kept for inspection).
    """

    degree: int
    current: ResidualCurrent | ZeroCurrent | None
    residual_violations: int
    meromorphic_coefficients: bool = False
    denominator_coefficients: tuple[RatFunc, ...] = ()
    numerator_coefficients: tuple[RatFunc, ...] = ()


def _detect(t: TraceSequence, d_max: int):
    if d_max < 1:
        raise DomainError("d_max must be at least 1")
    if t.is_zero():
        return 0, []
    for d in range(1, min(d_max, len(t) // 2) + 1):
        h = hankel(t, d)
        rhs = [-t[d + i] for i in range(d)]
        try:
            sol = solve_linear(h, rhs)
        except SingularSystemError:
            continue
        # sol[j] = a_{d-j}, so the recurrence reads u_{k+d} + sum_j sol[j] u_{k+j} = 0
        ok = True
        for k in range(len(t) - d):
            acc = t[k + d]
            for j in range(d):
                acc = acc + sol[j] * t[k + j]
            if not acc.is_zero():
                ok = False
                break
        if ok:
            a = [sol[d - i] for i in range(1, d + 1)]
            return d, a
    raise DegreeDetectionError(
        f"no fiber degree up to {min(d_max, len(t) // 2)} is consistent with the traces")


def detect_degree(t: TraceSequence, d_max: int) -> int:
    """Minimal fiber degree whose recurrence annihilates all of t; 0 for zero t."""
    d, _ = _detect(t, d_max)
    return d


def reconstruct(t: TraceSequence, d_max: int) -> ReconstructionReport:
    """Rebuild the current whose first len(t) traces are t.

    On success `traces(report.current, len(t))` equals t entry for entry.
    """
    d, a = _detect(t, d_max)
    n = len(t.vars)
    if d == 0:
        return ReconstructionReport(degree=0, current=ZeroCurrent(n), residual_violations=0)
    r_coeffs = []
    for j in range(d):
        acc = t[j]
        for i in range(1, j + 1):
            acc = acc + a[i - 1] * t[j - i]
        r_coeffs.append(acc)  # coefficient of y^{d-1-j}
    den_coeffs = tuple(a)
    num_coeffs = tuple(r_coeffs)
    meromorphic = any(not c.is_polynomial() for c in den_coeffs + num_coeffs)
    if meromorphic:
        violations = _count_violations(t, d, a)
        return ReconstructionReport(
            degree=d,
            current=None,
            residual_violations=violations,
            meromorphic_coefficients=True,
            denominator_coefficients=den_coeffs,
            numerator_coefficients=num_coeffs,
        )
    fiber = "y" if "y" not in t.vars else "y_"
    variables = t.vars + (fiber,)
    p_pieces = {d: MPoly.constant(variables, 1)}
    for i, ai in enumerate(a, start=1):
        if not ai.is_zero():
            p_pieces[d - i] = ai.as_poly().extend(variables)
    r_pieces = {}
    for j, c in enumerate(r_coeffs):
        if not c.is_zero():
            r_pieces[d - 1 - j] = c.as_poly().extend(variables)
    p = MPoly.from_univariate(variables, fiber, p_pieces)
    r = MPoly.from_univariate(variables, fiber, r_pieces)
    current = validate(p, r)
    if current.degree != d:
        raise DomainError("reconstructed pair reduced below the detected degree")
    violations = len(recurrence_check(t, current.p))
    if traces(current, len(t)).entries != t.entries:
        raise DomainError("reconstructed current does not reproduce the input traces")
    return ReconstructionReport(
        degree=d,
        current=current,
        residual_violations=violations,
        denominator_coefficients=den_coeffs,
        numerator_coefficients=num_coeffs,
    )


def _count_violations(t: TraceSequence, d: int, a: list[RatFunc]) -> int:
    bad = 0
    for k in range(len(t) - d):
        acc = t[k + d]
        for i, ai in enumerate(a, start=1):
            acc = acc + ai * t[k + d - i]
        if not acc.is_zero():
            bad += 1
    return bad


# ---- univariate series helpers (ascending Fraction lists) ----------------


def _strip(c: list[Fraction]) -> list[Fraction]:
    out = list(c)
    while out and out[-1] == 0:
        out.pop()
    return out


def _umul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _udivmod(a: list[Fraction], b: list[Fraction]):
    b = _strip(b)
    if not b:
        raise DomainError("univariate division by zero")
    r = _strip(a)
    q = [Fraction(0)] * max(0, len(r) - len(b) + 1)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        q[k] = c
        for j, y in enumerate(b):
            r[k + j] -= c * y
        r = _strip(r)
    return q, r


def _ugcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _strip(a), _strip(b)
    while b:
        _, rem = _udivmod(a, b)
        a, b = b, rem
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _series_div(p: list[Fraction], q: list[Fraction], length: int) -> list[Fraction]:
    q0 = q[0]
    out = []
    for k in range(length):
        s = p[k] if k < len(p) else Fraction(0)
        for j in range(1, min(k, len(q) - 1) + 1):
            s -= q[j] * out[k - j]
        out.append(s / q0)
    return out


def _taylor_shift(coeffs: list[Fraction], x0: Fraction) -> list[Fraction]:
    """Coefficients of p(x0 + t) from those of p(x), by synthetic division."""
    a = list(coeffs)
    n = len(a)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            a[j] += x0 * a[j + 1]
    return a


def detect_rational(sample: SeriesSample, max_num_deg: int, max_den_deg: int,
                    var: str = "x") -> RatFunc | None:
    """Rational function matching a Taylor sample within degree bounds, or None.

    Needs at least max_num_deg + max_den_deg + 2 coefficients: enough to pin
    down the candidate plus at least one extra for verification.  None means
    no rational function within the bounds has this Taylor expansion at the
    base point (in particular when the only algebraic candidates would have
    a pole there).
    """
    big_l = len(sample)
    m, nn = max_num_deg, max_den_deg
    if m < 0 or nn < 0:
        raise DomainError("degree bounds must be nonnegative")
    if big_l < m + nn + 2:
        raise DomainError(
            f"need at least {m + nn + 2} coefficients for bounds ({m}, {nn}), have {big_l}")
    c = list(sample.coefficients)
    rows = []
    for k in range(m + 1, m + nn + 1):
        rows.append([c[k - j] if 0 <= k - j < big_l else Fraction(0) for j in range(nn + 1)])
    q = kernel_vector(rows, nn + 1)
    if q is None:
        # nn rows in nn + 1 unknowns always leave a kernel vector
        raise DomainError("degenerate linearization in the rationality test")
    p = []
    for i in range(m + 1):
        s = Fraction(0)
        for j in range(min(i, nn) + 1):
            s += q[j] * c[i - j]
        p.append(s)
    p = _strip(p)
    q = _strip(q)
    if not p:
        if any(c):
            return None
        return RatFunc.zero((var,))
    g = _ugcd(p, q)
    if len(g) > 1:
        p, _ = _udivmod(p, g)
        q, _ = _udivmod(q, g)
    if q[0] == 0:
        # pole at the base point: no bounded rational function matches
        return None
    scale = q[0]
    p = [x / scale for x in p]
    q = [x / scale for x in q]
    if _series_div(p, q, big_l) != c:
        return None
    x0 = sample.base_point
    shifted_p = _taylor_shift_inverse(p, x0)
    shifted_q = _taylor_shift_inverse(q, x0)
    num = MPoly((var,), {(k,): v for k, v in enumerate(shifted_p) if v})
    den = MPoly((var,), {(k,): v for k, v in enumerate(shifted_q) if v})
    return RatFunc(num, den)


def _taylor_shift_inverse(coeffs: list[Fraction], x0: Fraction) -> list[Fraction]:
    """Coefficients of p(x - x0) from those of p(t)."""
    return _taylor_shift(coeffs, -x0)


def sample_series(f: RatFunc, x0, count: int) -> SeriesSample:
    """Exact Taylor coefficients of a univariate rational function at x0."""
    if len(f.vars) != 1:
        raise DomainError("series sampling needs a univariate rational function")
    if count < 1:
        raise DomainError("count must be at least 1")
    x0 = as_fraction(x0)
    var = f.vars[0]

    def coeff_list(poly: MPoly) -> list[Fraction]:
        out = [Fraction(0)] * (poly.degree(var) + 1) if not poly.is_zero() else []
        for exps, cv in poly.terms.items():
            out[exps[0]] = cv
        return out

    p = _taylor_shift(coeff_list(f.num), x0)
    q = _taylor_shift(coeff_list(f.den), x0)
    q = q if q else [Fraction(0)]
    if q[0] == 0:
        raise DomainError(f"base point {x0} lies on the polar set")
    return SeriesSample(base_point=x0,
                        coefficients=tuple(_series_div(p, q, count)))


def continue_current(series: list[SeriesSample], d_max: int,
                     max_num_deg: int, max_den_deg: int,
                     var: str = "x") -> ReconstructionReport:
    """Reconstruct a current from series-sampled traces u_0 .. u_{m}.

    Each sample is independently tested for rationality within the degree
    bounds; a failure raises ContinuationError naming the trace index.  The
    recovered rational traces then go through the usual reconstruction.
    """
    if len(series) < 2 * d_max:
        raise DomainError(
            f"need at least {2 * d_max} trace series for d_max = {d_max}, have {len(series)}")
    base = series[0].base_point
    if any(s.base_point != base for s in series):
        raise DomainError("all trace series must share one base point")
    entries = []
    for k, s in enumerate(series):
        f = detect_rational(s, max_num_deg, max_den_deg, var)
        if f is None:
            raise ContinuationError(
                k, f"trace {k} admits no rational continuation within bounds "
                   f"({max_num_deg}, {max_den_deg})")
        entries.append(f)
    return reconstruct(TraceSequence(entries=tuple(entries)), d_max)
