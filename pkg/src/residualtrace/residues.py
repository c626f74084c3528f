"""One-variable residue sums for rational forms in a fiber variable.

For a form num/den * dy with den of positive degree d in the fiber variable
y, the sum of the residues over all poles in y equals minus the residue at
infinity.  Writing den = c * den_monic with c the leading fiber coefficient,
that value is the coefficient of y^(d-1) in the remainder of (num/c) modulo
den_monic, a rational function of the base variables.  This is the exact
path; no root is ever computed.

Two numeric paths act as oracles for it: residues at numerically computed
poles (companion-matrix roots) and trapezoidal contour quadrature of
(1/2 pi i) * integral of f dy over a circle enclosing every pole.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import MPoly, RatFunc, exact_div, poly_gcd
from .errors import DomainError

REPEATED_ROOT_RTOL = 1e-9


def fiber_coefficients(p: MPoly, var: str | None = None) -> list[RatFunc]:
    """Coefficients of p in the fiber variable, ascending, over the base ring."""
    var = var if var is not None else p.vars[-1]
    base = tuple(v for v in p.vars if v != var)
    d = p.degree(var)
    if d < 0:
        return []
    by_exp = p.as_univariate(var)
    out = []
    for k in range(d + 1):
        c = by_exp.get(k)
        if c is None:
            out.append(RatFunc.zero(base))
        else:
            out.append(RatFunc(c.restrict(base)))
    return out


def monic_fiber_coefficients(p: MPoly, var: str | None = None) -> list[RatFunc]:
    """Ascending coefficients of p/lead, where lead is p's top fiber coefficient."""
    coeffs = fiber_coefficients(p, var)
    lead = coeffs[-1]
    return [c / lead for c in coeffs]


def mod_monic(num: list[RatFunc], monic: list[RatFunc]) -> list[RatFunc]:
    """Remainder of num modulo a monic coefficient list, padded to length d."""
    d = len(monic) - 1
    r = list(num)
    for k in range(len(r) - 1, d - 1, -1):
        c = r[k]
        if c.is_zero():
            continue
        for j in range(d + 1):
            r[k - d + j] = r[k - d + j] - c * monic[j]
    r = r[:d]
    if len(r) < d:
        pad = RatFunc.zero(monic[0].vars)
        r = r + [pad] * (d - len(r))
    return r


def shift_mod_monic(rem: list[RatFunc], monic: list[RatFunc]) -> list[RatFunc]:
    """Multiply a reduced coefficient list by the fiber variable, mod monic."""
    d = len(monic) - 1
    top = rem[d - 1]
    zero = RatFunc.zero(monic[0].vars)
    out = [zero] + rem[:d - 1]
    if not top.is_zero():
        out = [out[j] - top * monic[j] for j in range(d)]
    return out


class RationalForm1D:
    """A rational form num/den * dy, reduced on construction.

    The fiber variable is the last variable of the shared tuple; every other
    variable is treated as a parameter.
    """

    __slots__ = ("num", "den", "fiber", "base_vars")

    def __init__(self, num: MPoly, den: MPoly):
        num._check_same_ring(den)
        if den.is_zero():
            raise DomainError("denominator is identically zero")
        if not num.is_zero():
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = exact_div(num, g)
                den = exact_div(den, g)
        self.num = num
        self.den = den
        self.fiber = num.vars[-1]
        self.base_vars = num.vars[:-1]

    def __repr__(self):
        return f"RationalForm1D(({self.num}) / ({self.den}) d{self.fiber})"


@dataclass(frozen=True)
class ContourSpec:
    """Circle contour for the quadrature oracle."""

    center: complex = 0j
    radius: float = 0.0
    points: int = 256

    def __post_init__(self):
        if self.radius <= 0:
            raise DomainError("contour radius must be positive")
        if self.points < 16:
            raise DomainError("contour needs at least 16 quadrature points")


def residue_sum(form: RationalForm1D) -> RatFunc:
    """Exact sum of fiber residues, as a rational function of the base variables.

    A denominator of fiber degree 0 has no poles, so the sum is 0.
    """
    d = form.den.degree(form.fiber)
    if d <= 0:
        return RatFunc.zero(form.base_vars)
    den_coeffs = fiber_coefficients(form.den, form.fiber)
    lead = den_coeffs[-1]
    monic = [c / lead for c in den_coeffs]
    num_coeffs = [c / lead for c in fiber_coefficients(form.num, form.fiber)]
    rem = mod_monic(num_coeffs, monic)
    return rem[d - 1]


def _specialize(form: RationalForm1D, x_values: Sequence[complex]):
    if len(x_values) != len(form.base_vars):
        raise DomainError(
            f"expected {len(form.base_vars)} base values, got {len(x_values)}")
    assign = {v: complex(x) for v, x in zip(form.base_vars, x_values)}
    assign[form.fiber] = 0j  # placeholder, replaced per power below
    dmap = form.den.as_univariate(form.fiber)
    nmap = form.num.as_univariate(form.fiber)

    def coeffs(m):
        if not m:
            return [0j]
        top = max(m)
        out = [0j] * (top + 1)
        for k, poly in m.items():
            out[k] = poly.eval_numeric(assign)
        return out

    return coeffs(nmap), coeffs(dmap)


def _strip_trailing(c: list[complex], tol: float = 0.0) -> list[complex]:
    out = list(c)
    while len(out) > 1 and abs(out[-1]) <= tol:
        out.pop()
    return out


def pointwise_residues(form: RationalForm1D, x_values: Sequence[complex]):
    """Numeric residues at each pole for one specialization of the base variables.

    Returns (pole, residue) pairs sorted by the pole's real then imaginary
    part; an empty list when the denominator has no fiber poles at all.
    Raises DomainError when the specialized denominator drops degree or has
    a numerically repeated root.
    """
    if form.den.degree(form.fiber) == 0:
        return []
    ncoeffs, dcoeffs = _specialize(form, x_values)
    dcoeffs = _strip_trailing(dcoeffs)
    d = len(dcoeffs) - 1
    if d < 1:
        raise DomainError("specialized denominator dropped degree")
    roots = np.roots(dcoeffs[::-1])
    dprime = [k * dcoeffs[k] for k in range(1, d + 1)]
    scale = max(1.0, max(abs(c) for c in dcoeffs))

    def horner(cs, z):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    pairs = []
    for z in roots:
        z = complex(z)
        dp = horner(dprime, z)
        if abs(dp) < REPEATED_ROOT_RTOL * scale:
            raise DomainError(
                f"repeated pole near {z:.6g}; pointwise residues are undefined there")
        pairs.append((z, horner(ncoeffs, z) / dp))
    pairs.sort(key=lambda p: (p[0].real, p[0].imag))
    return pairs


def default_contour(form: RationalForm1D, x_values: Sequence[complex],
                    points: int = 256) -> ContourSpec:
    """Circle |y| = 2 (1 + max |monic coefficient|), enclosing every pole."""
    _, dcoeffs = _specialize(form, x_values)
    dcoeffs = _strip_trailing(dcoeffs)
    if len(dcoeffs) < 2 or dcoeffs[-1] == 0:
        raise DomainError("specialized denominator has no fiber poles")
    lead = dcoeffs[-1]
    radius = 2.0 * (1.0 + max(abs(c / lead) for c in dcoeffs))
    return ContourSpec(center=0j, radius=radius, points=points)


def contour_oracle(form: RationalForm1D, x_values: Sequence[complex],
                   spec: ContourSpec | None = None) -> complex:
    """Trapezoidal estimate of the residue sum for one base specialization.

    The contour must enclose every pole and pass near none of them; both
    conditions are checked against companion-matrix roots.  A pole-free
    integrand (fiber degree 0 denominator) integrates to zero exactly.
    """
    if form.den.degree(form.fiber) == 0:
        return 0j
    ncoeffs, dcoeffs = _specialize(form, x_values)
    dstripped = _strip_trailing(dcoeffs)
    if len(dstripped) < 2 or dstripped[-1] == 0:
        raise DomainError("specialized denominator dropped degree")
    if spec is None:
        spec = default_contour(form, x_values)
    roots = np.roots(dstripped[::-1])
    for z in roots:
        gap = abs(complex(z) - spec.center)
        if gap >= spec.radius:
            raise DomainError(f"pole {complex(z):.6g} lies outside the contour")
        if abs(gap - spec.radius) < 1e-6 * spec.radius:
            raise DomainError(f"pole {complex(z):.6g} sits on the contour")

    def horner(cs, z):
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    n = spec.points
    total = 0j
    for j in range(n):
        theta = 2.0 * np.pi * j / n
        w = spec.center + spec.radius * complex(np.cos(theta), np.sin(theta))
        denom = horner(dcoeffs, w)
        if denom == 0:
            raise DomainError("quadrature node hit a pole")
        total += horner(ncoeffs, w) / denom * complex(np.cos(theta), np.sin(theta))
    value = total * spec.radius / n
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise DomainError("contour quadrature diverged")
    return value


def oracle_report(form: RationalForm1D, sample_points: Sequence[Sequence[complex]],
                  spec: ContourSpec | None = None) -> list[dict]:
    """Compare the exact residue sum against both numeric paths per sample point."""
    exact = residue_sum(form)
    rows = []
    for point in sample_points:
        assign = {v: complex(x) for v, x in zip(form.base_vars, point)}
        exact_val = exact.eval_numeric(assign)
        quad = contour_oracle(form, point, spec)
        try:
            point_sum = sum(res for _, res in pointwise_residues(form, point))
            point_err = abs(point_sum - exact_val)
        except DomainError:
            point_sum = None
            point_err = None
        rows.append({
            "x": [complex(x) for x in point],
            "exact": exact_val,
            "contour": quad,
            "contour_error": abs(quad - exact_val),
            "pointwise": point_sum,
            "pointwise_error": point_err,
        })
    return rows
