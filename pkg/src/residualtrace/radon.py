"""Trace data of a current in line coordinates, and the induced forms.

Substituting x_i = a_i y + b_i turns the pair (p, r) into a one-variable
rational form in y whose coefficients are rational in the chart variables
(a_1 .. a_n, b_1 .. b_n).  Its residue sums

    u_k(a, b) = residue sum over y of r(ay + b, y) y^k / p(ay + b, y)

carry the whole transform: the degree-n form is assembled per subset I of
{1..n} as u_|I| da^I wedge db^(complement), and the family satisfies the
exact closedness identities

    d/db_i u_{k+n} = d/da_i u_{k+n-1}

because both sides are the same substituted derivative of r/p.  All of this
is exact rational arithmetic; denominators only ever involve the a
variables (powers of the leading fiber coefficient after substitution).

One subtlety: when p has total degree above its fiber degree, substituting
x_i = a_i y + b_i raises the y-degree, and the chart traces sum over more
poles than the fiber traces do.  Specializing every a_i to 0 then need not
reproduce the plain traces; it does as soon as total degree and fiber
degree agree (products of affine roots, for instance).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import MPoly, RatFunc, as_fraction
from .currents import ResidualCurrent, ZeroCurrent
from .errors import DomainError
from .residues import fiber_coefficients, mod_monic, shift_mod_monic
from .traces import TraceSequence

__all__ = [
    "LineChart",
    "RadonForm",
    "line_chart",
    "radon",
    "assemble_radon_form",
    "closedness_check",
    "pencil_projection",
    "is_radon_zero",
    "closed_potential",
]


@dataclass(frozen=True)
class LineChart:
    """Names for the line coordinates of an n-dimensional base."""

    n: int
    a_names: tuple[str, ...]
    b_names: tuple[str, ...]

    @property
    def vars(self) -> tuple[str, ...]:
        return self.a_names + self.b_names


def line_chart(n: int) -> LineChart:
    if n < 1:
        raise DomainError("need at least one base variable")
    if n == 1:
        return LineChart(1, ("a",), ("b",))
    return LineChart(
        n,
        tuple(f"a{i}" for i in range(1, n + 1)),
        tuple(f"b{i}" for i in range(1, n + 1)),
    )


@dataclass(frozen=True)
class RadonForm:
    """Components of the transform, keyed by subset of line-slope indices.

    components[I] is the coefficient of da^I wedge db^(complement of I),
    with I a frozenset of indices in 1..n; its value is u_|I| in the chart
    variables.
    """

    n: int
    components: dict[frozenset[int], RatFunc]


def _substituted_reduction(current: ResidualCurrent, chart: LineChart):
    """Monic fiber coefficients and reduced numerator in chart variables."""
    fiber = current.fiber
    chart_vars = chart.vars + (fiber,)
    images = {}
    for i, x in enumerate(current.base_vars):
        a = MPoly.variable(chart_vars, chart.a_names[i])
        b = MPoly.variable(chart_vars, chart.b_names[i])
        images[x] = a * MPoly.variable(chart_vars, fiber) + b
    p_sub = current.p.subs(chart_vars, images)
    r_sub = current.r.subs(chart_vars, images)
    d_sub = p_sub.degree(fiber)
    if d_sub < 1:
        raise DomainError("substituted denominator lost its fiber degree")
    den = fiber_coefficients(p_sub, fiber)
    lead = den[-1]
    monic = [c / lead for c in den]
    num = [c / lead for c in fiber_coefficients(r_sub, fiber)]
    return mod_monic(num, monic), monic, d_sub


def radon(current: ResidualCurrent, k_max: int) -> list[RatFunc]:
    """Chart traces u_0 .. u_{k_max} of a current in line coordinates."""
    if k_max < 0:
        raise DomainError("k_max must be nonnegative")
    chart = line_chart(current.n)
    rem, monic, d_sub = _substituted_reduction(current, chart)
    out = []
    for _ in range(k_max + 1):
        out.append(rem[d_sub - 1])
        rem = shift_mod_monic(rem, monic)
    return out


def _chart_shape(u: Sequence[RatFunc]) -> tuple[int, tuple[str, ...]]:
    if not u:
        raise DomainError("need at least one chart trace")
    variables = u[0].vars
    if any(e.vars != variables for e in u):
        raise DomainError("chart traces live over different variable lists")
    if len(variables) % 2 != 0 or not variables:
        raise DomainError(
            f"chart traces need paired slope/offset variables, got {variables}")
    return len(variables) // 2, variables


def assemble_radon_form(u: Sequence[RatFunc]) -> RadonForm:
    """Arrange chart traces into the full transform.

    The component on da^I wedge db^(complement) is u_|I|, so the list needs
    n + 1 entries at least; extras are ignored.
    """
    n, _ = _chart_shape(u)
    if len(u) < n + 1:
        raise DomainError(f"need chart traces u_0 .. u_{n}, have {len(u)}")
    components = {}
    for size in range(n + 1):
        for subset in combinations(range(1, n + 1), size):
            components[frozenset(subset)] = u[size]
    return RadonForm(n=n, components=components)


def closedness_check(u: Sequence[RatFunc], k_range: Iterable[int]) -> list[tuple[int, int]]:
    """Violations (i, k) of d/db_i u_{k+n} = d/da_i u_{k+n-1}; empty when closed."""
    n, variables = _chart_shape(u)
    a_names, b_names = variables[:n], variables[n:]
    bad = []
    for k in k_range:
        if k < 0 or k + n >= len(u):
            raise DomainError(
                f"k = {k} needs chart traces up to u_{k + n}, have {len(u)}")
        for i in range(n):
            lhs = u[k + n].diff(b_names[i])
            rhs = u[k + n - 1].diff(a_names[i])
            if lhs != rhs:
                bad.append((i + 1, k))
    return bad


def pencil_projection(current: ResidualCurrent, apex: Sequence, count: int | None = None) -> TraceSequence:
    """Traces along the pencil of lines through a fixed point.

    `apex` is (x_1 .. x_n, y); lines through it satisfy b_i = x_i - a_i y,
    which pins the offsets and leaves the slopes free.  The result is
    computed directly from the pinned substitution and cross-checked against
    specializing the chart traces; the apex must avoid the support of the
    current.
    """
    apex = [as_fraction(v) for v in apex]
    n = current.n
    if len(apex) != n + 1:
        raise DomainError(f"apex needs {n + 1} coordinates, got {len(apex)}")
    assign = dict(zip(current.base_vars, apex[:n]))
    assign[current.fiber] = apex[n]
    if current.p.eval_exact(assign) == 0:
        raise DomainError("apex lies on the support of the current")
    d = current.degree
    if count is None:
        count = 2 * d + 2
    if count < 1:
        raise DomainError("count must be at least 1")
    chart = line_chart(n)
    y0 = apex[n]

    # direct route: substitute x_i = a_i y + (x_i0 - a_i y0) and reduce
    pencil_vars = chart.a_names + (current.fiber,)
    yv = MPoly.variable(pencil_vars, current.fiber)
    images = {}
    for i, x in enumerate(current.base_vars):
        a = MPoly.variable(pencil_vars, chart.a_names[i])
        images[x] = a * yv + (MPoly.constant(pencil_vars, apex[i]) - a.scale(y0))
    p_sub = current.p.subs(pencil_vars, images)
    r_sub = current.r.subs(pencil_vars, images)
    if p_sub.degree(current.fiber) < 1:
        raise DomainError("pencil substitution lost the fiber degree")
    den = fiber_coefficients(p_sub, current.fiber)
    lead = den[-1]
    monic = [c / lead for c in den]
    rem = mod_monic([c / lead for c in fiber_coefficients(r_sub, current.fiber)], monic)
    d_sub = len(monic) - 1
    direct = []
    for _ in range(count):
        direct.append(rem[d_sub - 1])
        rem = shift_mod_monic(rem, monic)

    # chart route: specialize b_i = x_i0 - a_i y0 in the chart traces
    u = radon(current, count - 1)
    offsets = {
        chart.b_names[i]: MPoly.constant(chart.a_names, apex[i])
        - MPoly.variable(chart.a_names, chart.a_names[i]).scale(y0)
        for i in range(n)
    }
    specialized = [f.subs(chart.a_names, offsets) for f in u]
    if specialized != direct:
        raise DomainError("pencil traces disagree with specialized chart traces")
    return TraceSequence(entries=tuple(direct), source_degree=d)


def is_radon_zero(current: ResidualCurrent | ZeroCurrent, k_probe: int) -> bool:
    """Whether every chart trace u_0 .. u_{k_probe + n} vanishes identically."""
    if isinstance(current, ZeroCurrent):
        return True
    if k_probe < 0:
        raise DomainError("k_probe must be nonnegative")
    u = radon(current, k_probe + current.n)
    return all(f.is_zero() for f in u)


def closed_potential(u0: RatFunc, u1: RatFunc) -> MPoly:
    """Polynomial potential F with dF = u1 da + u0 db, for one-variable charts.

    Both inputs must be polynomial over ("a", "b").  Raises DomainError when
    the form is not closed, which is the exactness obstruction here.
    """
    if u0.vars != u1.vars or len(u0.vars) != 2:
        raise DomainError("potential assembly expects two chart variables")
    if not (u0.is_polynomial() and u1.is_polynomial()):
        raise DomainError("potential assembly needs polynomial components")
    a_name, b_name = u0.vars
    f = u1.as_poly().antiderivative(a_name)
    gap = u0.as_poly() - f.derivative(b_name)
    if gap.degree(a_name) > 0:
        raise DomainError("the form u1 da + u0 db is not closed")
    f = f + gap.antiderivative(b_name)
    if f.derivative(a_name) != u1.as_poly() or f.derivative(b_name) != u0.as_poly():
        raise DomainError("the form u1 da + u0 db is not closed")
    return f
