"""Fiber trace sequences u_k and their Hankel/recurrence structure.

u_k is the residue sum of r * y^k / p over the fiber, a rational function
of the base variables (polynomial whenever p and r are).  Because p is
monic of fiber degree d, the sequence obeys the depth-d linear recurrence
whose coefficients are p's own fiber coefficients:

    u_{k+d} + a_1 u_{k+d-1} + ... + a_d u_k = 0,   p = y^d + a_1 y^{d-1} + ... + a_d.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FracMatrix, RatFunc
from .currents import ResidualCurrent
from .errors import DomainError
from .residues import fiber_coefficients, mod_monic, shift_mod_monic

__all__ = ["TraceSequence", "traces", "recurrence_check", "hankel"]


@dataclass(frozen=True)
class TraceSequence:
    """Consecutive traces u_0 .. u_m over a shared base-variable tuple."""

    entries: tuple[RatFunc, ...]
    source_degree: int | None = None

    def __post_init__(self):
        if not self.entries:
            raise DomainError("a trace sequence needs at least one entry")
        variables = self.entries[0].vars
        if any(e.vars != variables for e in self.entries):
            raise DomainError("trace entries live over different variable lists")

    @property
    def vars(self) -> tuple[str, ...]:
        return self.entries[0].vars

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k: int) -> RatFunc:
        return self.entries[k]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)


def traces(current: ResidualCurrent, count: int) -> TraceSequence:
    """First `count` traces of a current, computed by incremental reduction.

    Each step multiplies the reduced numerator by y modulo p and reads off
    the top coefficient, so the cost is linear in `count`.
    """
    if count < 1:
        raise DomainError("count must be at least 1")
    d = current.degree
    monic = fiber_coefficients(current.p, current.fiber)
    rem = mod_monic(fiber_coefficients(current.r, current.fiber), monic)
    out = []
    for _ in range(count):
        out.append(rem[d - 1])
        rem = shift_mod_monic(rem, monic)
    return TraceSequence(entries=tuple(out), source_degree=d)


def recurrence_check(t: TraceSequence, p) -> list[int]:
    """Indices k where the depth-d recurrence from p fails on t.

    `p` is a fiber-monic MPoly over the trace variables plus one fiber
    variable.  An empty list means every checkable window passed.
    """
    fiber = p.vars[-1]
    if p.vars[:-1] != t.vars:
        raise DomainError(
            f"p base variables {p.vars[:-1]} do not match traces over {t.vars}")
    d = p.degree(fiber)
    if d < 1:
        raise DomainError("p must have positive fiber degree")
    if len(t) < d + 1:
        raise DomainError(
            f"need at least {d + 1} traces to check a depth-{d} recurrence, have {len(t)}")
    coeffs = fiber_coefficients(p, fiber)
    if not (coeffs[-1].is_polynomial() and coeffs[-1].as_poly().is_one()):
        raise DomainError("p is not monic in the fiber variable")
    a = coeffs[:-1]  # a[i] multiplies u_{k+i}; a[i] = a_{d-i} in monic order
    bad = []
    for k in range(len(t) - d):
        acc = t[k + d]
        for i in range(d):
            acc = acc + a[i] * t[k + i]
        if not acc.is_zero():
            bad.append(k)
    return bad


def hankel(t: TraceSequence, d: int) -> FracMatrix:
    """Symmetric d x d Hankel matrix H[i][j] = u_{i+j} of a trace sequence."""
    if d < 1:
        raise DomainError("Hankel size must be at least 1")
    if len(t) < 2 * d - 1:
        raise DomainError(
            f"need at least {2 * d - 1} traces for a {d} x {d} Hankel matrix, have {len(t)}")
    return FracMatrix([[t[i + j] for j in range(d)] for i in range(d)])
