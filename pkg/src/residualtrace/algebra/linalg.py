"""Exact linear algebra over the rational function field.

Determinants use Bareiss fraction-free elimination after clearing row
denominators, so all intermediate work stays in the polynomial ring.  The
same elimination drives `solve_linear`; back substitution is the only place
rational function division appears.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError, SingularSystemError
from .poly import MPoly, exact_div, poly_gcd, poly_lcm
from .ratfunc import RatFunc


class FracMatrix:
    """Immutable rectangular matrix of RatFunc entries over one variable tuple."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        entries = tuple(tuple(self._coerce(e, rows) for e in row) for row in rows)
        if not entries or not entries[0]:
            raise DomainError("matrix must have at least one row and column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise DomainError("ragged rows in matrix")
        variables = entries[0][0].vars
        for row in entries:
            for e in row:
                if e.vars != variables:
                    raise DomainError("matrix entries live over different variable lists")
        self.entries = entries

    @staticmethod
    def _coerce(e, rows):
        if isinstance(e, RatFunc):
            return e
        if isinstance(e, MPoly):
            return RatFunc(e)
        raise DomainError(f"matrix entries must be RatFunc or MPoly, got {type(e).__name__}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def vars(self) -> tuple[str, ...]:
        return self.entries[0][0].vars

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, FracMatrix):
            return NotImplemented
        return self.entries == other.entries


def _cleared_rows(m: FracMatrix, rhs: list[RatFunc] | None = None):
    """Multiply each row by the lcm of its denominators.

    Returns (rows of MPoly, rhs column of MPoly or None, row multipliers).
    """
    out_rows = []
    out_rhs = [] if rhs is not None else None
    multipliers = []
    for i, row in enumerate(m.entries):
        cells = list(row) + ([rhs[i]] if rhs is not None else [])
        mult = MPoly.constant(m.vars, 1)
        for c in cells:
            if not c.den.is_one():
                mult = poly_lcm(mult, c.den)
        cleared = [c.num * exact_div(mult, c.den) for c in cells]
        if rhs is not None:
            out_rhs.append(cleared.pop())
        out_rows.append(cleared)
        multipliers.append(mult)
    return out_rows, out_rhs, multipliers


def det_poly_grid(rows: list[list[MPoly]]) -> MPoly:
    """Bareiss determinant of a square MPoly matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("determinant requires a square matrix")
    a = [list(r) for r in rows]
    variables = a[0][0].vars
    sign = 1
    prev = MPoly.constant(variables, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot_row is None:
                return MPoly.zero(variables)
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            a[i][k] = MPoly.zero(variables)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def determinant(m: FracMatrix) -> RatFunc:
    if m.rows != m.cols:
        raise DomainError("determinant requires a square matrix")
    rows, _, mults = _cleared_rows(m)
    det = det_poly_grid(rows)
    denom = MPoly.constant(m.vars, 1)
    for mult in mults:
        denom = denom * mult
    return RatFunc(det, denom)


def solve_linear(m: FracMatrix, rhs) -> list[RatFunc]:
    """Solve m x = rhs exactly; raises SingularSystemError when det m = 0."""
    if m.rows != m.cols:
        raise DomainError("solve requires a square matrix")
    rhs = [e if isinstance(e, RatFunc) else RatFunc(e) for e in rhs]
    if len(rhs) != m.rows:
        raise DomainError(f"right-hand side has {len(rhs)} entries for {m.rows} rows")
    for e in rhs:
        if e.vars != m.vars:
            raise DomainError("right-hand side lives over a different variable list")
    n = m.rows
    a, c, _ = _cleared_rows(m, rhs)
    variables = m.vars
    prev = MPoly.constant(variables, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot_row is None:
                raise SingularSystemError("coefficient matrix is singular")
            a[k], a[pivot_row] = a[pivot_row], a[k]
            c[k], c[pivot_row] = c[pivot_row], c[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            c[i] = exact_div(c[i] * a[k][k] - a[i][k] * c[k], prev)
            a[i][k] = MPoly.zero(variables)
        prev = a[k][k]
    if a[n - 1][n - 1].is_zero():
        raise SingularSystemError("coefficient matrix is singular")
    x: list[RatFunc | None] = [None] * n
    for i in range(n - 1, -1, -1):
        acc = RatFunc(c[i])
        for j in range(i + 1, n):
            acc = acc - RatFunc(a[i][j]) * x[j]
        x[i] = acc / RatFunc(a[i][i])
    return x


def kernel_vector(rows: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """A deterministic nonzero rational kernel vector, or None if full rank.

    Gauss-Jordan over Fraction; the first free column is set to 1 and the
    remaining free columns to 0, so the output depends only on the input.
    """
    a = [list(map(Fraction, r)) for r in rows]
    for r in a:
        if len(r) != ncols:
            raise DomainError("ragged rows in kernel computation")
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(a)) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        pv = a[row][col]
        a[row] = [v / pv for v in a[row]]
        for i in range(len(a)):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [v - f * w for v, w in zip(a[i], a[row])]
        pivots.append((row, col))
        row += 1
        if row == len(a):
            break
    pivot_cols = {c for _, c in pivots}
    free = next((c for c in range(ncols) if c not in pivot_cols), None)
    if free is None:
        return None
    v = [Fraction(0)] * ncols
    v[free] = Fraction(1)
    for r, c in pivots:
        v[c] = -a[r][free]
    return v


def sylvester_resultant(p: MPoly, q: MPoly, var: str) -> MPoly:
    """Resultant of p and q with respect to `var`, over the remaining ring.

    Computed as the Bareiss determinant of the Sylvester matrix; the result
    has `var`-degree 0 but keeps the full variable tuple.
    """
    p._check_same_ring(q)
    if p.is_zero() or q.is_zero():
        return MPoly.zero(p.vars)
    mdeg = p.degree(var)
    ndeg = q.degree(var)
    if mdeg == 0 and ndeg == 0:
        return MPoly.constant(p.vars, 1)
    if ndeg == 0:
        return q ** mdeg
    if mdeg == 0:
        return p ** ndeg
    pc = [p.coefficient_in(var, k) for k in range(mdeg, -1, -1)]
    qc = [q.coefficient_in(var, k) for k in range(ndeg, -1, -1)]
    size = mdeg + ndeg
    zero = MPoly.zero(p.vars)
    rows = []
    for i in range(ndeg):
        rows.append([zero] * i + pc + [zero] * (ndeg - 1 - i))
    for i in range(mdeg):
        rows.append([zero] * i + qc + [zero] * (mdeg - 1 - i))
    assert all(len(r) == size for r in rows)
    return det_poly_grid(rows)
