"""Exact multivariate polynomials over the rationals.

Coefficients are ``fractions.Fraction``, terms are keyed by exponent tuples
against a fixed ordered variable tuple.  By convention the fiber variable,
when present, is the last one.  Term order everywhere is graded
lexicographic (total degree first, then left-to-right lex), which fixes a
canonical serialization order and a canonical leading term.

Floating point coefficients are rejected outright: every operation in this
module is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from ..errors import DomainError

Exponents = tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Coerce an int, string, or Fraction to Fraction. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise DomainError("floating point coefficients are not exact; pass a Fraction or string")
    raise DomainError(f"cannot interpret {value!r} as a rational number")


def grlex_key(exps: Exponents) -> tuple[int, Exponents]:
    return (sum(exps), exps)


class MPoly:
    """Immutable multivariate polynomial with Fraction coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables, terms):
        self.vars = tuple(str(v) for v in variables)
        nv = len(self.vars)
        clean: dict[Exponents, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nv:
                raise DomainError(
                    f"exponent vector {exps} does not match variables {self.vars}")
            if any(e < 0 for e in exps):
                raise DomainError(f"negative exponent in {exps}")
            c = as_fraction(coeff)
            if c:
                prev = clean.get(exps)
                if prev is None:
                    clean[exps] = c
                else:
                    s = prev + c
                    if s:
                        clean[exps] = s
                    else:
                        del clean[exps]
        self.terms = clean
        self._hash = None

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "MPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value) -> "MPoly":
        variables = tuple(variables)
        c = as_fraction(value)
        if not c:
            return cls(variables, {})
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables, name: str) -> "MPoly":
        variables = tuple(variables)
        if name not in variables:
            raise DomainError(f"{name!r} is not among variables {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: _ONE})

    @classmethod
    def from_univariate(cls, variables, var: str, coeffs: dict[int, "MPoly"]) -> "MPoly":
        """Assemble sum_k coeffs[k] * var**k; coefficient polys share `variables`."""
        variables = tuple(variables)
        vi = variables.index(var)
        terms: dict[Exponents, Fraction] = {}
        for k, poly in coeffs.items():
            for exps, c in poly.terms.items():
                if exps[vi] != 0:
                    raise DomainError(f"coefficient of {var}^{k} already contains {var}")
                key = exps[:vi] + (exps[vi] + k,) + exps[vi + 1:]
                prev = terms.get(key, _ZERO)
                s = prev + c
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        return cls(variables, terms)

    # ---- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_one(self) -> bool:
        nv = len(self.vars)
        return self.terms == {(0,) * nv: _ONE}

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return _ZERO
        if not self.is_constant():
            raise DomainError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable. The zero poly has degree -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        vi = self.vars.index(var)
        return max(e[vi] for e in self.terms)

    def leading_term(self) -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise DomainError("the zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending graded-lex order (canonical output order)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # ---- ring operations ----------------------------------------------

    def _check_same_ring(self, other: "MPoly"):
        if self.vars != other.vars:
            raise DomainError(
                f"variable lists differ: {self.vars} vs {other.vars}")

    def _lift(self, other):
        if isinstance(other, MPoly):
            self._check_same_ring(other)
            return other
        if isinstance(other, (int, Fraction, str)):
            return MPoly.constant(self.vars, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in o.terms.items():
            s = terms.get(exps, _ZERO) + c
            if s:
                terms[exps] = s
            elif exps in terms:
                del terms[exps]
        out = MPoly.__new__(MPoly)
        out.vars, out.terms, out._hash = self.vars, terms, None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly.__new__(MPoly)
        out.vars = self.vars
        out.terms = {e: -c for e, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[Exponents, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prev = terms.get(key)
                if prev is None:
                    terms[key] = ca * cb
                else:
                    s = prev + ca * cb
                    if s:
                        terms[key] = s
                    else:
                        del terms[key]
        out = MPoly.__new__(MPoly)
        out.vars, out.terms, out._hash = self.vars, terms, None
        return out

    __rmul__ = __mul__

    def scale(self, c) -> "MPoly":
        c = as_fraction(c)
        out = MPoly.__new__(MPoly)
        out.vars = self.vars
        out.terms = {} if not c else {e: v * c for e, v in self.terms.items()}
        out._hash = None
        return out

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("polynomial powers must be nonnegative integers")
        result = MPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # ---- structure ----------------------------------------------------

    def coefficient_in(self, var: str, k: int) -> "MPoly":
        """Coefficient of var**k, as a polynomial in the same ring with var absent."""
        vi = self.vars.index(var)
        terms = {}
        for exps, c in self.terms.items():
            if exps[vi] == k:
                terms[exps[:vi] + (0,) + exps[vi + 1:]] = c
        return MPoly(self.vars, terms)

    def as_univariate(self, var: str) -> dict[int, "MPoly"]:
        """View as a polynomial in `var`: map exponent -> coefficient poly."""
        vi = self.vars.index(var)
        out: dict[int, dict[Exponents, Fraction]] = {}
        for exps, c in self.terms.items():
            k = exps[vi]
            out.setdefault(k, {})[exps[:vi] + (0,) + exps[vi + 1:]] = c
        result = {}
        for k, terms in out.items():
            p = MPoly.__new__(MPoly)
            p.vars, p.terms, p._hash = self.vars, terms, None
            result[k] = p
        return result

    def restrict(self, variables) -> "MPoly":
        """Reinterpret over a sub-tuple of variables; dropped ones must not occur."""
        variables = tuple(variables)
        positions = []
        for v in variables:
            if v not in self.vars:
                raise DomainError(f"{v!r} is not among variables {self.vars}")
            positions.append(self.vars.index(v))
        kept = set(positions)
        terms = {}
        for exps, c in self.terms.items():
            for i, e in enumerate(exps):
                if e and i not in kept:
                    raise DomainError(
                        f"cannot drop variable {self.vars[i]!r}: it occurs in {self}")
            terms[tuple(exps[i] for i in positions)] = c
        return MPoly(variables, terms)

    def extend(self, variables) -> "MPoly":
        """Reinterpret over a larger variable tuple containing the current one."""
        variables = tuple(variables)
        index = []
        for v in self.vars:
            if v not in variables:
                raise DomainError(f"target variables {variables} lack {v!r}")
            index.append(variables.index(v))
        nv = len(variables)
        terms = {}
        for exps, c in self.terms.items():
            key = [0] * nv
            for pos, e in zip(index, exps):
                key[pos] = e
            terms[tuple(key)] = c
        return MPoly(variables, terms)

    def subs(self, variables, images: dict) -> "MPoly":
        """Substitute variables by polynomials over a new variable tuple.

        Variables not in `images` are carried over by name and must exist in
        the target tuple.  Image values may be MPoly over `variables` or
        exact scalars.
        """
        variables = tuple(variables)
        table: dict[str, MPoly] = {}
        for name in self.vars:
            if name in images:
                img = images[name]
                if not isinstance(img, MPoly):
                    img = MPoly.constant(variables, img)
                elif img.vars != variables:
                    raise DomainError(
                        f"image of {name!r} lives over {img.vars}, not {variables}")
                table[name] = img
            else:
                table[name] = MPoly.variable(variables, name)
        powers: dict[str, list[MPoly]] = {
            name: [MPoly.constant(variables, 1)] for name in self.vars}
        result = MPoly.zero(variables)
        for exps, c in self.terms.items():
            term = MPoly.constant(variables, c)
            for name, e in zip(self.vars, exps):
                if not e:
                    continue
                cache = powers[name]
                while len(cache) <= e:
                    cache.append(cache[-1] * table[name])
                term = term * cache[e]
            result = result + term
        return result

    def eval_exact(self, values: dict[str, Fraction]) -> Fraction:
        point = [as_fraction(values[v]) for v in self.vars]
        total = _ZERO
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    def eval_numeric(self, values: dict[str, complex]) -> complex:
        point = [complex(values[v]) for v in self.vars]
        total = 0j
        for exps, c in self.terms.items():
            term = complex(c)
            for x, e in zip(point, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    # ---- calculus -----------------------------------------------------

    def derivative(self, var: str) -> "MPoly":
        vi = self.vars.index(var)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[vi]
            if e:
                terms[exps[:vi] + (e - 1,) + exps[vi + 1:]] = c * e
        return MPoly(self.vars, terms)

    def antiderivative(self, var: str) -> "MPoly":
        vi = self.vars.index(var)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[vi]
            terms[exps[:vi] + (e + 1,) + exps[vi + 1:]] = c / (e + 1)
        return MPoly(self.vars, terms)

    # ---- normal forms --------------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational c with self/c integer-coefficient and coprime."""
        if not self.terms:
            return _ZERO
        num = 0
        den = 1
        for c in self.terms.values():
            num = _int_gcd(num, c.numerator)
            den = den * c.denominator // _int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_int(self) -> "MPoly":
        """Divide out the rational content: integer coefficients with gcd 1."""
        if not self.terms:
            return self
        return self.scale(1 / self.rational_content())

    def sign_normalized(self) -> "MPoly":
        """Flip sign so the graded-lex leading coefficient is positive."""
        if not self.terms:
            return self
        return -self if self.leading_coefficient() < 0 else self

    # ---- presentation ---------------------------------------------------

    def _format_monomial(self, exps: Exponents) -> str:
        parts = []
        for v, e in zip(self.vars, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            mono = self._format_monomial(exps)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"MPoly({self})"


# ---- division ----------------------------------------------------------


def try_div(f: MPoly, g: MPoly) -> MPoly | None:
    """Exact quotient f/g, or None when g does not divide f."""
    f._check_same_ring(g)
    if g.is_zero():
        raise DomainError("division by the zero polynomial")
    if f.is_zero():
        return f
    if g.is_constant():
        return f.scale(1 / g.constant_value())
    ge, gc = g.leading_term()
    rem = dict(f.terms)
    quot: dict[Exponents, Fraction] = {}
    gterms = g.terms
    while rem:
        exps = max(rem, key=grlex_key)
        diff = tuple(a - b for a, b in zip(exps, ge))
        if any(d < 0 for d in diff):
            return None
        c = rem[exps] / gc
        quot[diff] = c
        for e2, c2 in gterms.items():
            key = tuple(a + b for a, b in zip(diff, e2))
            s = rem.get(key, _ZERO) - c * c2
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return MPoly(f.vars, quot)


def exact_div(f: MPoly, g: MPoly) -> MPoly:
    q = try_div(f, g)
    if q is None:
        raise DomainError(f"({f}) is not divisible by ({g})")
    return q


def poly_divmod_y(a: MPoly, b: MPoly, var: str | None = None) -> tuple[MPoly, MPoly]:
    """Division with remainder by a polynomial monic in the fiber variable.

    `var` defaults to the last variable.  Returns (q, rem) with
    a = q*b + rem and deg_var(rem) < deg_var(b).
    """
    a._check_same_ring(b)
    var = var if var is not None else a.vars[-1]
    d = b.degree(var)
    if d < 1:
        raise DomainError(f"divisor must have positive degree in {var!r}")
    if not b.coefficient_in(var, d).is_one():
        raise DomainError(f"divisor is not monic in {var!r}: {b}")
    bmap = b.as_univariate(var)
    rmap = a.as_univariate(var)
    qmap: dict[int, MPoly] = {}
    while rmap:
        k = max(rmap)
        if k < d:
            break
        c = rmap.pop(k)
        qmap[k - d] = qmap.get(k - d, MPoly.zero(a.vars)) + c
        for j, bj in bmap.items():
            if j == d:
                continue
            key = k - d + j
            s = rmap.get(key, MPoly.zero(a.vars)) - c * bj
            if s.is_zero():
                rmap.pop(key, None)
            else:
                rmap[key] = s
    q = MPoly.from_univariate(a.vars, var, qmap)
    rem = MPoly.from_univariate(a.vars, var, rmap)
    return q, rem


# ---- gcd ----------------------------------------------------------------


def _active_vars(f: MPoly, g: MPoly) -> list[int]:
    used = [0] * len(f.vars)
    for p in (f, g):
        for exps in p.terms.keys():
            for i, e in enumerate(exps):
                if e:
                    used[i] = 1
    return [i for i, u in enumerate(used) if u]


def _gcd_int_lists(a: list[int], b: list[int]) -> list[int]:
    """Primitive PRS gcd for dense integer coefficient lists (ascending)."""

    def strip(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def content(c):
        g = 0
        for x in c:
            g = _int_gcd(g, x)
        return g or 1

    def primitive(c):
        g = content(c)
        return [x // g for x in c]

    def pseudo_rem(u, v):
        u = list(u)
        dv = len(v) - 1
        lv = v[-1]
        while len(u) - 1 >= dv and u:
            du = len(u) - 1
            lu = u[-1]
            shift = du - dv
            u = [x * lv for x in u]
            for i, vc in enumerate(v):
                u[i + shift] -= lu * vc
            strip(u)
            if not u:
                break
        return u

    a, b = strip(list(a)), strip(list(b))
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = pseudo_rem(a, b)
        if not r:
            return primitive(b)
        if len(r) == 1:
            return [1]
        a, b = b, primitive(r)


def _gcd_univariate(f: MPoly, g: MPoly, vi: int) -> MPoly:
    var = f.vars[vi]
    fi = f.primitive_int()
    gi = g.primitive_int()

    def to_list(p):
        out = [0] * (p.degree(var) + 1)
        for exps, c in p.terms.items():
            out[exps[vi]] = c.numerator
        return out

    coeffs = _gcd_int_lists(to_list(fi), to_list(gi))
    terms = {}
    nv = len(f.vars)
    for k, c in enumerate(coeffs):
        if c:
            key = tuple(k if i == vi else 0 for i in range(nv))
            terms[key] = Fraction(c)
    return MPoly(f.vars, terms)


def _content_in(f: MPoly, vi: int) -> MPoly:
    var = f.vars[vi]
    coeffs = list(f.as_univariate(var).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd_rec(g, c)
    if g.is_constant():
        return MPoly.constant(f.vars, 1)
    return g.primitive_int().sign_normalized()


def _pseudo_rem_in(a: MPoly, b: MPoly, vi: int) -> MPoly:
    var = a.vars[vi]
    db = b.degree(var)
    lb = b.coefficient_in(var, db)
    r = a
    while not r.is_zero():
        dr = r.degree(var)
        if dr < db:
            break
        lr = r.coefficient_in(var, dr)
        shifted = b * lr * MPoly.variable(a.vars, var) ** (dr - db)
        r = r * lb - shifted
    return r


def _gcd_rec(f: MPoly, g: MPoly) -> MPoly:
    """gcd of nonzero integer-primitive polynomials, up to sign."""
    active = _active_vars(f, g)
    if not active:
        return MPoly.constant(f.vars, 1)
    if len(active) == 1:
        return _gcd_univariate(f, g, active[0])
    vi = active[-1]
    var = f.vars[vi]
    df, dg = f.degree(var), g.degree(var)
    if df == 0:
        return _gcd_rec(f, _content_in(g, vi))
    if dg == 0:
        return _gcd_rec(_content_in(f, vi), g)
    cf = _content_in(f, vi)
    cg = _content_in(g, vi)
    pf = exact_div(f, cf) if not cf.is_one() else f
    pg = exact_div(g, cg) if not cg.is_one() else g
    c = MPoly.constant(f.vars, 1)
    if not (cf.is_one() or cg.is_one()):
        c = _gcd_rec(cf, cg)
    if pf.degree(var) < pg.degree(var):
        pf, pg = pg, pf
    a, b = pf, pg
    while True:
        r = _pseudo_rem_in(a, b, vi)
        if r.is_zero():
            tail = b
            break
        if r.degree(var) == 0:
            tail = MPoly.constant(f.vars, 1)
            break
        cr = _content_in(r, vi)
        r = exact_div(r, cr) if not cr.is_one() else r
        a, b = b, r.primitive_int()
    if not tail.is_constant():
        ct = _content_in(tail, vi)
        if not ct.is_one():
            tail = exact_div(tail, ct)
    return (c * tail).primitive_int()


def poly_gcd(f: MPoly, g: MPoly) -> MPoly:
    """Full multivariate gcd, normalized integer-primitive with positive lead.

    gcd with the zero polynomial returns the other argument normalized;
    gcd(0, 0) is undefined and raises.
    """
    f._check_same_ring(g)
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.primitive_int().sign_normalized()
    if g.is_zero():
        return f.primitive_int().sign_normalized()
    h = _gcd_rec(f.primitive_int(), g.primitive_int())
    return h.primitive_int().sign_normalized()


def poly_gcd_fiber(f: MPoly, g: MPoly, var: str | None = None) -> MPoly:
    """gcd as univariate polynomials in the fiber variable over Q(base).

    Pure base-variable content is treated as a unit and stripped.  The
    result is monic in `var` when its leading fiber coefficient is a
    rational constant, otherwise it is the primitive integer-coefficient
    representative with positive leading sign.  Returns 1 exactly when the
    arguments are coprime in the fiber variable.
    """
    f._check_same_ring(g)
    var = var if var is not None else f.vars[-1]
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    g0 = poly_gcd(f, g)
    d = g0.degree(var)
    if d <= 0:
        return MPoly.constant(f.vars, 1)
    # strip content that does not involve the fiber variable
    cont = _content_in(g0, g0.vars.index(var))
    if not cont.is_one():
        g0 = exact_div(g0, cont)
    lead = g0.coefficient_in(var, g0.degree(var))
    if lead.is_constant():
        return g0.scale(1 / lead.constant_value())
    return g0.primitive_int().sign_normalized()


def poly_lcm(f: MPoly, g: MPoly) -> MPoly:
    if f.is_zero() or g.is_zero():
        return MPoly.zero(f.vars)
    return (f * exact_div(g, poly_gcd(f, g))).primitive_int().sign_normalized()
