"""Canonical JSON encoding of the package's data types.

Output is deterministic: keys sorted, compact separators, polynomial terms
in descending graded-lex order, coefficients as reduced fraction strings,
one trailing newline.  Parsing a canonical document and printing it again
reproduces the bytes; parsing any valid document yields the exact values.

Polynomial: {"vars": ["x", "y"], "terms": [{"coeff": "-3/2", "exps": [1, 2]}]}
Rational function: {"num": <poly>, "den": <poly>}
Current: {"n": 1, "P": <poly>, "r": <poly>}  or  {"n": 1, "zero": true}
Traces: {"u": [<ratfunc>, ...]}
Series batch: {"series": [{"x0": "1/2", "coeffs": ["1", "0", ...]}, ...]}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import MPoly, RatFunc
from .currents import ResidualCurrent, ZeroCurrent, validate
from .errors import SchemaError
from .reconstruct import SeriesSample
from .traces import TraceSequence

__all__ = [
    "canonical_dumps",
    "parse_fraction",
    "poly_to_obj", "poly_from_obj",
    "ratfunc_to_obj", "ratfunc_from_obj",
    "current_to_obj", "current_from_obj",
    "traces_to_obj", "traces_from_obj",
    "series_from_obj",
    "loads",
]


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str, where: str = "document"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(where, f"not valid JSON ({exc.msg} at char {exc.pos})") from None


def parse_fraction(value, field: str) -> Fraction:
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(field, f"not a fraction string: {value!r}") from None
    if isinstance(value, int):
        return Fraction(value)
    raise SchemaError(field, f"expected a fraction string, got {type(value).__name__}")


def _format_fraction(c: Fraction) -> str:
    return str(c)


# ---- polynomials ----------------------------------------------------------


def poly_to_obj(p: MPoly) -> dict:
    return {
        "vars": list(p.vars),
        "terms": [
            {"coeff": _format_fraction(c), "exps": list(exps)}
            for exps, c in p.sorted_terms()
        ],
    }


def poly_from_obj(obj, field: str = "poly") -> MPoly:
    if not isinstance(obj, dict):
        raise SchemaError(field, "expected an object with 'vars' and 'terms'")
    if "vars" not in obj:
        raise SchemaError(f"{field}.vars", "missing")
    if "terms" not in obj:
        raise SchemaError(f"{field}.terms", "missing")
    variables = obj["vars"]
    if (not isinstance(variables, list) or not all(isinstance(v, str) for v in variables)
            or len(set(variables)) != len(variables)):
        raise SchemaError(f"{field}.vars", "must be a list of distinct variable names")
    terms_obj = obj["terms"]
    if not isinstance(terms_obj, list):
        raise SchemaError(f"{field}.terms", "must be a list")
    seen = set()
    pairs = []
    for i, t in enumerate(terms_obj):
        here = f"{field}.terms[{i}]"
        if not isinstance(t, dict) or "coeff" not in t or "exps" not in t:
            raise SchemaError(here, "expected an object with 'coeff' and 'exps'")
        extra = set(t) - {"coeff", "exps"}
        if extra:
            raise SchemaError(here, f"unknown keys {sorted(extra)}")
        c = parse_fraction(t["coeff"], f"{here}.coeff")
        if c == 0:
            raise SchemaError(f"{here}.coeff", "zero terms are not stored")
        exps = t["exps"]
        if (not isinstance(exps, list) or len(exps) != len(variables)
                or not all(isinstance(e, int) and e >= 0 for e in exps)):
            raise SchemaError(
                f"{here}.exps",
                f"must be a list of {len(variables)} nonnegative integers")
        key = tuple(exps)
        if key in seen:
            raise SchemaError(f"{here}.exps", f"duplicate exponent vector {exps}")
        seen.add(key)
        pairs.append((key, c))
    return MPoly(variables, pairs)


# ---- rational functions ---------------------------------------------------


def ratfunc_to_obj(f: RatFunc) -> dict:
    return {"num": poly_to_obj(f.num), "den": poly_to_obj(f.den)}


def ratfunc_from_obj(obj, field: str = "ratfunc") -> RatFunc:
    if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
        raise SchemaError(field, "expected an object with 'num' and 'den'")
    num = poly_from_obj(obj["num"], f"{field}.num")
    den = poly_from_obj(obj["den"], f"{field}.den")
    if den.is_zero():
        raise SchemaError(f"{field}.den", "denominator is zero")
    return RatFunc(num, den)


# ---- currents -------------------------------------------------------------


def current_to_obj(c: ResidualCurrent | ZeroCurrent) -> dict:
    if isinstance(c, ZeroCurrent):
        return {"n": c.n, "zero": True}
    return {"n": c.n, "P": poly_to_obj(c.p), "r": poly_to_obj(c.r)}


def current_from_obj(obj, field: str = "current") -> ResidualCurrent | ZeroCurrent:
    if not isinstance(obj, dict):
        raise SchemaError(field, "expected an object")
    if "n" not in obj:
        raise SchemaError(f"{field}.n", "missing")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError(f"{field}.n", "must be a positive integer")
    if obj.get("zero") is True:
        extra = set(obj) - {"n", "zero"}
        if extra:
            raise SchemaError(field, f"unknown keys {sorted(extra)} on a zero current")
        return ZeroCurrent(n)
    if "P" not in obj or "r" not in obj:
        raise SchemaError(field, "expected keys 'P' and 'r' (or 'zero': true)")
    p = poly_from_obj(obj["P"], f"{field}.P")
    r = poly_from_obj(obj["r"], f"{field}.r")
    if p.vars != r.vars:
        raise SchemaError(f"{field}.r", f"variables {r.vars} differ from P's {p.vars}")
    if len(p.vars) != n + 1:
        raise SchemaError(
            f"{field}.n", f"n = {n} needs {n + 1} variables, P has {len(p.vars)}")
    return validate(p, r)


# ---- traces and series ------------------------------------------------------


def traces_to_obj(t: TraceSequence) -> dict:
    return {"u": [ratfunc_to_obj(e) for e in t.entries]}


def traces_from_obj(obj, field: str = "traces") -> TraceSequence:
    if not isinstance(obj, dict) or "u" not in obj:
        raise SchemaError(field, "expected an object with key 'u'")
    u = obj["u"]
    if not isinstance(u, list) or not u:
        raise SchemaError(f"{field}.u", "must be a nonempty list")
    entries = tuple(ratfunc_from_obj(e, f"{field}.u[{i}]") for i, e in enumerate(u))
    if any(e.vars != entries[0].vars for e in entries):
        raise SchemaError(f"{field}.u", "entries live over different variable lists")
    return TraceSequence(entries=entries)


def series_from_obj(obj, field: str = "series") -> list[SeriesSample]:
    if not isinstance(obj, dict) or "series" not in obj:
        raise SchemaError(field, "expected an object with key 'series'")
    batch = obj["series"]
    if not isinstance(batch, list) or not batch:
        raise SchemaError(f"{field}.series", "must be a nonempty list")
    out = []
    for i, s in enumerate(batch):
        here = f"{field}.series[{i}]"
        if not isinstance(s, dict) or "x0" not in s or "coeffs" not in s:
            raise SchemaError(here, "expected an object with 'x0' and 'coeffs'")
        x0 = parse_fraction(s["x0"], f"{here}.x0")
        coeffs = s["coeffs"]
        if not isinstance(coeffs, list) or not coeffs:
            raise SchemaError(f"{here}.coeffs", "must be a nonempty list")
        values = tuple(
            parse_fraction(c, f"{here}.coeffs[{j}]") for j, c in enumerate(coeffs))
        out.append(SeriesSample(base_point=x0, coefficients=values))
    return out
