"""Self-check suites: exact identities plus the numeric oracle, seeded.

Each suite draws its own deterministic family from one Random seed, so a
report is a pure function of (seed, tolerance, counts).  The CLI exposes
these through the `verify` subcommand; the acceptance tests run the same
code with larger families.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from random import Random

from .algebra import FracMatrix, MPoly, RatFunc, determinant
from .currents import support_discriminant
from .errors import DomainError
from .radon import closedness_check, radon
from .reconstruct import reconstruct
from .residues import (
    RationalForm1D,
    contour_oracle,
    pointwise_residues,
    residue_sum,
)
from .sampling import random_current, random_rational_point, random_weighted_current
from .traces import hankel, recurrence_check, traces

DEFAULT_SEED = 1729
DEFAULT_TOLERANCE = 1e-8


def thread_cap() -> int:
    """Worker cap from RESIDUAL_TRACE_THREADS; 0 or unset picks one per CPU."""
    raw = os.environ.get("RESIDUAL_TRACE_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"RESIDUAL_TRACE_THREADS must be an integer, got {raw!r}")
    if cap < 0:
        raise DomainError("RESIDUAL_TRACE_THREADS must be nonnegative")
    if cap == 0:
        return min(8, os.cpu_count() or 1)
    return cap


def _mixed_family(rng: Random, count: int):
    """count currents, two thirds with n=1 (d <= 5), one third with n=2 (d <= 3)."""
    split = count - count // 3
    family = [random_current(rng, n=1, max_degree=5, coeff_degree=3)
              for _ in range(split)]
    family += [random_current(rng, n=2, max_degree=3, coeff_degree=2)
               for _ in range(count - split)]
    return family


def check_roundtrip(seed: int, count: int = 40) -> dict:
    """traces then reconstruct must reproduce every current exactly."""
    rng = Random(seed)
    family = _mixed_family(rng, count)
    failures = []
    for idx, c in enumerate(family):
        t = traces(c, 2 * c.degree + 2)
        report = reconstruct(t, c.degree)
        if report.current != c or report.residual_violations != 0:
            failures.append(idx)
    return {"name": "roundtrip-inversion", "instances": len(family),
            "failures": len(failures), "failed_indices": failures,
            "pass": not failures}


def check_recurrence(seed: int, count: int = 40) -> dict:
    """The monic recurrence annihilates every trace window up to k = 2d."""
    rng = Random(seed)
    family = _mixed_family(rng, count)
    failures = []
    for idx, c in enumerate(family):
        d = c.degree
        t = traces(c, 3 * d + 1)
        if recurrence_check(t, c.p):
            failures.append(idx)
    return {"name": "trace-recurrence", "instances": len(family),
            "failures": len(failures), "failed_indices": failures,
            "pass": not failures}


def check_hankel_identity(seed: int, count: int = 30) -> dict:
    """Hankel determinant of point-mass data, plus the anti-ordered sign twin.

    For a current with simple fiber roots y_i and weights f_i,
    det H_d = prod_{i<j} (y_i - y_j)^2 * prod_i f_i, and reversing the rows
    of H_d multiplies the determinant by (-1)^(d(d-1)/2).
    """
    rng = Random(seed)
    failures = []
    instances = 0
    for idx in range(count):
        d = rng.randint(1, 4)
        n = 1 if idx % 3 else 2
        current, points = random_weighted_current(rng, n=n, count=d)
        instances += 1
        d = current.degree
        t = traces(current, 2 * d + 1)
        h = hankel(t, d)
        det_h = determinant(h)
        expected = RatFunc.one(t.vars)
        roots = [root for root, _ in points]
        for i in range(len(roots)):
            for j in range(i + 1, len(roots)):
                diff = roots[i] - roots[j]
                expected = expected * diff * diff
        for _, weight in points:
            expected = expected * weight
        anti = FracMatrix([[t[d + i - j - 1] for j in range(d)] for i in range(d)])
        det_anti = determinant(anti)
        sign = Fraction(-1) ** ((d * (d - 1) // 2) % 2)
        ok = det_h == expected and det_anti == det_h * sign
        if not ok:
            failures.append(idx)
    return {"name": "hankel-determinant", "instances": instances,
            "failures": len(failures), "failed_indices": failures,
            "pass": not failures}


def check_closedness(seed: int, count: int = 25) -> dict:
    """d/db_i u_{k+n} = d/da_i u_{k+n-1} exactly, k up to 2d."""
    rng = Random(seed)
    split = count - count // 3
    family = [random_current(rng, n=1, max_degree=4, coeff_degree=2)
              for _ in range(split)]
    family += [random_current(rng, n=2, max_degree=2, coeff_degree=1)
               for _ in range(count - split)]
    failures = []
    for idx, c in enumerate(family):
        k_top = 2 * c.degree
        u = radon(c, k_top + c.n)
        if closedness_check(u, range(k_top + 1)):
            failures.append(idx)
    return {"name": "radon-closedness", "instances": len(family),
            "failures": len(failures), "failed_indices": failures,
            "pass": not failures}


def _oracle_one(args) -> float:
    form, point = args
    values = [point[v] for v in form.base_vars]
    try:
        exact = residue_sum(form).eval_numeric(
            {v: complex(x) for v, x in point.items()})
        quad = contour_oracle(form, values)
        psum = sum(res for _, res in pointwise_residues(form, values))
    except DomainError:
        return float("inf")
    return max(abs(quad - exact), abs(psum - exact))


def check_numeric_oracle(seed: int, tolerance: float = DEFAULT_TOLERANCE,
                         count: int = 25) -> dict:
    """Exact residue sums against contour quadrature and pointwise residues.

    Base points are rational, drawn away from the discriminant zero set so
    the pointwise path is defined; comparisons are absolute error.
    """
    rng = Random(seed)
    jobs = []
    drawn = 0
    while drawn < count:
        n = 1 if drawn % 3 else 2
        c = random_current(rng, n=n, max_degree=4 if n == 1 else 3,
                           coeff_degree=2, max_abs=3)
        disc = support_discriminant(c)
        point = None
        for _ in range(60):
            cand = random_rational_point(rng, n, span=4)
            val = disc.eval_exact(cand)
            # stay clearly away from colliding fiber poles, for conditioning
            if abs(val) >= Fraction(1, 100):
                point = cand
                break
        if point is None:
            continue
        k = rng.randint(0, c.degree)
        yk = c.r * MPoly.variable(c.p.vars, c.fiber) ** k
        form = RationalForm1D(yk, c.p)
        jobs.append((form, point))
        drawn += 1
    cap = thread_cap()
    if cap > 1:
        with ThreadPoolExecutor(max_workers=cap) as pool:
            errors = list(pool.map(_oracle_one, jobs))
    else:
        errors = [_oracle_one(j) for j in jobs]
    failures = [i for i, e in enumerate(errors) if not (e <= tolerance)]
    worst = max(errors) if errors else 0.0
    return {"name": "numeric-oracle", "instances": len(jobs),
            "failures": len(failures), "failed_indices": failures,
            "max_abs_error": worst, "tolerance": tolerance,
            "pass": not failures}


SUITES = ("roundtrip", "recurrence", "hankel", "closedness", "oracle")


def verify_report(seed: int = DEFAULT_SEED, tolerance: float = DEFAULT_TOLERANCE,
                  counts: dict | None = None) -> dict:
    """Run all five suites and aggregate one JSON-ready report."""
    counts = counts or {}
    suites = [
        check_roundtrip(seed, counts.get("roundtrip", 40)),
        check_recurrence(seed + 1, counts.get("recurrence", 40)),
        check_hankel_identity(seed + 2, counts.get("hankel", 30)),
        check_closedness(seed + 3, counts.get("closedness", 25)),
        check_numeric_oracle(seed + 4, tolerance, counts.get("oracle", 25)),
    ]
    return {
        "seed": seed,
        "tolerance": tolerance,
        "suites": suites,
        "pass": all(s["pass"] for s in suites),
    }


def human_summary(report: dict) -> str:
    lines = []
    for s in report["suites"]:
        status = "PASS" if s["pass"] else "FAIL"
        extra = f", {s['failures']} failed" if s["failures"] else ""
        if "max_abs_error" in s:
            extra += f", max abs error {s['max_abs_error']:.3g}"
        lines.append(f"{status} {s['name']} ({s['instances']} instances{extra})")
    overall = "PASS" if report["pass"] else "FAIL"
    lines.append(f"{overall} overall (seed {report['seed']})")
    return "\n".join(lines)
