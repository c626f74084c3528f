"""Exact polynomial, rational function, and linear algebra layer."""

from .linalg import (
    FracMatrix,
    det_poly_grid,
    determinant,
    kernel_vector,
    solve_linear,
    sylvester_resultant,
)
from .poly import (
    MPoly,
    as_fraction,
    exact_div,
    poly_divmod_y,
    poly_gcd,
    poly_gcd_fiber,
    poly_lcm,
    try_div,
)
from .ratfunc import RatFunc

__all__ = [
    "FracMatrix",
    "MPoly",
    "RatFunc",
    "as_fraction",
    "det_poly_grid",
    "determinant",
    "exact_div",
    "kernel_vector",
    "poly_divmod_y",
    "poly_gcd",
    "poly_gcd_fiber",
    "poly_lcm",
    "solve_linear",
    "sylvester_resultant",
    "try_div",
]
