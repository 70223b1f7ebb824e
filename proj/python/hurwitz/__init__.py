"""Exact Hurwitz and Schur stability tests for real polynomials.

Coefficients are given in ascending order (constant term first) as ints,
strings such as "3/2" or "0.125", or fractions.Fraction values. Exact results
come back as Fraction.
"""

from ._core import (
    HurwitzError,
    IndeterminateError,
    __version__,
    analyze,
    bilinear_substitute,
    cauer_expansion,
    even_part,
    find_roots,
    hurwitz_by_reactance,
    ladder_to_impedance,
    odd_part,
    routh_array,
    schur_stable_via_bilinear,
    synthesize_lc_ladder,
    theorem2_check,
)

__all__ = [
    "HurwitzError",
    "IndeterminateError",
    "__version__",
    "analyze",
    "bilinear_substitute",
    "cauer_expansion",
    "even_part",
    "find_roots",
    "hurwitz_by_reactance",
    "ladder_to_impedance",
    "odd_part",
    "routh_array",
    "schur_stable_via_bilinear",
    "synthesize_lc_ladder",
    "theorem2_check",
]
