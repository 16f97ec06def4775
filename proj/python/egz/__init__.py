"""Deterministic O(n log n) zero-sum subsequence solver (Erdos-Ginzburg-Ziv).

Given n and 2n-1 integers, ``egz`` returns a 0/1 mask selecting exactly n of
them whose sum is divisible by n.
"""

from ._egz import (
    MAX_MODULUS,
    check_selection,
    egz,
    egz_composite,
    egz_prime,
    find_t,
    generate,
    mod_inverse,
    reduce,
    smallest_prime_factor,
    solve_exhaustive,
    solve_prime_quadratic,
)

__all__ = [
    "MAX_MODULUS",
    "check_selection",
    "egz",
    "egz_composite",
    "egz_prime",
    "find_t",
    "generate",
    "mod_inverse",
    "reduce",
    "smallest_prime_factor",
    "solve_exhaustive",
    "solve_prime_quadratic",
]
