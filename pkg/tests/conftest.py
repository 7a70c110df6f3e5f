"""Shared hypothesis strategies and random generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from sqrat.poly import RatFunc, UPoly

small_fractions = st.builds(Fraction, st.integers(-9, 9),
                            st.integers(1, 4))


def upolys(max_degree: int = 6, nonzero: bool = False) -> st.SearchStrategy:
    base = st.lists(small_fractions, min_size=0,
                    max_size=max_degree + 1).map(UPoly)
    if nonzero:
        base = base.filter(lambda p: not p.is_zero)
    return base


def ratfuncs(max_degree: int = 5, nonzero: bool = False) -> st.SearchStrategy:
    num = upolys(max_degree, nonzero=nonzero)
    den = upolys(max_degree, nonzero=True)
    return st.builds(RatFunc, num, den)


def random_poly(rng: random.Random, max_degree: int = 6,
                bound: int = 9) -> UPoly:
    """Random nonzero polynomial with integer coefficients in [-bound, bound]."""
    while True:
        degree = rng.randint(0, max_degree)
        coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
        coeffs.append(rng.choice([c for c in range(-bound, bound + 1) if c]))
        p = UPoly(coeffs)
        if not p.is_zero:
            return p


def random_factored_poly(rng: random.Random, max_factors: int = 3,
                         bound: int = 5) -> UPoly:
    """Product of monic linear/quadratic factors, the scan generator's shape."""
    out = UPoly.one()
    for _ in range(rng.randint(1, max_factors)):
        if rng.random() < 0.5:
            out = out * UPoly((rng.randint(-bound, bound), 1))
        else:
            out = out * UPoly((rng.randint(-bound, bound),
                               rng.randint(-bound, bound), 1))
    return out
