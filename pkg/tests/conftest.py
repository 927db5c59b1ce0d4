"""Shared fixtures and helpers for the test suite."""

import random
from fractions import Fraction

import pytest

from liftcert import MultiPoly, PairConfig, RationalCenter, parse_polynomial


def P(text, names=("x", "y")):
    """Shorthand: parse an expression with the given variable order."""
    return parse_polynomial(text, list(names))


def gauss_config(p, n):
    """The all-Gauss configuration: every pair is (center 0, delta 0)."""
    return PairConfig([RationalCenter(Fraction(0), Fraction(0))] * n, p)


def rc_config(p, deltas):
    """Rational centers at 0 with the given deltas."""
    return PairConfig(
        [RationalCenter(Fraction(0), Fraction(d)) for d in deltas], p
    )


def random_poly(rng, nvars, max_deg, max_terms=6, coeff_bound=9,
                allow_fractions=False):
    """A random nonzero sparse polynomial with small integer (or
    rational) coefficients."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exps = tuple(rng.randint(0, max_deg) for _ in range(nvars))
            num = rng.randint(-coeff_bound, coeff_bound)
            if allow_fractions:
                c = Fraction(num, rng.randint(1, 4))
            else:
                c = Fraction(num)
            if c:
                terms[exps] = terms.get(exps, Fraction(0)) + c
        f = MultiPoly(nvars, terms)
        if not f.is_zero:
            return f


@pytest.fixture
def rng():
    return random.Random(20260823)
