"""Rational parsing, primality, and the valuation value type."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftcert import INFINITY, Val, vp
from liftcert.errors import ConfigError
from liftcert.exactnum import (
    check_prime,
    format_rational,
    is_prime,
    parse_rational,
    val_min,
    vp_int,
)


class TestRationals:
    def test_parse_integer(self):
        assert parse_rational("7") == Fraction(7)

    def test_parse_fraction_reduces(self):
        assert parse_rational("6/4") == Fraction(3, 2)

    def test_format_round_trip(self):
        for text in ["0", "5", "-3", "2/7", "-9/4"]:
            assert format_rational(parse_rational(text)) == text

    def test_never_decimal(self):
        assert "/" in format_rational(Fraction(1, 3))
        assert "." not in format_rational(Fraction(1, 3))


class TestPrimes:
    def test_small_primes(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
        ]

    def test_not_prime(self):
        for n in (-2, 0, 1, 4, 9, 91):
            assert not is_prime(n)

    def test_check_prime_raises(self):
        with pytest.raises(ConfigError):
            check_prime(6)
        with pytest.raises(ConfigError):
            check_prime("3")


class TestVp:
    def test_examples(self):
        # [DERIVED] by hand: 12 = 2^2*3, 9/4 = 3^2/2^2
        assert vp(12, 2) == Val.finite(2)
        assert vp(12, 3) == Val.finite(1)
        assert vp(Fraction(9, 4), 2) == Val.finite(-2)
        assert vp(Fraction(9, 4), 3) == Val.finite(2)
        assert vp(1, 5) == Val.finite(0)

    def test_paper_normalization(self):
        # the valuation of the prime itself is 1
        for p in (2, 3, 5, 7):
            assert vp(p, p) == Val.finite(1)

    def test_zero_is_infinite(self):
        assert vp(0, 3) is INFINITY
        assert vp_int(0, 3) is INFINITY

    def test_additive_random(self, rng):
        for p in (2, 3, 5, 7):
            for _ in range(1000):
                r = Fraction(rng.randint(-50, 50) or 1, rng.randint(1, 50))
                s = Fraction(rng.randint(-50, 50) or 1, rng.randint(1, 50))
                assert vp(r * s, p) == vp(r, p) + vp(s, p)

    def test_ultrametric_random(self, rng):
        for p in (2, 3, 5):
            for _ in range(500):
                r = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
                s = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
                assert vp(r + s, p) >= val_min(vp(r, p), vp(s, p))


class TestVal:
    def test_ordering(self):
        assert Val.finite(Fraction(1, 2)) < Val.finite(1)
        assert Val.finite(100) < INFINITY
        assert not INFINITY < INFINITY
        assert INFINITY >= Val.finite(-3)

    def test_addition(self):
        assert Val.finite(1) + Val.finite(Fraction(1, 2)) == Val.finite(
            Fraction(3, 2)
        )
        assert INFINITY + Val.finite(5) is INFINITY

    def test_scale(self):
        assert Val.finite(Fraction(2, 3)).scale(3) == Val.finite(2)
        assert INFINITY.scale(2) is INFINITY
        with pytest.raises(ValueError):
            INFINITY.scale(0)
        with pytest.raises(ValueError):
            Val.finite(1).scale(-1)

    def test_min_identity(self):
        assert val_min() is INFINITY
        assert val_min(Val.finite(3), INFINITY) == Val.finite(3)

    def test_str(self):
        assert str(INFINITY) == "inf"
        assert str(Val.finite(Fraction(1, 2))) == "1/2"

    @given(
        st.fractions(max_denominator=50),
        st.fractions(max_denominator=50),
        st.fractions(max_denominator=50),
    )
    def test_min_plus_distributes(self, a, b, c):
        # min/+ laws the valuation relies on
        va, vb, vc = Val.finite(a), Val.finite(b), Val.finite(c)
        assert val_min(va, vb) + vc == val_min(va + vc, vb + vc)

    @given(st.fractions(max_denominator=20))
    def test_infinity_absorbs(self, a):
        v = Val.finite(a)
        assert v + INFINITY is INFINITY
        assert val_min(v, INFINITY) == v
