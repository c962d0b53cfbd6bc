import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcf_forge import (
    InsufficientPrecision,
    agree_to_digits,
    central_binomial,
    rational_to_real,
    working_precision,
)
from gcf_forge.numerics import PRECISION_ENV_VAR, real_from_decimal, real_reciprocal

from oracles import eight_over_pi_squared, fraction_decimal

rationals = st.fractions(
    min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**6
)


class TestRationalToReal:
    def test_dyadic_is_exact(self):
        v = rational_to_real(Fraction(1, 2), 64)
        assert v.to_fraction() == Fraction(1, 2)
        assert v.precision_bits == 64

    def test_six_sevenths_within_bound(self):
        q = Fraction(6, 7)
        v = rational_to_real(q, 64)
        assert abs(v.to_fraction() - q) <= Fraction(1, 2**63) * q
        # long-division oracle for the decimal expansion
        assert v.to_decimal(18).startswith(fraction_decimal(q, 12))

    def test_zero(self):
        assert rational_to_real(Fraction(0), 64).to_fraction() == 0

    def test_rejects_tiny_precision(self):
        with pytest.raises(ValueError):
            rational_to_real(Fraction(1, 3), 7)

    @given(q=rationals, bits=st.integers(min_value=8, max_value=128))
    def test_relative_error_bound(self, q, bits):
        v = rational_to_real(q, bits)
        assert abs(v.to_fraction() - q) <= Fraction(1, 2 ** (bits - 1)) * abs(q)

    @given(x=rationals, y=rationals, bits=st.integers(min_value=16, max_value=96))
    def test_subtraction_consistent_with_exact(self, x, y, bits):
        xr = rational_to_real(x, bits).to_fraction()
        yr = rational_to_real(y, bits).to_fraction()
        combined = Fraction(1, 2 ** (bits - 1)) * (abs(x) + abs(y))
        assert abs((xr - yr) - (x - y)) <= combined

    @given(q=rationals, bits=st.integers(min_value=8, max_value=200))
    def test_decimal_round_trip_is_exact(self, q, bits):
        v = rational_to_real(q, bits)
        again = real_from_decimal(v.to_decimal(), bits)
        assert again.to_fraction() == v.to_fraction()


class TestAgreeToDigits:
    def test_against_pi_reference(self):
        lhs = real_from_decimal("0.8105694691", 80)
        rhs = rational_to_real(eight_over_pi_squared(40), 80)
        assert agree_to_digits(lhs, rhs, 9)

    def test_reflexive(self):
        x = rational_to_real(Fraction(355, 113), 64)
        assert agree_to_digits(x, x, 15)

    def test_gap_beyond_tolerance(self):
        x = real_from_decimal("0.5", 64)
        y = real_from_decimal("0.6", 64)
        assert not agree_to_digits(x, y, 2)

    def test_insufficient_precision(self):
        x = rational_to_real(Fraction(1, 3), 32)
        y = rational_to_real(Fraction(1, 3), 80)
        with pytest.raises(InsufficientPrecision):
            agree_to_digits(x, y, 15)  # 15 digits need 50 bits, x has 32

    def test_information_bound_is_the_cutoff(self):
        # 70 digits need 233 bits; 256-bit operands are enough
        x = rational_to_real(Fraction(1, 3), 256)
        assert agree_to_digits(x, x, 70)

    def test_rejects_nonpositive_digits(self):
        x = rational_to_real(Fraction(1), 64)
        with pytest.raises(ValueError):
            agree_to_digits(x, x, 0)


class TestCentralBinomial:
    @pytest.mark.parametrize("m,expected", [(0, 1), (2, 6), (5, 252)])
    def test_known_values(self, m, expected):
        assert central_binomial(m) == expected

    def test_factorial_identity_up_to_200(self):
        for m in range(201):
            assert (
                central_binomial(m) * math.factorial(m) ** 2 == math.factorial(2 * m)
            )

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            central_binomial(-1)


def test_working_precision_policy(monkeypatch):
    monkeypatch.delenv(PRECISION_ENV_VAR, raising=False)
    assert working_precision(50) == 50 * 4 + 64
    monkeypatch.setenv(PRECISION_ENV_VAR, "333")
    assert working_precision(50) == 333
    monkeypatch.setenv(PRECISION_ENV_VAR, "4")
    assert working_precision(50) == 8


def test_reciprocal_round_trips():
    x = rational_to_real(Fraction(8, 11), 128)
    inv = real_reciprocal(x)
    product = x.to_fraction() * inv.to_fraction()
    assert abs(product - 1) <= Fraction(1, 2**126)
