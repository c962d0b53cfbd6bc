import math
from fractions import Fraction

import pytest

from gcf_forge import (
    Coupling,
    NotConvergent,
    OutOfDomain,
    Polynomial,
    TermStream,
    ZeroDenominatorFactor,
    central_binomial_sum,
    partial_sums,
    ratio_certificate,
    sum_to_precision,
    terms,
)

from oracles import (
    close_to,
    fraction_decimal,
    ln2_fraction,
    pi_squared_over_8,
    pi_squared_over_18,
)

N = Polynomial.variable()
GEOMETRIC = Coupling(c=N, d=2 * N)  # terms 1/(2^(k+1) (k+1)), summing to ln 2


def closed_form_term(k: int) -> Fraction:
    """Independent reduction 2^(k+1) (k!)^2 / (2k+2)! via factorials."""
    return Fraction(2 ** (k + 1) * math.factorial(k) ** 2, math.factorial(2 * k + 2))


class TestTerms:
    def test_first_terms(self, quartic_coupling):
        assert terms(quartic_coupling, 3) == [
            Fraction(1),
            Fraction(1, 6),
            Fraction(2, 45),
        ]

    def test_closed_form_to_100(self, quartic_coupling):
        for k, t in enumerate(terms(quartic_coupling, 101)):
            assert t == closed_form_term(k)

    def test_partial_sums(self, quartic_coupling):
        assert partial_sums(quartic_coupling, 3) == [
            Fraction(1),
            Fraction(7, 6),
            Fraction(109, 90),
        ]

    def test_positive_terms_increasing_sums(self, quartic_coupling):
        sums = partial_sums(quartic_coupling, 200)
        assert all(t > 0 for t in terms(quartic_coupling, 200))
        assert all(s < t for s, t in zip(sums, sums[1:]))

    def test_vanishing_denominator_factor(self):
        with pytest.raises(ZeroDenominatorFactor) as err:
            TermStream(Coupling(c=N, d=N - 3))
        assert err.value.index == 3

    def test_stream_state_tracks_products(self, quartic_coupling):
        stream = TermStream(quartic_coupling)
        for _ in range(5):
            next(stream)
        c, d = quartic_coupling.c, quartic_coupling.d
        assert stream.k == 5
        assert stream.num == math.prod(c(j) for j in range(1, 6))
        assert stream.den == math.prod(d(j) for j in range(1, 7))


class TestRatioCertificate:
    def test_quartic_certificate(self, quartic_coupling):
        cert = ratio_certificate(quartic_coupling)
        assert cert.numerator == N**2 + 2 * N + 1  # (k+1)^2
        assert cert.denominator == 2 * N**2 + 7 * N + 6  # (k+2)(2k+3)
        assert cert.rho == Fraction(1, 2)
        assert cert.classification == "convergent"
        assert cert.valid_from == 0

    def test_ratio_matches_consecutive_terms(self, quartic_coupling):
        cert = ratio_certificate(quartic_coupling)
        ts = terms(quartic_coupling, 102)
        for k in range(101):
            assert ts[k + 1] / ts[k] == cert.at(k)

    def test_equal_degrees_inconclusive(self):
        cert = ratio_certificate(Coupling(c=N, d=N))
        assert cert.numerator == N + 1
        assert cert.denominator == N + 2
        assert cert.rho == 1
        assert cert.classification == "inconclusive"

    def test_degree_dominance_divergent(self):
        cert = ratio_certificate(Coupling(c=N**2, d=N))
        assert cert.rho is None
        assert cert.classification == "divergent"

    def test_negative_rho_uses_magnitude(self):
        shrinking = ratio_certificate(Coupling(c=-N, d=2 * N))
        assert shrinking.rho == Fraction(-1, 2)
        assert shrinking.classification == "convergent"
        growing = ratio_certificate(Coupling(c=-3 * N, d=N))
        assert growing.rho == -3
        assert growing.classification == "divergent"

    def test_pole_pushes_validity_start(self):
        # d(k+2) = k - 3 vanishes at k = 3, so ratios certify from k = 4 on
        cert = ratio_certificate(Coupling(c=N, d=N - 5))
        assert cert.valid_from == 4


class TestSumToPrecision:
    def test_quartic_sum_50_digits(self, quartic_coupling):
        value, used = sum_to_precision(quartic_coupling, 50)
        assert close_to(value.to_fraction(), pi_squared_over_8(60), 50)
        assert used <= 400

    def test_quartic_sum_10_digit_preview(self, quartic_coupling):
        value, _ = sum_to_precision(quartic_coupling, 10)
        assert value.to_decimal(11).startswith("1.2337005501")

    def test_geometric_family_sums_to_ln2(self):
        value, _ = sum_to_precision(GEOMETRIC, 30)
        assert close_to(value.to_fraction(), ln2_fraction(35), 30)

    def test_matches_brute_force_partial_sums(self):
        value, _ = sum_to_precision(GEOMETRIC, 30)
        brute = sum(terms(GEOMETRIC, 150), Fraction(0))
        assert abs(value.to_fraction() - brute) <= 2 * Fraction(1, 10**30)

    def test_alternating_terms(self):
        # c = -n keeps |ratio| = 1/2 but alternates term signs
        alternating = Coupling(c=-N, d=2 * N)
        value, _ = sum_to_precision(alternating, 25)
        brute = sum(terms(alternating, 120), Fraction(0))
        assert abs(value.to_fraction() - brute) <= 2 * Fraction(1, 10**25)

    def test_not_convergent_rejected(self):
        with pytest.raises(NotConvergent):
            sum_to_precision(Coupling(c=N, d=N), 10)

    def test_error_budget_is_met(self, quartic_coupling):
        # against a much finer run of the same series, exact to 10^-40
        coarse, _ = sum_to_precision(quartic_coupling, 12)
        fine = sum(terms(quartic_coupling, 250), Fraction(0))
        assert abs(coarse.to_fraction() - fine) <= Fraction(1, 10**12)


class TestCentralBinomialSum:
    def test_z2_matches_pi_squared_over_8(self):
        value = central_binomial_sum(2, 50)
        assert close_to(value.to_fraction(), pi_squared_over_8(60), 50)

    def test_z0_is_zero(self):
        assert central_binomial_sum(0, 10).to_fraction() == 0

    def test_z1_matches_pi_squared_over_18(self):
        value = central_binomial_sum(1, 30)
        assert close_to(value.to_fraction(), pi_squared_over_18(40), 30)

    @pytest.mark.parametrize("z", [4, 5, -1, Fraction(-1, 2)])
    def test_domain(self, z):
        with pytest.raises(OutOfDomain):
            central_binomial_sum(z, 10)

    def test_two_code_paths_one_constant(self, quartic_coupling):
        via_coupling, _ = sum_to_precision(quartic_coupling, 40)
        via_binomials = central_binomial_sum(2, 40)
        assert abs(
            via_coupling.to_fraction() - via_binomials.to_fraction()
        ) <= 2 * Fraction(1, 10**40)

    def test_decimal_prefix(self):
        value = central_binomial_sum(2, 30)
        assert value.to_decimal(25).startswith(
            fraction_decimal(pi_squared_over_8(35), 20)
        )
