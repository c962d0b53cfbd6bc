"""Exact and arbitrary-precision number support shared by every stage.

Integers are plain Python ints (unbounded), exact rationals are
``fractions.Fraction`` (always reduced, positive denominator), and
approximate reals are mpmath binary floats tagged with the mantissa
width they were computed at.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath.libmp import from_rational, round_nearest, to_rational

from .errors import DivisionByZero, InsufficientPrecision

Rational = Fraction

#: bits of mantissa budgeted per requested decimal digit (a digit needs ~3.33)
BITS_PER_DIGIT = 4
GUARD_BITS = 64
PRECISION_ENV_VAR = "GCF_FORGE_PRECISION_BITS"


def working_precision(digits: int) -> int:
    """Mantissa bits used when a result must be good to `digits` decimals.

    Defaults to digits * 4 + 64 guard bits. The environment variable
    GCF_FORGE_PRECISION_BITS, when set, overrides the computed value
    outright (floored at 8 bits).
    """
    override = os.environ.get(PRECISION_ENV_VAR)
    if override:
        return max(8, int(override))
    return digits * BITS_PER_DIGIT + GUARD_BITS


def decimal_digits_for_bits(bits: int) -> int:
    """Decimal digits that round-trip a binary float of `bits` mantissa."""
    return int(math.ceil(bits * math.log10(2))) + 3


@dataclass(frozen=True)
class PrecisionReal:
    """A binary floating value plus the mantissa width it carries.

    The wrapped mpf is a dyadic rational, so :meth:`to_fraction` is exact;
    comparisons and error accounting in this package go through it.
    """

    value: mpmath.mpf
    precision_bits: int

    def to_fraction(self) -> Fraction:
        """Exact value of the underlying binary float."""
        p, q = to_rational(self.value._mpf_)
        return Fraction(int(p), int(q))

    def to_decimal(self, digits: int | None = None) -> str:
        """Decimal text; defaults to enough digits to round-trip exactly."""
        if digits is None:
            digits = decimal_digits_for_bits(self.precision_bits)
        return mpmath.nstr(self.value, digits)

    def __str__(self) -> str:
        return self.to_decimal()


def _mpf_from_fraction(q: Fraction) -> mpmath.mpf:
    # correctly rounded at the *current* mpmath working precision
    return mpmath.mpf(
        from_rational(q.numerator, q.denominator, mpmath.mp.prec, round_nearest)
    )


def rational_to_real(q: Fraction | int, precision_bits: int) -> PrecisionReal:
    """Round an exact rational to a binary float of `precision_bits` bits.

    Single correct rounding: |result - q| <= 2^(1-precision_bits) * |q|.
    """
    if precision_bits < 8:
        raise ValueError("precision_bits must be at least 8")
    q = Fraction(q)
    with mpmath.mp.workprec(precision_bits):
        value = _mpf_from_fraction(q)
    return PrecisionReal(value, precision_bits)


def real_from_decimal(text: str, precision_bits: int) -> PrecisionReal:
    """Parse decimal text into a float carrying `precision_bits` bits."""
    if precision_bits < 8:
        raise ValueError("precision_bits must be at least 8")
    with mpmath.mp.workprec(precision_bits):
        value = +mpmath.mpmathify(text)
    return PrecisionReal(value, precision_bits)


def real_reciprocal(x: PrecisionReal) -> PrecisionReal:
    """1/x at the precision x carries."""
    if x.value == 0:
        raise DivisionByZero("reciprocal of zero")
    with mpmath.mp.workprec(x.precision_bits):
        value = mpmath.mpf(1) / x.value
    return PrecisionReal(value, x.precision_bits)


def agree_to_digits(x: PrecisionReal, y: PrecisionReal, digits: int) -> bool:
    """True iff |x - y| <= 10^(-digits) * max(1, |y|), computed exactly.

    Operands must carry at least ceil(digits * log2(10)) mantissa bits --
    the information bound below which they cannot answer the question.
    Callers wanting headroom should budget 4 bits per digit, as
    :func:`working_precision` does.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    need = math.ceil(digits * math.log2(10))
    if x.precision_bits < need or y.precision_bits < need:
        raise InsufficientPrecision(
            f"comparing to {digits} digits needs {need} bits; "
            f"operands carry {x.precision_bits} and {y.precision_bits}"
        )
    xf, yf = x.to_fraction(), y.to_fraction()
    tolerance = Fraction(1, 10**digits) * max(Fraction(1), abs(yf))
    return abs(xf - yf) <= tolerance


def central_binomial(m: int) -> int:
    """(2m)! / (m!)^2 for m >= 0."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return math.comb(2 * m, m)
