"""Exact convergents of a generalized continued fraction.

Both the numerator sequence A_n and the denominator sequence B_n obey the
same three-term recurrence y_n = b(n) y_{n-1} + a(n) y_{n-2}; they differ
only in their initial frames (A_{-1}, A_0) = (1, b0) and (B_{-1}, B_0) =
(0, 1). Everything here is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import InvalidProblem
from .expr import ConstExpr
from .poly import Polynomial, integer_roots_from

DEFAULT_DEPTH = 512


@dataclass(frozen=True)
class GcfProblem:
    """A continued-fraction conjecture: value b0 + a(1)/(b(1) + a(2)/(...)).

    Optionally carries a constant expression the value is claimed to equal.
    """

    b0: Fraction
    a: Polynomial
    b: Polynomial
    target: ConstExpr | None = None

    def __post_init__(self):
        object.__setattr__(self, "b0", Fraction(self.b0))
        if self.a.is_zero:
            raise InvalidProblem("partial numerator polynomial is identically zero")
        bad = integer_roots_from(self.a, start=1)
        if bad:
            raise InvalidProblem(
                f"partial numerator a(n) vanishes at n = {bad[0]}"
            )


@dataclass(frozen=True)
class ConvergentTriple:
    """Exact state of the recurrence at one index; x is A/B when B != 0."""

    n: int
    A: Fraction
    B: Fraction
    x: Fraction | None = field(default=None)


def iterate_recurrence(
    a: Polynomial, b: Polynomial, y_minus_one: Fraction, y_zero: Fraction
) -> Iterator[Fraction]:
    """Yield y_0, y_1, ... of y_n = b(n) y_{n-1} + a(n) y_{n-2}, exactly."""
    y_prev, y_curr = Fraction(y_minus_one), Fraction(y_zero)
    yield y_curr
    n = 1
    while True:
        y_prev, y_curr = y_curr, b(n) * y_curr + a(n) * y_prev
        yield y_curr
        n += 1


def convergents(problem: GcfProblem, depth: int = DEFAULT_DEPTH) -> list[ConvergentTriple]:
    """Exact triples (n, A_n, B_n, x_n) for n = 0..depth.

    A vanishing B_n is not fatal: the triple is recorded with x = None and
    iteration continues.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    numerators = iterate_recurrence(problem.a, problem.b, Fraction(1), problem.b0)
    denominators = iterate_recurrence(problem.a, problem.b, Fraction(0), Fraction(1))
    out: list[ConvergentTriple] = []
    for n in range(depth + 1):
        A = next(numerators)
        B = next(denominators)
        out.append(ConvergentTriple(n, A, B, A / B if B != 0 else None))
    return out


def casoratian(problem: GcfProblem, upto: int) -> list[Fraction]:
    """W_n = A_n B_{n-1} - A_{n-1} B_n for n = 0..upto, exactly.

    W_0 = -1 from the initial frames, and W_n = -a(n) W_{n-1} thereafter;
    nonvanishing W certifies the two frames stay linearly independent.
    """
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    numerators = iterate_recurrence(problem.a, problem.b, Fraction(1), problem.b0)
    denominators = iterate_recurrence(problem.a, problem.b, Fraction(0), Fraction(1))
    A_prev, B_prev = Fraction(1), Fraction(0)  # the n = -1 frame values
    out: list[Fraction] = []
    for _ in range(upto + 1):
        A = next(numerators)
        B = next(denominators)
        out.append(A * B_prev - A_prev * B)
        A_prev, B_prev = A, B
    return out
