"""Search for polynomial couplings (c, d) that split a three-term recurrence.

A coupling must satisfy, as polynomial identities,

    c(n) + d(n+1) = b(n)        and        c(n) * d(n) = -a(n),

which turns the second-order recurrence into a first-order cascade. The
search factors -a over its rational roots, distributes the monic factors
(and an indivisible residual, if any) between the two sides in every way,
and solves exactly for the remaining scalar pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import ZeroPartialNumerator
from .poly import Polynomial, factor_rational, split_assignments


@dataclass(frozen=True)
class Coupling:
    c: Polynomial
    d: Polynomial

    def __str__(self):
        return f"c = {self.c.to_text()}; d = {self.d.to_text()}"


def verify_coupling(a: Polynomial, b: Polynomial, coupling: Coupling) -> bool:
    """Both defining identities, checked by canonical polynomial equality."""
    sum_ok = coupling.c + coupling.d.shift(1) == b
    product_ok = coupling.c * coupling.d == -a
    return sum_ok and product_ok


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    num_root = isqrt(q.numerator)
    den_root = isqrt(q.denominator)
    if num_root * num_root == q.numerator and den_root * den_root == q.denominator:
        return Fraction(num_root, den_root)
    return None


def _coefficient(p: Polynomial, i: int) -> Fraction:
    return p.coefficients[i] if i <= p.degree else Fraction(0)


def _solve_scalars(
    P: Polynomial, Q1: Polynomial, b: Polynomial, content: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Rational (u, v) with u*P + v*Q1 == b and u*v == content, if any.

    P and Q1 are monic, so their coefficient vectors are dependent only
    when P == Q1; that degenerate direction is handled via the quadratic
    z^2 - beta*z + content with u + v = beta.
    """
    if P == Q1:
        if b.is_zero:
            beta = Fraction(0)
        else:
            beta = b.leading_coefficient / P.leading_coefficient
            if P * beta != b:
                return []
        discriminant = beta * beta - 4 * content
        root = _rational_sqrt(discriminant)
        if root is None:
            return []
        u1 = (beta + root) / 2
        u2 = (beta - root) / 2
        solutions = [(u1, beta - u1)]
        if u2 != u1:
            solutions.append((u2, beta - u2))
        return solutions

    rows = max(P.degree, Q1.degree, b.degree) + 1
    pivot = None
    for i in range(rows):
        for j in range(i + 1, rows):
            det = _coefficient(P, i) * _coefficient(Q1, j) - _coefficient(
                P, j
            ) * _coefficient(Q1, i)
            if det != 0:
                pivot = (i, j, det)
                break
        if pivot:
            break
    if pivot is None:  # unreachable for distinct monic P, Q1
        return []
    i, j, det = pivot
    u = (_coefficient(b, i) * _coefficient(Q1, j) - _coefficient(b, j) * _coefficient(Q1, i)) / det
    v = (_coefficient(P, i) * _coefficient(b, j) - _coefficient(P, j) * _coefficient(b, i)) / det
    # the two pivot rows determine (u, v); every remaining row must concur
    for k in range(rows):
        if u * _coefficient(P, k) + v * _coefficient(Q1, k) != _coefficient(b, k):
            return []
    if u * v != content:
        return []
    return [(u, v)]


def find_couplings(a: Polynomial, b: Polynomial) -> list[Coupling]:
    """All couplings reachable through rational-root splits of -a.

    The enumeration distributes every monic linear factor (with its
    multiplicity) and the whole residual, if one exists, between the c
    and d sides, then solves for the scalar pair exactly. An empty result
    means no coupling exists *within this search space*; factorizations
    needing irrational or complex splits are out of reach by design.
    """
    if a.is_zero:
        raise ZeroPartialNumerator("a(n) is identically zero")
    factored = factor_rational(-a)
    signed_content = factored.content * factored.sign
    items = list(factored.factors)

    residual_sides = (True, False) if factored.residual is not None else (True,)
    found: dict[tuple, Coupling] = {}
    for base_P, base_Q in split_assignments(items):
        for residual_to_P in residual_sides:
            P, Q = base_P, base_Q
            if factored.residual is not None:
                if residual_to_P:
                    P = P * factored.residual
                else:
                    Q = Q * factored.residual
            for u, v in _solve_scalars(P, Q.shift(1), b, signed_content):
                coupling = Coupling(c=u * P, d=v * Q)
                if verify_coupling(a, b, coupling):
                    key = (coupling.c.coefficients, coupling.d.coefficients)
                    found.setdefault(key, coupling)
    return sorted(
        found.values(),
        key=lambda cp: (cp.c.degree, cp.c.coefficients, cp.d.coefficients),
    )
