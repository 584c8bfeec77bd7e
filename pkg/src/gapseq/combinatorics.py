"""Exact binomial coefficients, Fuss-Catalan and Raney numbers, and the
closed-form gap products of arithmetic progressions a_n = k*n + r."""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def binom(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula; 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"upper index must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)  # exact at every step
    return out


def fuss_catalan(p: int, m: int) -> int:
    """C((p+1)m, m) / (pm + 1), always an integer."""
    if p < 0 or m < 0:
        raise ValueError("fuss_catalan arguments must be >= 0")
    q, rem = divmod(binom((p + 1) * m, m), p * m + 1)
    if rem:
        raise ArithmeticError(f"fuss_catalan({p}, {m}): divisibility failed")
    return q


def raney(p: int, r: int, n: int) -> Fraction:
    """r / (pn + r) * C(pn + r, n) as an exact rational.

    Integral for many parameter choices but not all of them, so callers
    that need an integer convert with ``as_integer``.
    """
    if r < 1:
        raise ValueError(f"raney weight r must be >= 1, got {r}")
    if p < 0 or n < 0:
        raise ValueError("raney p and n must be >= 0")
    return Fraction(r, p * n + r) * binom(p * n + r, n)


def as_integer(x: Fraction) -> int:
    """The integer a rational denotes; raises if it is not whole."""
    if x.denominator != 1:
        raise ValueError(f"{x} is not an integer")
    return x.numerator


def gap_product_closed(k: int, r: int, n: int) -> int:
    """Gap product of a_n = k*n + r: the k-1 integers above k*n + r multiplied out."""
    if k < 1:
        raise ValueError(f"slope k must be >= 1, got {k}")
    if r < 1:
        raise ValueError(f"intercept r must be >= 1, got {r}")
    base = k * n + r
    out = 1
    for j in range(1, k):
        out *= base + j
    return out


def check_fc_identity(k: int, n: int) -> bool:
    """Whether the gap product of k*n + 1 equals k! * fuss_catalan(n, k)."""
    return gap_product_closed(k, 1, n) == factorial(k) * fuss_catalan(n, k)


def check_raney_identity(k: int, r: int, n: int) -> bool:
    """Whether the gap product of k*n + r equals (k!/r) * raney(n+1, r, k)."""
    lhs = Fraction(gap_product_closed(k, r, n))
    return lhs == Fraction(factorial(k), r) * raney(n + 1, r, k)
