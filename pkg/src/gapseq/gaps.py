"""Gaps between consecutive sequence terms, their sums and their products.

The n-th gap is the run of consecutive integers strictly between a_n and
a_(n+1). Three sum variants exist: ``gap_sum`` clamps to 0 on empty gaps,
``gap_sum_signed`` evaluates the closed form without clamping (negative at
descents), and ``gap_sum_abs`` sums a_n + j over j = 1 .. |a_(n+1)-a_n-1|.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .sequences import SeqSpec, term


@dataclass(frozen=True)
class Gap:
    """The consecutive integers strictly between a_n and a_(n+1).

    ``start`` is a_n + 1 even when the gap is empty; ``length`` clamps
    to 0 whenever the step a_(n+1) - a_n is at most 1.
    """

    start: int
    length: int

    @property
    def elements(self) -> range:
        return range(self.start, self.start + self.length)


def gap(spec: SeqSpec, n: int) -> Gap:
    """The n-th gap of the sequence described by spec."""
    a, b = term(spec, n), term(spec, n + 1)
    return Gap(start=a + 1, length=max(b - a - 1, 0))


def gap_sum(spec: SeqSpec, n: int) -> int:
    """Sum of the n-th gap's elements; 0 when the gap is empty."""
    a, b = term(spec, n), term(spec, n + 1)
    if b <= a + 1:
        return 0
    return (b - a - 1) * (a + b) // 2


def gap_sum_signed(spec: SeqSpec, n: int) -> int:
    """(a_(n+1) - a_n - 1)(a_n + a_(n+1)) / 2 without clamping.

    Negative at descents. The product equals b^2 - a^2 - a - b, which is
    always even, so the halving is exact.
    """
    a, b = term(spec, n), term(spec, n + 1)
    return (b - a - 1) * (a + b) // 2


def gap_sum_abs(spec: SeqSpec, n: int) -> int:
    """Sum of a_n + j for j = 1 .. |a_(n+1) - a_n - 1|."""
    a, b = term(spec, n), term(spec, n + 1)
    width = abs(b - a - 1)
    return width * a + width * (width + 1) // 2


def gap_product(spec: SeqSpec, n: int) -> int:
    """Product of the n-th gap's elements; 1 when the gap is empty.

    Multiplies the ``length`` consecutive integers starting at a_n + 1
    rather than forming the factorial ratio (a_(n+1)-1)!/a_n!, so it
    stays cheap when the terms themselves are huge.
    """
    g = gap(spec, n)
    return product_range(g.start, g.start + g.length)


def product_range(lo: int, hi: int) -> int:
    """Product of the integers in [lo, hi); 1 when empty.

    Long ranges are split in half so partial products stay balanced in
    size, which is much faster than a running product once the result
    reaches thousands of bits.
    """
    n = hi - lo
    if n <= 64:
        out = 1
        for v in range(lo, hi):
            out *= v
        return out
    mid = lo + n // 2
    return product_range(lo, mid) * product_range(mid, hi)


def gap_sum_linear_closed(r: int, n: int) -> int:
    """Gap-sum of a_n = r*n in closed form: (2n+1) * C(r, 2)."""
    if r < 1:
        raise ValueError(f"slope must be >= 1, got {r}")
    return (2 * n + 1) * comb(r, 2)


def gap_sum_geometric_closed(k: int, n: int) -> int:
    """Gap-sum of a_n = k**n in closed form: ((k^2-1)k^(2n) - (k+1)k^n) / 2."""
    if k < 2:
        raise ValueError(f"base must be >= 2, got {k}")
    return ((k * k - 1) * k ** (2 * n) - (k + 1) * k**n) // 2
