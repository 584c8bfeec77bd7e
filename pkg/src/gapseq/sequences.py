"""Integer sequence families with exact arbitrary-precision terms.

A sequence spec is a small frozen dataclass describing one family
(linear, geometric, polynomial, binomial, Horadam recurrence, primes,
the paper-folding walk, or an explicit list). ``term`` and ``terms``
evaluate specs without ever leaving exact integer arithmetic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Union


class SpecError(ValueError):
    """A sequence specification violates its constraints."""


@dataclass(frozen=True)
class Linear:
    """a_n = k*n + r with slope k >= 0."""

    k: int
    r: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise SpecError(f"linear slope must be >= 0, got {self.k}")


@dataclass(frozen=True)
class Geometric:
    """a_n = k**n + offset with base k >= 2."""

    k: int
    offset: int = 0

    def __post_init__(self) -> None:
        if self.k < 2:
            raise SpecError(f"geometric base must be >= 2, got {self.k}")


@dataclass(frozen=True)
class Polynomial:
    """a_n = sum(coeffs[i] * n**i), validated integer-valued on n >= 0.

    Coefficients may be rationals, so triangular numbers are
    ``Polynomial((0, Fraction(1, 2), Fraction(1, 2)))``. Construction
    rejects polynomials that take a non-integer value anywhere on the
    naturals.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        self._validate_integer_valued(coeffs)

    @staticmethod
    def _validate_integer_valued(coeffs: tuple[Fraction, ...]) -> None:
        degree = len(coeffs) - 1
        while degree >= 0 and coeffs[degree] == 0:
            degree -= 1
        values = [
            sum((c * n**i for i, c in enumerate(coeffs)), start=Fraction(0))
            for n in range(degree + 2)
        ]
        for n, v in enumerate(values):
            if v.denominator != 1:
                raise SpecError(f"polynomial is not integer-valued: p({n}) = {v}")
        # Newton basis: p(n) = sum_j d_j * C(n, j) with d_j the j-th forward
        # difference at 0; p is integer-valued on the naturals iff every d_j
        # is an integer.
        row = values
        for j in range(degree + 1):
            if row[0].denominator != 1:
                raise SpecError(
                    f"polynomial is not integer-valued: binomial-basis coefficient {j} = {row[0]}"
                )
            row = [row[i + 1] - row[i] for i in range(len(row) - 1)]


@dataclass(frozen=True)
class Binomial:
    """a_n = C(n + shift, lower)."""

    shift: int
    lower: int

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise SpecError(f"binomial shift must be >= 0, got {self.shift}")
        if self.lower < 1:
            raise SpecError(f"binomial lower index must be >= 1, got {self.lower}")


@dataclass(frozen=True)
class Horadam:
    """a_n = h(n + shift) where h(0) = alpha, h(1) = beta and
    h(i) = r*h(i-1) + s*h(i-2).

    Fibonacci, Jacobsthal and Pell are the instances (0,1,1,1),
    (0,1,1,2) and (0,1,2,1). A positive shift re-roots the sequence:
    Jacobsthal J(n+2) is (0,1,1,2) with shift 2, equivalently
    (1,3,1,2) with shift 0.
    """

    alpha: int
    beta: int
    r: int
    s: int
    shift: int = 0

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise SpecError(f"horadam shift must be >= 0, got {self.shift}")

    def seeds_at_shift(self) -> tuple[int, int]:
        """Seed pair of the shift-0 sequence identical to this one."""
        a, b = self.alpha, self.beta
        for _ in range(self.shift):
            a, b = b, self.r * b + self.s * a
        return a, b


@dataclass(frozen=True)
class Primes:
    """a_n = the (n+1)-th prime, so a_0 = 2."""


@dataclass(frozen=True)
class Fold:
    """a_n = A088748(n), the walk driven by the regular paper-folding
    bits (see the folding module)."""


@dataclass(frozen=True)
class Explicit:
    """A finite, explicitly listed sequence (at least two terms)."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(t) for t in self.terms)
        if len(values) < 2:
            raise SpecError("explicit sequence needs at least 2 terms")
        object.__setattr__(self, "terms", values)


SeqSpec = Union[Linear, Geometric, Polynomial, Binomial, Horadam, Primes, Fold, Explicit]

FIBONACCI = Horadam(0, 1, 1, 1)
JACOBSTHAL = Horadam(0, 1, 1, 2)
PELL = Horadam(0, 1, 2, 1)


def term(spec: SeqSpec, n: int) -> int:
    """Exact n-th term (n >= 0) of the sequence described by spec."""
    if n < 0:
        raise IndexError(f"sequence index must be >= 0, got {n}")
    match spec:
        case Linear(k=k, r=r):
            return k * n + r
        case Geometric(k=k, offset=offset):
            return k**n + offset
        case Polynomial(coeffs=coeffs):
            value = sum((c * n**i for i, c in enumerate(coeffs)), start=Fraction(0))
            return value.numerator  # integral by construction-time validation
        case Binomial(shift=shift, lower=lower):
            return comb(n + shift, lower)
        case Horadam():
            return _horadam_run(spec, n, 1)[0]
        case Primes():
            return nth_prime(n)
        case Fold():
            from .folding import a088748  # local import: folding depends on this module

            return a088748(n)
        case Explicit(terms=values):
            if n >= len(values):
                raise IndexError(
                    f"explicit sequence has {len(values)} terms, index {n} is out of range"
                )
            return values[n]
    raise TypeError(f"not a sequence spec: {spec!r}")


def terms(spec: SeqSpec, n0: int, count: int) -> list[int]:
    """Terms a_n0 .. a_(n0+count-1); linear total work for Horadam and primes."""
    if n0 < 0:
        raise IndexError(f"sequence index must be >= 0, got {n0}")
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if isinstance(spec, Horadam):
        return _horadam_run(spec, n0, count)
    return [term(spec, n0 + i) for i in range(count)]


def _horadam_run(spec: Horadam, n0: int, count: int) -> list[int]:
    start = n0 + spec.shift
    a, b = spec.alpha, spec.beta
    out: list[int] = []
    for i in range(start + count):
        if i >= start:
            out.append(a)
        a, b = b, spec.r * b + spec.s * a
    return out


_PRIME_LOCK = threading.Lock()
_primes: list[int] = [2, 3, 5, 7, 11, 13]
_prime_limit = 16


def nth_prime(n: int) -> int:
    """The (n+1)-th prime: nth_prime(0) == 2.

    Backed by a sieve that doubles its bound on demand; the cached list
    is replaced atomically, so concurrent readers always see a complete
    prefix of the primes.
    """
    if n < 0:
        raise IndexError(f"prime index must be >= 0, got {n}")
    while len(_primes) <= n:
        _grow_sieve()
    return _primes[n]


def _grow_sieve() -> None:
    global _primes, _prime_limit
    with _PRIME_LOCK:
        limit = _prime_limit * 2
        flags = bytearray(b"\x01") * limit
        flags[0:2] = b"\x00\x00"
        for p in range(2, isqrt(limit - 1) + 1):
            if flags[p]:
                flags[p * p :: p] = b"\x00" * len(range(p * p, limit, p))
        _primes = [i for i in range(limit) if flags[i]]
        _prime_limit = limit
