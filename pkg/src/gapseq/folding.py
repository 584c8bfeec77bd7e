"""Regular paper-folding bits (A014707) and the walk they drive (A088748)."""

from __future__ import annotations

import threading

from .gaps import gap_sum_abs
from .sequences import Fold, SeqSpec, term


def fold(n: int) -> int:
    """n-th regular paper-folding bit.

    fold(4n) = 0, fold(4n+2) = 1, fold(2n+1) = fold(n).
    """
    if n < 0:
        raise IndexError(f"fold index must be >= 0, got {n}")
    while n & 1:
        n >>= 1
    return 1 if n % 4 == 2 else 0


_WALK_LOCK = threading.Lock()
_walk: list[int] = [1]


def a088748(n: int) -> int:
    """a(0) = 1, a(n+1) = a(n) + 1 - 2*fold(n); steps are always +1 or -1."""
    if n < 0:
        raise IndexError(f"walk index must be >= 0, got {n}")
    if n >= len(_walk):
        with _WALK_LOCK:
            while len(_walk) <= n:
                _walk.append(_walk[-1] + 1 - 2 * fold(len(_walk) - 1))
    return _walk[n]


def descent_marker(spec: SeqSpec, n: int) -> int:
    """2*a_n - 1 where the sequence steps down by exactly 1, else 0."""
    a, b = term(spec, n), term(spec, n + 1)
    return 2 * a - 1 if b - a == -1 else 0


def fold_identity_check(n: int) -> bool:
    """Whether the walk's absolute gap-sum minus its descent marker equals
    four times the paper-folding bit at n."""
    spec = Fold()
    return gap_sum_abs(spec, n) - descent_marker(spec, n) == 4 * fold(n)
