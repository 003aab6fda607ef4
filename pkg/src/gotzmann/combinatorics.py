"""Exact binomial arithmetic and Macaulay representations.

Everything here works on Python ints, so values never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def binomial(n: int, k: int) -> int:
    """C(n, k) for any integer n and k >= 0.

    Negative upper index uses C(-a, k) = (-1)^k C(a+k-1, k).

    >>> binomial(5, 2), binomial(-3, 2), binomial(2, 5), binomial(-1, 3)
    (10, 6, 0, -1)
    """
    if k < 0:
        raise ValueError(f"binomial lower index must be >= 0, got {k}")
    if n >= 0:
        return math.comb(n, k)
    value = math.comb(k - n - 1, k)
    return -value if k & 1 else value


@dataclass(frozen=True)
class MacaulayRep:
    """N = sum C(a_i, i) over ``terms`` (pairs (a_i, i), i descending from ``degree``)."""

    degree: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(math.comb(a, i) for a, i in self.terms)

    def shifted(self) -> int:
        """N^<d>: every binomial C(a, i) replaced by C(a+1, i+1)."""
        return sum(math.comb(a + 1, i + 1) for a, i in self.terms)


def _largest_top(N: int, i: int) -> int:
    # max a >= i with C(a, i) <= N, for N >= 1
    lo, hi = i, i + 1
    while math.comb(hi, i) <= N:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, i) <= N:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(N: int, d: int) -> MacaulayRep:
    """The greedy d-th Macaulay representation of N.

    >>> macaulay_rep(3, 3).terms
    ((3, 3), (2, 2), (1, 1))
    """
    if N <= 0 or d <= 0:
        raise ValueError(f"macaulay_rep needs N >= 1 and d >= 1, got N={N}, d={d}")
    terms = []
    rest = N
    for i in range(d, 0, -1):
        if rest == 0:
            break
        a = _largest_top(rest, i)
        terms.append((a, i))
        rest -= math.comb(a, i)
    if rest:
        raise AssertionError("greedy descent must exhaust N by i = 1")
    return MacaulayRep(d, tuple(terms))


def macaulay_growth(N: int, d: int) -> int:
    """Macaulay's bound N^<d> on the next Hilbert function value; 0 for N = 0."""
    if N < 0 or d <= 0:
        raise ValueError(f"macaulay_growth needs N >= 0 and d >= 1, got N={N}, d={d}")
    if N == 0:
        return 0
    return macaulay_rep(N, d).shifted()
