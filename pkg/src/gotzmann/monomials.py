"""Monomials in x_1, ..., x_n as dense exponent vectors, with lex order x_1 > ... > x_n.

Variable indices in the public API are 1-based, matching the usual x_1..x_n
naming; exponent tuples are 0-based internally.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .combinatorics import binomial


@dataclass(frozen=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        if not self.exps:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int, power: int = 1) -> Monomial:
        """x_i^power in n variables."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        e = [0] * n
        e[i - 1] = power
        return cls(tuple(e))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> Monomial:
        """x_{i_1} x_{i_2} ... from a list of 1-based indices."""
        e = [0] * n
        for i in indices:
            e[i - 1] += 1
        return cls(tuple(e))

    @classmethod
    def parse(cls, text: str, n: int) -> Monomial:
        """Inverse of ``str``: ``"x1^2*x3"`` or ``"1"``."""
        text = text.strip()
        e = [0] * n
        if text == "1":
            return cls(tuple(e))
        for factor in text.split("*"):
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor.strip())
            if m is None:
                raise ValueError(f"cannot parse monomial factor {factor!r}")
            i = int(m.group(1))
            if not 1 <= i <= n:
                raise ValueError(f"variable x{i} outside x1..x{n}")
            e[i - 1] += int(m.group(2) or 1)
        return cls(tuple(e))

    @property
    def nvars(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def deg(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        return self.exps[i - 1]

    def indices(self) -> list[int]:
        """Sorted 1-based index vector i_1 <= ... <= i_d with u = x_{i_1}...x_{i_d}."""
        out = []
        for i, a in enumerate(self.exps, start=1):
            out.extend([i] * a)
        return out

    def is_unit(self) -> bool:
        return not any(self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        _check_nvars(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(tuple(a * k for a in self.exps))

    def divides(self, other: Monomial) -> bool:
        _check_nvars(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.exps, start=1):
            if a == 1:
                parts.append(f"x{i}")
            elif a > 1:
                parts.append(f"x{i}^{a}")
        return "*".join(parts) if parts else "1"


def _check_nvars(u: Monomial, v: Monomial):
    if u.nvars != v.nvars:
        raise ValueError(f"monomials live in different rings: {u.nvars} vs {v.nvars} variables")


def lex_compare(u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 as u <, =, > v in lex order on S_{n,d}."""
    _check_nvars(u, v)
    if u.degree != v.degree:
        raise ValueError(f"lex order compares equal degrees only: {u} vs {v}")
    # for equal length and degree, tuple order is exactly lex with x_1 > ... > x_n
    return (u.exps > v.exps) - (u.exps < v.exps)


def _lex_exps(n: int, d: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _lex_exps(n - 1, d - a):
            yield (a,) + rest


def enumerate_lex(n: int, d: int) -> Iterator[Monomial]:
    """All of S_{n,d} in strictly descending lex order, x_1^d first."""
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    return (Monomial(e) for e in _lex_exps(n, d))


def count_monomials(n: int, d: int) -> int:
    """|S_{n,d}| = C(n-1+d, d)."""
    return binomial(n - 1 + d, d) if d >= 0 else 0


def _rank_exps(e: tuple[int, ...]) -> int:
    n = len(e)
    rem = sum(e)
    rank = 0
    for i in range(n - 1):
        m = n - i - 1  # variables after position i
        # monomials agreeing before i with a larger exponent at i
        rank += binomial(m - 1 + rem - e[i], m)
        rem -= e[i]
    return rank


def lex_rank(u: Monomial) -> int:
    """Position of u in ``enumerate_lex``; 0 for x_1^d."""
    return _rank_exps(u.exps)


def _unrank_exps(n: int, d: int, rank: int) -> tuple[int, ...]:
    e = []
    rem = d
    for i in range(n - 1):
        m = n - i - 1
        for a in range(rem, -1, -1):
            block = binomial(m - 1 + rem - a, m - 1)
            if rank < block:
                e.append(a)
                rem -= a
                break
            rank -= block
    e.append(rem)
    return tuple(e)


def lex_unrank(n: int, d: int, rank: int) -> Monomial:
    total = count_monomials(n, d)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} outside 0..{total - 1} for S_{{{n},{d}}}")
    return Monomial(_unrank_exps(n, d, rank))


def _succ_exps(e: tuple[int, ...]) -> tuple[int, ...] | None:
    # next larger monomial of the same degree, or None at x_1^d
    n = len(e)
    tail = e[n - 1]
    for i in range(n - 2, -1, -1):
        if tail > 0:
            return e[:i] + (e[i] + 1,) + (0,) * (n - i - 2) + (tail - 1,)
        tail += e[i]
    return None


def lex_successor(u: Monomial) -> Monomial | None:
    """The smallest monomial of S_{n,d} strictly above u; None for x_1^d."""
    e = _succ_exps(u.exps)
    return None if e is None else Monomial(e)


def _max_index(e: tuple[int, ...]) -> int:
    # 0-based index of the last nonzero exponent
    for i in range(len(e) - 1, -1, -1):
        if e[i]:
            return i
    raise ValueError("max_var is undefined for the unit monomial")


def max_var(u: Monomial) -> int:
    """max{k : x_k | u}, 1-based."""
    return _max_index(u.exps) + 1


def lam(u: Monomial) -> Monomial:
    """lambda(u) = x_{max_var(u)}."""
    return Monomial.var(u.nvars, max_var(u))


def maxgen(monos: Iterable[Monomial], nvars: int | None = None) -> Monomial:
    """Product of lambda(u) over the set; the unit monomial for an empty set."""
    acc = None
    for u in monos:
        if acc is None:
            acc = [0] * u.nvars
        elif len(acc) != u.nvars:
            raise ValueError("maxgen over monomials with different numbers of variables")
        acc[_max_index(u.exps)] += 1
    if acc is None:
        if nvars is None:
            raise ValueError("maxgen of an empty set needs nvars")
        return Monomial.unit(nvars)
    return Monomial(tuple(acc))


def truncate(u: Monomial, i: int) -> Monomial:
    """pi_{n,i}: keep x_1..x_i."""
    if not 1 <= i <= u.nvars:
        raise ValueError(f"truncation index {i} outside 1..{u.nvars}")
    return Monomial(u.exps[:i])


def borel_gens(u: Monomial) -> frozenset[Monomial]:
    """B(u): all x_{j_1}...x_{j_d} with j sorted and j_k <= i_k for every k."""
    n = u.nvars
    idx = u.indices()
    out = []

    def extend(pos, low, e):
        if pos == len(idx):
            out.append(Monomial(tuple(e)))
            return
        for j in range(low, idx[pos] + 1):
            e[j - 1] += 1
            extend(pos + 1, j, e)
            e[j - 1] -= 1

    extend(0, 1, [0] * n)
    return frozenset(out)


def borel_closure(u: Monomial) -> frozenset[Monomial]:
    """B(u) by breadth-first closure under Borel moves x_i m / x_j, i < j. Slow oracle."""
    seen = {u}
    queue = deque([u])
    while queue:
        m = queue.popleft()
        e = m.exps
        for j in range(len(e)):
            if not e[j]:
                continue
            for i in range(j):
                f = list(e)
                f[j] -= 1
                f[i] += 1
                w = Monomial(tuple(f))
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return frozenset(seen)


def shadow(G: Iterable[Monomial]) -> frozenset[Monomial]:
    """{m * x_i : m in G, 1 <= i <= n} for a set G of equal degree."""
    G = list(G)
    if not G:
        return frozenset()
    n, D = G[0].nvars, G[0].degree
    out = set()
    for m in G:
        if m.nvars != n or m.degree != D:
            raise ValueError("shadow needs monomials of one degree in one ring")
        e = m.exps
        for i in range(n):
            out.add(Monomial(e[:i] + (e[i] + 1,) + e[i + 1:]))
    return frozenset(out)
