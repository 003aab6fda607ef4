"""Lexintervals, costs, mg, sigma and the f/h/k/delta data behind Gotzmann thresholds.

Most quantities come in two flavours: a brute-force version that walks S_{n,d}
in lex order, and a closed form. The tests pit one against the other.

Conventions: a ``u0`` argument is a monomial in n-1 variables (so x_n never
divides it); n is ``u0.nvars + 1``. Costs of empty lexintervals are the unit
monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .combinatorics import binomial
from .errors import ScanExhausted
from .monomials import (
    Monomial,
    _lex_exps,
    _max_index,
    _rank_exps,
    _succ_exps,
    _unrank_exps,
    borel_gens,
    maxgen,
    truncate,
)


def _same_piece(u: Monomial, v: Monomial):
    if u.nvars != v.nvars or u.degree != v.degree:
        raise ValueError(f"{u} and {v} are not in the same S_{{n,d}}")


def lexinterval(v: Monomial, u: Monomial) -> Iterator[Monomial]:
    """L*_n(v, u) = {z : v > z >= u}, descending."""
    _same_piece(u, v)
    if u.exps > v.exps:
        raise ValueError(f"lexinterval needs u <= v, got u={u} > v={v}")
    n, d = u.nvars, u.degree
    for rank in range(_rank_exps(v.exps) + 1, _rank_exps(u.exps) + 1):
        yield Monomial(_unrank_exps(n, d, rank))


def cost_mu(u: Monomial, v: Monomial) -> Monomial:
    """mu_n(u, v) = maxgen(L*_n(v, u)), the cost of the upward path u -> v."""
    _same_piece(u, v)
    if u.exps > v.exps:
        raise ValueError(f"cost_mu needs u <= v, got u={u} > v={v}")
    cost = [0] * u.nvars
    z = u.exps
    while z != v.exps:
        cost[_max_index(z)] += 1
        z = _succ_exps(z)
    return Monomial(tuple(cost))


def lexsegment(u: Monomial) -> list[Monomial]:
    """L_n(u) = {z in S_{n,d} : z >= u}, descending."""
    out = []
    for e in _lex_exps(u.nvars, u.degree):
        out.append(Monomial(e))
        if e == u.exps:
            return out
    raise AssertionError("u must appear in its own degree piece")


def mg(u: Monomial) -> Monomial:
    """mg_n(u) = maxgen(L_n(u) minus B(u)), by enumeration."""
    if u.is_unit():
        raise ValueError("mg is undefined for the unit monomial")
    B = borel_gens(u)
    return maxgen((z for z in lexsegment(u) if z not in B), nvars=u.nvars)


def sigma(u: Monomial) -> Monomial:
    """Prefix sums of the exponent vector."""
    out, acc = [], 0
    for a in u.exps:
        acc += a
        out.append(acc)
    return Monomial(tuple(out))


def sigma_pow(u: Monomial, t: int) -> Monomial:
    """sigma applied t times, in closed form."""
    if t < 0:
        raise ValueError("sigma_pow needs t >= 0")
    if t == 0:
        return u
    a = u.exps
    return Monomial(tuple(
        sum(a[j] * binomial(t - 1 + i - j, t - 1) for j in range(i + 1))
        for i in range(len(a))
    ))


def mg_shifted(u: Monomial, t: int) -> Monomial:
    """mg_n(u x_n^t) via sigma^t(mg_n(u))."""
    return sigma_pow(mg(u), t)


def _embed(u0: Monomial, extra: int = 0) -> tuple[int, ...]:
    # u0 in n-1 variables -> u0 * x_n^extra in n variables
    return u0.exps + (extra,)


def borel_count(indices: list[int]) -> int:
    """|B(x_{i_1}...x_{i_k})| for a sorted index list, by counting dominated sequences."""
    if not indices:
        return 1
    # ways[j] = number of valid prefixes ending with value j
    top = indices[-1]
    ways = [0] * (top + 1)
    for j in range(1, indices[0] + 1):
        ways[j] = 1
    for bound in indices[1:]:
        new = [0] * (top + 1)
        run = 0
        for j in range(1, bound + 1):
            run += ways[j]
            new[j] = run
        ways = new
    return sum(ways)


def f_general(u0: Monomial, t: int) -> int:
    """deg_{x_n} mg_n(u0 x_n^t) from the closed formula over the index vector of u0."""
    n = u0.nvars + 1
    idx = u0.indices()
    d = len(idx)
    total = 0
    for k in range(1, d):
        nxt = idx[k]  # i_{k+1}, 1-based
        total += binomial(t + d - k - 2 + n - nxt, n - 1 - nxt) * (borel_count(idx[:k]) - 1)
    return total


def f_power_exponents(n: int, r: int, d: int) -> list[int]:
    """[f_{r+1}, ..., f_n], the x_j-exponents of mg_n(x_r^d)."""
    _check_nrd(n, r, d)
    # C(j-r+d-1, j-r) rather than C(j-r+d-1, d-1): equal for d >= 1, and 0 at d = 0
    return [binomial(j + d - 2, j - 1) - binomial(j - r + d - 1, j - r) for j in range(r + 1, n + 1)]


def f_power_t(n: int, r: int, d: int, t: int, j: int | None = None) -> int:
    """f_j(t) = sum_i f_{j-i} C(t+i-1, i); j defaults to n, giving f(t)."""
    j = n if j is None else j
    f = f_power_exponents(n, r, d)
    return sum(f[j - i - r - 1] * binomial(t + i - 1, i) for i in range(j - r))


def _check_nrd(n, r, d):
    if not 2 <= r < n:
        raise ValueError(f"need 2 <= r < n, got r={r}, n={n}")
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")


def smallest_cost_step(n: int, r: int, j: int, a: int, b: int, c: int, t: int) -> tuple[Monomial, Monomial]:
    """Smallest z >= x_r^a x_n^(t-c) whose cost truncated to x_1..x_j is x_j^b.

    Returns (z, cost). z = x_r^a x_{j-1}^b x_n^(t-c-b); when j = r+1 the middle
    factor merges into the x_r power.
    """
    if not (1 <= r < n and r + 1 <= j <= n):
        raise ValueError(f"need r < n and j in [r+1, n], got r={r}, j={j}, n={n}")
    if b < 1:
        raise ValueError("b must be >= 1")
    if t - c - b < 0:
        raise ValueError(f"infeasible step: t-c-b = {t - c - b} < 0")
    z = [0] * n
    z[r - 1] += a
    z[j - 2] += b
    z[n - 1] += t - c - b
    cost = [0] * n
    cost[j - 1] = b
    for s in range(j + 1, n + 1):
        cost[s - 1] = binomial(t - c + s - j, s - j + 1) - binomial(t - c - b + s - j, s - j + 1)
    return Monomial(tuple(z)), Monomial(tuple(cost))


def ascend_until(start: Monomial, target: Monomial) -> tuple[Monomial, Monomial]:
    """Smallest z >= start with truncate(cost_mu(start, z), i) == target, i = target.nvars.

    Walks upward one monomial at a time. Raises ScanExhausted once the truncated
    cost overshoots the target or the walk passes x_1^d.
    """
    i = target.nvars
    want = target.exps
    cost = [0] * start.nvars
    z = start.exps
    while True:
        head = tuple(cost[:i])
        if head == want:
            return Monomial(z), Monomial(tuple(cost))
        if any(h > w for h, w in zip(head, want)):
            raise ScanExhausted(f"cost from {start} overshot {target} at {Monomial(z)}")
        cost[_max_index(z)] += 1
        z = _succ_exps(z)
        if z is None:
            raise ScanExhausted(f"reached the top of S_{{{start.nvars},{start.degree}}} from {start}")


def smallest_cost_scan(n: int, r: int, j: int, a: int, b: int, c: int, t: int) -> tuple[Monomial, Monomial]:
    """Brute-force twin of ``smallest_cost_step``."""
    start = [0] * n
    start[r - 1] = a
    start[n - 1] = t - c
    return ascend_until(Monomial(tuple(start)), Monomial.var(j, j, b))


@dataclass(frozen=True)
class MachineryPoint:
    t: int
    f: int         # deg_{x_n} mg_n(u0 x_n^t)
    w: Monomial    # truncation of mg_n(u0 x_n^t) to n-1 variables
    z: Monomial    # z_n(t)
    cost: Monomial  # mu_n(u0 x_n^t, z_n(t))
    h: int
    k: int


def machinery_bruteforce(u0: Monomial, t: int, mg_route: str = "shifted") -> MachineryPoint:
    """f(t), w(t), z_n(t), h(t), k(t) for u0 in n-1 variables.

    ``mg_route="brute"`` enumerates L_n(u0 x_n^t); ``"shifted"`` enumerates only
    L_n(u0) and applies sigma^t, which stays cheap at large t.
    """
    if u0.is_unit():
        raise ValueError("u0 must have positive degree")
    n = u0.nvars + 1
    u = Monomial(_embed(u0, t))
    if mg_route == "brute":
        m = mg(u)
    elif mg_route == "shifted":
        m = mg_shifted(Monomial(_embed(u0)), t)
    else:
        raise ValueError(f"unknown mg_route {mg_route!r}")
    w = truncate(m, n - 1)
    z, cost = ascend_until(u, w)
    return MachineryPoint(t=t, f=m.deg(n), w=w, z=z, cost=cost, h=cost.deg(n), k=z.deg(n))


@dataclass(frozen=True)
class DeltaTrace:
    n: int
    r: int
    d: int
    f: tuple[int, ...]        # f_{r+1}..f_n
    delta: tuple[int, ...]    # delta_{r+1}..delta_n
    partial: tuple[int, ...]  # sum_{l=r+1}^{j} delta_l for j = r+1..n

    @property
    def total(self) -> int:
        return self.partial[-1]

    def _at(self, seq, j):
        if not self.r + 1 <= j <= self.n:
            raise IndexError(f"index {j} outside [{self.r + 1}, {self.n}]")
        return seq[j - self.r - 1]

    def f_at(self, j: int) -> int:
        return self._at(self.f, j)

    def delta_at(self, j: int) -> int:
        return self._at(self.delta, j)

    def partial_at(self, j: int) -> int:
        """sum_{l=r+1}^{j} delta_l; 0 for j = r."""
        return 0 if j == self.r else self._at(self.partial, j)

    def h0(self, j: int) -> int:
        return self.f_at(j) - self.delta_at(j)

    def k0(self, j: int) -> int:
        return -self.partial_at(j - 1)


def delta_sequence(n: int, r: int, d: int) -> DeltaTrace:
    """delta_j for j in [r+1, n] by the recursion with generalized binomials."""
    _check_nrd(n, r, d)
    f = f_power_exponents(n, r, d)
    S = {r: 0}
    deltas = []
    for j in range(r + 1, n + 1):
        dj = f[j - r - 1] + binomial(-S[j - 1] + 1, 2)
        for i in range(3, j - r + 1):
            dj += binomial(-S[j + 1 - i] + i - 2, i)
        deltas.append(dj)
        S[j] = S[j - 1] + dj
    return DeltaTrace(n, r, d, tuple(f), tuple(deltas), tuple(S[j] for j in range(r + 1, n + 1)))


def g_exponent(trace: DeltaTrace, j: int, s: int, t: int) -> int:
    """g_{j,s}(t): the x_s-degree of mu_n(x_r^d x_n^t, z_j(t)), for j in [r+2, n], s in [j, n]."""
    r = trace.r
    if not (r + 2 <= j <= trace.n and j <= s <= trace.n):
        raise ValueError(f"need j in [r+2, n] and s in [j, n], got j={j}, s={s}")
    S = trace.partial_at
    out = binomial(t + s - r - 1, s - r) - binomial(t - S(j - 1) + s - j + 1, s - j + 2)
    for i in range(3, j - r + 1):
        out -= binomial(t - S(j + 1 - i) + s - j + i - 2, s - j + i)
    return out


def h_closed(trace: DeltaTrace, j: int, t: int) -> int:
    """h_j(t) = g_{j,j}(t), and 0 for j = r+1."""
    return 0 if j == trace.r + 1 else g_exponent(trace, j, j, t)


def z_closed(trace: DeltaTrace, j: int, t: int) -> Monomial:
    """z_j(t) for u0 = x_r^d in n variables.

    x_r^(d+delta_{r+1}) x_{r+1}^delta_{r+2} ... x_{j-2}^delta_{j-1} x_n^(t - sum);
    the x_n-degree t - sum_{l<j} delta_l is k_j(t).
    """
    n, r = trace.n, trace.r
    z = [0] * n
    z[r - 1] = trace.d
    for i in range(r + 1, j):
        z[i - 2] += trace.delta_at(i)
    z[n - 1] += t - trace.partial_at(j - 1)
    return Monomial(tuple(z))


def cost_closed(trace: DeltaTrace, j: int, t: int) -> Monomial:
    """mu_n(x_r^d x_n^t, z_j(t)) as a product of x_i^{f_i(t)} (i < j) and x_s^{g_{j,s}(t)}."""
    n, r, d = trace.n, trace.r, trace.d
    e = [0] * n
    if j == r + 1:
        return Monomial(tuple(e))
    for i in range(r + 1, j):
        e[i - 1] = f_power_t(n, r, d, t, j=i)
    for s in range(j, n + 1):
        e[s - 1] = g_exponent(trace, j, s, t)
    return Monomial(tuple(e))
