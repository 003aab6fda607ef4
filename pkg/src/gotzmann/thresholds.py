"""Gotzmann thresholds tau_n(x_r^d) by several independent routes.

* ``tau_recursive``: the recursion over i in [r+1, n] (default everywhere).
* ``tau_r2``: its specialisation to r = 2.
* ``tau_delta_sum``: the sum of the delta_j.
* ``tau_machinery``: f(0) - h(0) - k(0), from brute-force lex scans at large t
  extrapolated back to t = 0. Works for any u0, not only powers.
* ``tau3_closed``, ``tau4_closed``, ``tau5_x2_closed``: known closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import binomial
from .errors import FitUnstable, InconsistencyError, ScanExhausted
from .machinery import delta_sequence, machinery_bruteforce
from .monomials import Monomial
from .polyfit import BinomialPoly, evaluate, fit

METHODS = ("recursive", "delta_sum", "machinery", "closed_form", "oracle_search")


@dataclass
class ThresholdRecord:
    n: int
    r: int
    d: int
    tau: int
    method: str
    agreement: dict[str, int] = field(default_factory=dict)

    def consistent(self) -> bool:
        return all(v == self.tau for v in self.agreement.values())


def _check(n, r, d):
    if not 2 <= r <= n - 1:
        raise ValueError(f"need 2 <= r <= n-1, got n={n}, r={r}")
    if d < 0:
        raise ValueError(f"need d >= 0, got d={d}")


def tau_recursive(n: int, r: int, d: int) -> int:
    """tau_n(x_r^d) in k[x_1..x_n] by recursion on the number of variables.

    >>> tau_recursive(3, 2, 4), tau_recursive(4, 2, 3), tau_recursive(4, 3, 2)
    (6, 10, 2)
    """
    _check(n, r, d)
    tau = {r + 1: binomial(d + r - 1, r) - d}
    for m in range(r + 2, n + 1):
        val = binomial(d + m - 1, d) - binomial(d + m - r, d) - binomial(d + r - 1, d) + 1
        for i in range(r + 1, m):
            term = binomial(tau[i], m + 1 - i)
            val += -term if (m + 1 - i) & 1 else term
        tau[m] = val
    return tau[n]


def tau_r2(n: int, d: int) -> int:
    """tau_n(x_2^d) by the r = 2 form of the recursion."""
    if n < 3 or d < 0:
        raise ValueError(f"need n >= 3 and d >= 0, got n={n}, d={d}")
    tau = {3: binomial(d + 1, 2) - d}
    for m in range(4, n + 1):
        val = binomial(d + m - 2, m - 1) - d
        for i in range(3, m):
            term = binomial(tau[i], m + 1 - i)
            val += -term if (m + 1 - i) & 1 else term
        tau[m] = val
    return tau[n]


def tau_delta_sum(n: int, r: int, d: int) -> int:
    _check(n, r, d)
    return delta_sequence(n, r, d).total


def tau3_closed(a: int, b: int) -> int:
    """tau_3(x_1^a x_2^b)."""
    return binomial(b, 2)


def tau4_closed(a: int, b: int, c: int) -> int:
    """tau_4(x_1^a x_2^b x_3^c)."""
    cb2 = binomial(b, 2)
    middle = Fraction((b + 4) * cb2, 3)
    if middle.denominator != 1:
        raise InconsistencyError(f"(b+4)/3 * C(b,2) is not an integer at b={b}")
    return (binomial(cb2, 2) + int(middle) + (b + 1) * binomial(c + 1, 2)
            + binomial(c + 1, 3) - c)


def tau5_x2_closed(d: int) -> int:
    """tau_5(x_2^d)."""
    cd2 = binomial(d, 2)
    inner = binomial(cd2, 2) + binomial(d + 1, 3) + cd2
    return binomial(inner, 2) - binomial(cd2, 3) + binomial(d + 3, 4) - d


def tau_closed(n: int, r: int, d: int) -> int | None:
    """The closed form for tau_n(x_r^d) where one is known, else None."""
    if r == 2 and n == 3:
        return tau3_closed(0, d)
    if r == 2 and n == 4:
        return tau4_closed(0, d, 0)
    if r == 3 and n == 4:
        return tau4_closed(0, 0, d)
    if r == 2 and n == 5:
        return tau5_x2_closed(d)
    return None


@dataclass(frozen=True)
class MachineryFit:
    T: int            # first sample point
    f: BinomialPoly   # in s = t - T
    h: BinomialPoly
    k: BinomialPoly

    def at(self, t: int) -> tuple[int, int, int]:
        s = t - self.T
        return evaluate(self.f, s), evaluate(self.h, s), evaluate(self.k, s)

    @property
    def tau(self) -> int:
        f0, h0, k0 = self.at(0)
        return f0 - h0 - k0


def machinery_fit(u0: Monomial, T: int, width: int) -> MachineryFit:
    """Fit f, h, k on t = T .. T+width-1 from brute-force machinery points."""
    pts = [machinery_bruteforce(u0, t) for t in range(T, T + width)]
    return MachineryFit(
        T,
        fit([p.f for p in pts]),
        fit([p.h for p in pts]),
        fit([p.k for p in pts]),
    )


def _same_polys(a: MachineryFit, b: MachineryFit) -> bool:
    shift = b.T - a.T
    return all(pa.shift(shift) == pb for pa, pb in ((a.f, b.f), (a.h, b.h), (a.k, b.k)))


def tau_machinery(u0: Monomial, max_rounds: int = 12) -> int:
    """tau_n(u0) = f(0) - h(0) - k(0) for u0 in n-1 variables.

    f, h, k are sampled at consecutive large t, fitted, and extrapolated to t = 0.
    The window start T is raised until T >= tau + deg(u0) + n and a refit
    at T+5 gives the same polynomials.
    """
    if u0.is_unit():
        return 0
    n = u0.nvars + 1
    lowest = next(i for i, a in enumerate(u0.exps, start=1) if a)
    # f, h, k have degree <= n - lowest; two spare points expose a wrong degree
    width = n - lowest + 3
    margin = u0.degree + n
    T = margin
    for _ in range(max_rounds):
        try:
            first = machinery_fit(u0, T, width)
            second = machinery_fit(u0, T + 5, width)
        except ScanExhausted:
            T *= 2
            continue
        tau = first.tau
        stable = _same_polys(first, second) and max(p.degree for p in (first.f, first.h, first.k)) <= width - 3
        if stable and T >= tau + margin:
            return tau
        T = max(2 * T, tau + margin)
    raise FitUnstable(f"machinery fit for {u0} did not settle after {max_rounds} rounds (T={T})")


def tau_machinery_power(n: int, r: int, d: int) -> int:
    """tau_machinery for u0 = x_r^d."""
    _check(n, r, d)
    return tau_machinery(Monomial.var(n - 1, r, d))


def tau_oracle(n: int, r: int, d: int, cap: int | None = None) -> int:
    from .oracle import threshold_search

    _check(n, r, d)
    if cap is None:
        # the recursion only sizes the search window; the answer comes from the oracle
        cap = tau_recursive(n, r, d) + 3
    return threshold_search(Monomial.var(n - 1, r, d), cap)


def compute(n: int, r: int, d: int, methods=("recursive",)) -> ThresholdRecord:
    """Run the requested methods; ``tau`` is the first method's value."""
    routes = {
        "recursive": lambda: tau_recursive(n, r, d),
        "delta_sum": lambda: tau_delta_sum(n, r, d),
        "machinery": lambda: tau_machinery_power(n, r, d),
        "closed_form": lambda: tau_closed(n, r, d),
        "oracle_search": lambda: tau_oracle(n, r, d),
    }
    agreement = {}
    for m in methods:
        if m not in routes:
            raise ValueError(f"unknown method {m!r}")
        v = routes[m]()
        if v is not None:
            agreement[m] = v
    first = next(iter(agreement))
    return ThresholdRecord(n, r, d, agreement[first], first, agreement)
