"""First-principles Gotzmann test for principal Borel ideals.

An ideal generated in a single degree D is Gotzmann iff its Hilbert function
grows minimally from D to D+1 (Gotzmann persistence takes care of the rest),
so one growth step is checked. Two independent routes decide it:

* the quotient side: h_{D+1} against Macaulay's bound (h_D)^<D>;
* the ideal side: |shadow(B(u))| against the shadow of the lex segment with
  the same number of generators.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .combinatorics import binomial, macaulay_growth
from .errors import CapacityError, InconsistencyError, ThresholdNotFound
from .monomials import Monomial, borel_gens, count_monomials, enumerate_lex, shadow

DEFAULT_CAP = 10**7


def size_cap() -> int:
    """Largest |S_{n,D}| the oracle will enumerate; GOTZMANN_CAP overrides."""
    raw = os.environ.get("GOTZMANN_CAP")
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class GotzmannVerdict:
    n: int
    generator: Monomial
    degree: int
    ideal_count: int      # N = |B(u)|
    shadow_count: int     # M = |shadow(B(u))|
    quotient_now: int     # h_D
    quotient_next: int    # h_{D+1}
    macaulay_bound: int   # (h_D)^<D>
    is_gotzmann: bool
    lex_check_agrees: bool


def lex_array(n: int, d: int) -> np.ndarray:
    """S_{n,d} as an int64 array of exponent rows, descending lex."""
    memo = {}

    def build(m, k):
        if (m, k) in memo:
            return memo[(m, k)]
        if m == 1:
            out = np.array([[k]], dtype=np.int64)
        else:
            blocks = []
            for a in range(k, -1, -1):
                rest = build(m - 1, k - a)
                blocks.append(np.column_stack([np.full(len(rest), a, dtype=np.int64), rest]))
            out = np.concatenate(blocks)
        memo[(m, k)] = out
        return out

    return build(n, d)


def _binom_table(top: int, width: int) -> np.ndarray:
    T = np.zeros((top + 1, width + 1), dtype=np.int64)
    for a in range(top + 1):
        for b in range(min(a, width) + 1):
            T[a, b] = binomial(a, b)
    return T


def lex_ranks(E: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Vectorized lex rank of each row of E (all rows of one degree)."""
    n = E.shape[1]
    rem = E.sum(axis=1)
    rank = np.zeros(len(E), dtype=np.int64)
    for i in range(n - 1):
        m = n - i - 1
        rank += table[m - 1 + rem - E[:, i], m]
        rem = rem - E[:, i]
    return rank


def _shadow_size(G: np.ndarray, n: int, D: int, table: np.ndarray) -> int:
    if len(G) == 0:
        return 0
    marks = np.zeros(count_monomials(n, D + 1), dtype=bool)
    for i in range(n):
        H = G.copy()
        H[:, i] += 1
        marks[lex_ranks(H, table)] = True
    return int(marks.sum())


def _counts_numpy(u: Monomial) -> tuple[int, int, int]:
    n, D = u.nvars, u.degree
    S = lex_array(n, D)
    # m is in B(u) iff every prefix sum of m dominates that of u
    inB = (np.cumsum(S, axis=1) >= np.cumsum(np.array(u.exps, dtype=np.int64))).all(axis=1)
    table = _binom_table(D + n + 1, n)
    N = int(inB.sum())
    M = _shadow_size(S[inB], n, D, table)
    M_lex = _shadow_size(S[:N], n, D, table)
    return N, M, M_lex


def _counts_python(u: Monomial) -> tuple[int, int, int]:
    B = borel_gens(u)
    N = len(B)
    lex = []
    for m in enumerate_lex(u.nvars, u.degree):
        if len(lex) == N:
            break
        lex.append(m)
    return N, len(shadow(B)), len(shadow(lex))


def is_gotzmann(u: Monomial, engine: str = "numpy", cap: int | None = None) -> GotzmannVerdict:
    """Decide whether the principal Borel ideal <u> is Gotzmann."""
    if u.is_unit():
        raise ValueError("is_gotzmann needs a monomial of positive degree")
    n, D = u.nvars, u.degree
    cap = size_cap() if cap is None else cap
    size = count_monomials(n, D + 1)
    if size > cap:
        raise CapacityError(f"|S_{{{n},{D + 1}}}| = {size} exceeds the cap {cap}")
    if engine == "numpy":
        N, M, M_lex = _counts_numpy(u)
    elif engine == "python":
        N, M, M_lex = _counts_python(u)
    else:
        raise ValueError(f"unknown engine {engine!r}")

    h_now = count_monomials(n, D) - N
    h_next = count_monomials(n, D + 1) - M
    bound = macaulay_growth(h_now, D)
    if h_next > bound:
        raise InconsistencyError(f"Macaulay bound violated for <{u}>: h_{D + 1}={h_next} > {bound}")
    gotz = h_next == bound
    return GotzmannVerdict(
        n=n, generator=u, degree=D, ideal_count=N, shadow_count=M,
        quotient_now=h_now, quotient_next=h_next, macaulay_bound=bound,
        is_gotzmann=gotz, lex_check_agrees=gotz == (M == M_lex),
    )


def _checked(u: Monomial, engine: str, cap: int | None) -> bool:
    v = is_gotzmann(u, engine=engine, cap=cap)
    if not v.lex_check_agrees:
        raise InconsistencyError(f"Macaulay and lex-segment checks disagree on <{u}>")
    return v.is_gotzmann


def threshold_search(u0: Monomial, cap: int, engine: str = "numpy", size_cap: int | None = None) -> int:
    """Smallest t <= cap with <u0 x_n^t> Gotzmann, u0 given in n-1 variables.

    Also confirms Gotzmann at t+1 and t+2; every t below the answer has been
    seen to fail on the way up.
    """
    n = u0.nvars + 1
    for t in range(cap + 1):
        u = Monomial(u0.exps + (t,))
        if u.is_unit() or _checked(u, engine, size_cap):
            for extra in (1, 2):
                if not _checked(Monomial(u0.exps + (t + extra,)), engine, size_cap):
                    raise InconsistencyError(f"<u0 x_{n}^t> Gotzmann at t={t} but not at t={t + extra}")
            return t
    raise ThresholdNotFound(cap)
