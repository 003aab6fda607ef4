"""Verification suites behind ``gotzmann check``.

Each suite yields ``(label, ok, detail)`` triples; a suite passes when every
triple does.
"""

from __future__ import annotations

from typing import Iterator

from .machinery import (
    cost_closed,
    delta_sequence,
    f_general,
    machinery_bruteforce,
    mg,
    mg_shifted,
    z_closed,
)
from .monomials import Monomial, enumerate_lex
from .oracle import threshold_search
from .polyfit import verify_dominant
from .thresholds import tau_closed, tau_delta_sum, tau_machinery, tau_r2, tau_recursive

Check = tuple[str, bool, str]


def formulas(max_n: int = 9, max_d: int = 30) -> Iterator[Check]:
    """Recursion vs delta sum vs r = 2 form vs closed forms."""
    bad = []
    count = 0
    for n in range(3, max_n + 1):
        for r in range(2, n):
            for d in range(max_d + 1):
                rec = tau_recursive(n, r, d)
                others = {"delta_sum": tau_delta_sum(n, r, d), "closed_form": tau_closed(n, r, d)}
                if r == 2:
                    others["r2"] = tau_r2(n, d)
                for name, v in others.items():
                    if v is None:
                        continue
                    count += 1
                    if v != rec:
                        bad.append(f"tau_{n}(x_{r}^{d}): recursive {rec} != {name} {v}")
                if rec < 0:
                    bad.append(f"tau_{n}(x_{r}^{d}) = {rec} is negative")
    yield (f"formulas n<={max_n} d<={max_d} ({count} comparisons)", not bad, "; ".join(bad[:5]))


def machinery(max_n: int = 4, max_d: int = 5, max_t: int = 6) -> Iterator[Check]:
    """Closed forms of the machinery against lex-scan brute force."""
    bad = []
    for n in range(3, max_n + 1):
        for d in range(1, max_d + 1):
            for u in enumerate_lex(n, d):
                for t in range(max_t + 1):
                    brute = mg(Monomial(u.exps[:-1] + (u.exps[-1] + t,)))
                    if mg_shifted(u, t) != brute:
                        bad.append(f"mg_shifted({u}, {t}) != mg brute force {brute}")
                    if u.exps[-1] == 0:
                        u0 = Monomial(u.exps[:-1])
                        if f_general(u0, t) != brute.deg(n):
                            bad.append(f"f_general({u0}, {t}) != {brute.deg(n)}")
    yield (f"mg_shifted / f_general vs brute force n<={max_n} d<={max_d} t<={max_t}", not bad, "; ".join(bad[:5]))

    bad = []
    for n in range(3, max_n + 1):
        for r in range(2, n):
            for d in range(1, max_d + 1):
                trace = delta_sequence(n, r, d)
                u0 = Monomial.var(n - 1, r, d)
                base = trace.partial_at(n - 1)  # the scan needs t >= tau_{n-1}(u0)
                for t in range(base, base + max_t + 1):
                    p = machinery_bruteforce(u0, t)
                    want_z, want_cost = z_closed(trace, n, t), cost_closed(trace, n, t)
                    if p.z != want_z or p.cost != want_cost or p.k != t - base:
                        bad.append(f"n={n} r={r} d={d} t={t}: scan z={p.z} cost={p.cost}, "
                                   f"closed z={want_z} cost={want_cost}")
    yield (f"(z, h, k) scans vs closed forms n<={max_n} d<={max_d}", not bad, "; ".join(bad[:5]))

    bad = []
    for n in range(3, max_n + 1):
        for r in range(2, n):
            for d in range(max_d + 1):
                got = tau_machinery(Monomial.var(n - 1, r, d))
                want = tau_recursive(n, r, d)
                if got != want:
                    bad.append(f"tau_machinery({n},{r},{d}) = {got} != {want}")
    yield (f"tau_machinery vs tau_recursive n<={max_n} d<={max_d}", not bad, "; ".join(bad[:5]))


def oracle(max_n: int = 4, max_d: int = 3) -> Iterator[Check]:
    """First-principles threshold search against the recursion."""
    for n in range(3, max_n + 1):
        for r in range(2, n):
            for d in range(max_d + 1):
                want = tau_recursive(n, r, d)
                u0 = Monomial.var(n - 1, r, d)
                try:
                    got = threshold_search(u0, want + 3)
                except Exception as exc:  # surfaced as a failed check
                    yield (f"oracle tau_{n}(x_{r}^{d})", False, repr(exc))
                    continue
                # threshold_search scans t upward, so every t < got already failed
                yield (f"oracle tau_{n}(x_{r}^{d}) = {got}", got == want,
                       "" if got == want else f"recursive says {want}")


def conjecture(max_n: int = 8) -> Iterator[Check]:
    for n in range(3, max_n + 1):
        rep = verify_dominant(n)
        yield (f"dominant term {rep.summary}", rep.passed, "")


SUITES = {
    "formulas": formulas,
    "machinery": machinery,
    "oracle": oracle,
    "conjecture": conjecture,
}
