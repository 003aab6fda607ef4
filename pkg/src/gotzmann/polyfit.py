"""Integer-valued polynomials in the binomial basis, fitted by forward differences."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinatorics import binomial


@dataclass(frozen=True)
class BinomialPoly:
    """p(d) = sum_k coeffs[k] * C(d, k). Trailing zeros are stripped on construction."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, d: int) -> int:
        return evaluate(self, d)

    def shift(self, h: int) -> BinomialPoly:
        """q(d) = p(d + h), re-expanded in the binomial basis."""
        return fit([evaluate(self, h + i) for i in range(len(self.coeffs) or 1)])

    def render(self, var: str = "d") -> str:
        """ASCII rendering such as ``C(d,2) - 3*C(d,1)``; ``0`` for the zero polynomial."""
        if self.is_zero():
            return "0"
        out = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            basis = "1" if k == 0 else f"C({var},{k})"
            mag = abs(c)
            term = basis if mag == 1 and k > 0 else (str(mag) if k == 0 else f"{mag}*{basis}")
            if not out:
                out.append(f"-{term}" if c < 0 else term)
            else:
                out.append(f"- {term}" if c < 0 else f"+ {term}")
        return " ".join(out)


def fit(values: Sequence[int]) -> BinomialPoly:
    """Newton forward differences of p(0), p(1), ..., p(m)."""
    if not values:
        raise ValueError("cannot fit an empty sample")
    row = [int(v) for v in values]
    coeffs = []
    while row:
        coeffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return BinomialPoly(tuple(coeffs))


def evaluate(p: BinomialPoly, d: int) -> int:
    """Exact value at any integer d (negative d uses the generalized binomial)."""
    return sum(c * binomial(d, k) for k, c in enumerate(p.coeffs))


def dominant_term(p: BinomialPoly) -> tuple[int, Fraction]:
    """(degree, leading coefficient in the monomial basis)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no dominant term")
    m = p.degree
    return m, Fraction(p.coeffs[-1], math.factorial(m))


def render_dominant(p: BinomialPoly, var: str = "d") -> str:
    """Leading monomial-basis term, e.g. ``(1/8)*d^4`` or ``2^-15*d^16``."""
    m, c = dominant_term(p)
    power = f"{var}^{m}" if m > 1 else (var if m == 1 else "")
    sign = "-" if c < 0 else ""
    c = abs(c)
    if c.numerator == 1 and c.denominator > 1 and c.denominator.bit_count() == 1 \
            and c.denominator.bit_length() - 1 >= 10:
        coef = f"2^-{c.denominator.bit_length() - 1}"
    elif c.denominator == 1:
        coef = str(c.numerator)
    else:
        coef = f"({c.numerator}/{c.denominator})"
    if not power:
        return sign + coef
    if coef == "1":
        return sign + power
    return f"{sign}{coef}*{power}"


def tau_degree_bound(n: int, r: int) -> int:
    """Degree of tau_n(x_r^.) in d: r * 2^(n-r-1)."""
    return r << (n - r - 1)


def fit_tau(n: int, r: int = 2, extra: int = 5) -> BinomialPoly:
    """Fit d -> tau_n(x_r^d) on a window of degree+3 points, then confirm it on
    ``extra`` further points."""
    from .thresholds import tau_recursive

    m = tau_degree_bound(n, r) + 2
    p = fit([tau_recursive(n, r, d) for d in range(m + 1)])
    for d in range(m + 1, m + 1 + extra):
        if evaluate(p, d) != tau_recursive(n, r, d):
            raise AssertionError(f"fit of tau_{n}(x_{r}^d) fails to extrapolate at d={d}")
    return p


@dataclass(frozen=True)
class DominantReport:
    n: int
    degree: int
    leading: Fraction
    expected_degree: int
    expected_leading: Fraction
    extrapolates: bool

    @property
    def passed(self) -> bool:
        return (self.degree == self.expected_degree
                and self.leading == self.expected_leading
                and self.extrapolates)

    @property
    def summary(self) -> str:
        return (f"n={self.n}: degree {self.degree} (want {self.expected_degree}), "
                f"leading {self.leading} (want {self.expected_leading}), "
                f"extrapolation {'ok' if self.extrapolates else 'BROKEN'}")

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.summary}"


def verify_dominant(n: int) -> DominantReport:
    """tau_n(x_2^d) should have degree 2^(n-2) and leading coefficient 2^(1-2^(n-2))."""
    from .thresholds import tau_recursive

    if n < 3:
        raise ValueError("need n >= 3")
    e = 1 << (n - 2)
    window = e + 3  # d = 0 .. e+2
    p = fit([tau_recursive(n, 2, d) for d in range(window)])
    extrapolates = all(evaluate(p, d) == tau_recursive(n, 2, d) for d in range(window, window + 5))
    deg, lead = dominant_term(p)
    return DominantReport(n, deg, lead, e, Fraction(2, 1 << e), extrapolates)
