import pytest

from gotzmann.combinatorics import binomial
from gotzmann.errors import FitUnstable
from gotzmann.monomials import Monomial
from gotzmann.thresholds import (
    ThresholdRecord,
    compute,
    machinery_fit,
    tau3_closed,
    tau4_closed,
    tau5_x2_closed,
    tau_closed,
    tau_delta_sum,
    tau_machinery,
    tau_machinery_power,
    tau_oracle,
    tau_r2,
    tau_recursive,
)

P = Monomial.parse


def test_recursive_examples():
    for d in range(20):
        assert tau_recursive(3, 2, d) == binomial(d, 2)
    assert tau_recursive(3, 2, 4) == 6
    assert tau_recursive(4, 2, 3) == 10
    assert tau_recursive(5, 2, 2) == 4
    assert tau_recursive(4, 3, 2) == binomial(4, 3) - 2


def test_recursive_rejects():
    for args in [(3, 3, 1), (3, 1, 1), (4, 2, -1)]:
        with pytest.raises(ValueError):
            tau_recursive(*args)


def test_r2_examples():
    assert tau_r2(5, 3) == 56
    assert tau_r2(3, 0) == 0
    for d in range(15):
        assert tau_r2(4, d) == binomial(d + 2, 3) - d + binomial(tau_r2(3, d), 2)


def test_delta_sum_examples():
    assert tau_delta_sum(5, 2, 2) == 4
    for d in range(10):
        assert tau_delta_sum(3, 2, d) == binomial(d + 1, 2) - d
    for n in range(3, 8):
        for r in range(2, n):
            assert tau_delta_sum(n, r, 0) == 0


def test_closed_form_examples():
    for a in range(5):
        assert tau3_closed(a, 4) == 6
    assert tau4_closed(0, 3, 0) == 10
    assert tau5_x2_closed(2) == 4
    assert tau_closed(6, 2, 3) is None
    assert tau_closed(4, 3, 5) == tau_recursive(4, 3, 5)


def test_routes_agree_moderate():
    for n in range(3, 8):
        for r in range(2, n):
            for d in range(12):
                want = tau_recursive(n, r, d)
                assert tau_delta_sum(n, r, d) == want
                if r == 2:
                    assert tau_r2(n, d) == want
                c = tau_closed(n, r, d)
                assert c is None or c == want


def test_thresholds_nonnegative_and_monotone_in_d():
    for n in range(3, 7):
        for r in range(2, n):
            vals = [tau_recursive(n, r, d) for d in range(25)]
            assert min(vals) >= 0
            assert vals[2:] == sorted(vals[2:])


def test_machinery_examples():
    assert tau_machinery(P("x2^2", 2)) == 1
    assert tau_machinery(P("x2^3", 3)) == 10
    assert tau_machinery(P("x2*x3", 3)) == 1
    assert tau_machinery(Monomial.unit(3)) == 0


def test_machinery_general_generators():
    assert tau_machinery(P("x1^2*x2^3", 2)) == tau3_closed(2, 3)
    for a, b, c in [(1, 2, 2), (0, 0, 3), (2, 1, 1)]:
        assert tau_machinery(Monomial((a, b, c))) == tau4_closed(a, b, c)


def test_machinery_five_variables():
    assert tau_machinery_power(5, 2, 2) == 4
    assert tau_machinery_power(5, 3, 3) == tau_recursive(5, 3, 3)


def test_machinery_fit_shape():
    fit = machinery_fit(P("x2^2", 3), 10, 5)
    f0, h0, k0 = fit.at(0)
    assert fit.tau == f0 - h0 - k0 == tau_recursive(4, 2, 2)


def test_machinery_gives_up():
    with pytest.raises(FitUnstable):
        tau_machinery(P("x2^3", 3), max_rounds=0)


def test_oracle_route():
    assert tau_oracle(4, 3, 2) == 2
    assert tau_oracle(3, 2, 5) == 10


def test_compute_record():
    rec = compute(5, 2, 2, ("recursive", "delta_sum", "closed_form", "machinery", "oracle_search"))
    assert isinstance(rec, ThresholdRecord)
    assert rec.tau == 4 and rec.method == "recursive"
    assert rec.consistent()
    assert set(rec.agreement) == {"recursive", "delta_sum", "closed_form", "machinery", "oracle_search"}
    # no closed form for n = 6: the method is skipped, not reported
    rec = compute(6, 2, 2, ("closed_form", "recursive"))
    assert rec.method == "recursive" and "closed_form" not in rec.agreement
    with pytest.raises(ValueError):
        compute(4, 2, 2, ("guess",))


def test_record_detects_disagreement():
    rec = ThresholdRecord(4, 2, 2, 2, "recursive", {"recursive": 2, "delta_sum": 3})
    assert not rec.consistent()
