import itertools

import pytest
from hypothesis import given, strategies as st

from gotzmann.combinatorics import binomial
from gotzmann.monomials import (
    Monomial,
    borel_closure,
    borel_gens,
    count_monomials,
    enumerate_lex,
    lam,
    lex_compare,
    lex_rank,
    lex_successor,
    lex_unrank,
    max_var,
    maxgen,
    shadow,
    truncate,
)

P = Monomial.parse


def monomials(n_max=5, d_max=6):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.integers(0, d_max), min_size=n, max_size=n).map(lambda e: Monomial(tuple(e)))
    )


def test_str_and_parse():
    u = Monomial((2, 0, 1))
    assert str(u) == "x1^2*x3"
    assert P("x1^2*x3", 3) == u
    assert str(Monomial.unit(3)) == "1"
    assert P("1", 2) == Monomial.unit(2)
    with pytest.raises(ValueError):
        P("x4", 3)
    with pytest.raises(ValueError):
        P("y1", 3)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Monomial((1, -1))


@given(monomials())
def test_parse_roundtrip(u):
    assert P(str(u), u.nvars) == u


def test_lex_compare_examples():
    assert lex_compare(P("x1*x2", 3), P("x1*x3", 3)) > 0
    assert lex_compare(P("x1^2", 3), P("x2^2", 3)) > 0
    u = P("x2*x3", 3)
    assert lex_compare(u, u) == 0


def test_lex_compare_mismatched_rings():
    with pytest.raises(ValueError):
        lex_compare(P("x1", 2), P("x1", 3))


def test_enumerate_examples():
    assert [str(m) for m in enumerate_lex(3, 2)] == ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]
    assert list(enumerate_lex(4, 0)) == [Monomial.unit(4)]
    assert list(enumerate_lex(1, 5)) == [Monomial((5,))]


def test_enumeration_is_strictly_descending_and_complete():
    for n in range(1, 5):
        for d in range(5):
            ms = list(enumerate_lex(n, d))
            assert all(lex_compare(a, b) > 0 for a, b in zip(ms, ms[1:]))
            assert len(ms) == count_monomials(n, d) == binomial(n + d - 1, d)
            everything = {Monomial(e) for e in itertools.product(range(d + 1), repeat=n) if sum(e) == d}
            assert set(ms) == everything


def test_rank_examples():
    assert lex_rank(P("x1^2", 3)) == 0
    assert lex_rank(P("x2^2", 3)) == 3
    assert lex_unrank(3, 2, 5) == P("x3^2", 3)
    with pytest.raises(ValueError):
        lex_unrank(3, 2, 6)


def test_rank_agrees_with_enumeration():
    for n in range(1, 5):
        for d in range(6):
            for k, m in enumerate(enumerate_lex(n, d)):
                assert lex_rank(m) == k
                assert lex_unrank(n, d, k) == m


@given(monomials(n_max=7, d_max=9))
def test_rank_unrank_roundtrip(u):
    assert lex_unrank(u.nvars, u.degree, lex_rank(u)) == u


@given(monomials(n_max=6, d_max=6))
def test_successor_is_previous_rank(u):
    # the successor is the next monomial upward in lex order
    nxt = lex_successor(u)
    k = lex_rank(u)
    if k == 0:
        assert nxt is None
    else:
        assert lex_rank(nxt) == k - 1


def test_max_var_and_lambda():
    u = P("x1*x3^2", 3)
    assert max_var(u) == 3
    assert lam(u) == P("x3", 3)
    with pytest.raises(ValueError):
        max_var(Monomial.unit(3))


def test_maxgen_examples():
    assert maxgen([P("x1*x2", 3), P("x1*x3", 3), P("x2^2", 3)]) == P("x2^2*x3", 3)
    assert maxgen([], nvars=3) == Monomial.unit(3)


nonunit4 = st.lists(st.integers(0, 3), min_size=4, max_size=4).filter(any).map(lambda e: Monomial(tuple(e)))


@given(st.lists(nonunit4, max_size=6), st.lists(nonunit4, max_size=6))
def test_maxgen_multiplicative(A, B):
    # maxgen of a disjoint union (as multisets) is the product
    assert maxgen(A + B, nvars=4) == maxgen(A, nvars=4) * maxgen(B, nvars=4)


def test_truncate_examples():
    assert truncate(P("x1*x2*x3^2", 3), 2) == P("x1*x2", 2)
    u = P("x2*x4", 4)
    assert truncate(u, 4) == u
    assert truncate(P("x3*x4", 4), 2) == Monomial.unit(2)


def test_borel_examples():
    assert borel_gens(P("x2^2", 3)) == {P("x1^2", 3), P("x1*x2", 3), P("x2^2", 3)}
    assert borel_gens(P("x1^4", 3)) == {P("x1^4", 3)}
    for r in range(1, 5):
        for k in range(6):
            assert len(borel_gens(Monomial.var(5, r, k))) == binomial(k + r - 1, r - 1)


def test_borel_direct_matches_closure():
    for n in range(1, 5):
        for d in range(5):
            for u in enumerate_lex(n, d):
                assert borel_gens(u) == borel_closure(u), u


def test_shadow_examples():
    got = shadow([P("x1^2", 3), P("x1*x2", 3), P("x2^2", 3)])
    want = {P(s, 3) for s in ["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3", "x2^3", "x2^2*x3"]}
    assert got == want
    assert shadow([]) == frozenset()
    assert shadow(enumerate_lex(3, 3)) == set(enumerate_lex(3, 4))


def test_shadow_mixed_degree_rejected():
    with pytest.raises(ValueError):
        shadow([P("x1", 2), P("x1^2", 2)])


def test_monomial_algebra():
    u, v = P("x1*x2", 3), P("x2*x3^2", 3)
    assert u * v == P("x1*x2^2*x3^2", 3)
    assert u ** 3 == P("x1^3*x2^3", 3)
    assert u.divides(u * v) and not v.divides(u)
    assert Monomial.from_indices(3, [1, 3, 3]) == P("x1*x3^2", 3)
    assert P("x1*x3^2", 3).indices() == [1, 3, 3]
    assert P("x2^4", 3).deg(2) == 4
