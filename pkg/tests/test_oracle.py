import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from strategies import small_graphs

from behilb import graphs as G
from behilb.graphs import SizeGuardError
from behilb.oracle import (
    MonomialIdeal,
    SparsePoly,
    binomial_edge_groebner,
    binomial_generators,
    degrevlex,
    groebner,
    inclusion_exclusion_numerator,
    initial_ideal,
    is_groebner_basis,
    lex,
    minimalize,
    monomial_numerator,
    oracle_initial_ideal,
    oracle_series,
    verify,
)
from behilb.oracle.polys import sparse_exponents
from behilb.series import normalize


def mono(n, xs=(), ys=()):
    m = [0] * (2 * n)
    for i in xs:
        m[i - 1] += 1
    for j in ys:
        m[n + j - 1] += 1
    return tuple(m)


def binom(n, i, j):
    return SparsePoly({mono(n, [i], [j]): 1, mono(n, [j], [i]): -1}, 2 * n)


# generators

def test_generators_k2():
    assert binomial_generators(G.complete(2)) == [binom(2, 1, 2)]


def test_generators_edgeless():
    assert binomial_generators(G.empty(3)) == []


def test_generators_p3():
    assert binomial_generators(G.path(3)) == [binom(3, 1, 2), binom(3, 2, 3)]


def test_sparse_exponents():
    assert sparse_exponents(mono(3, [1], [2])) == {1: 1, 5: 1}


# orders

def test_leading_terms_are_x_i_y_j():
    n = 4
    for order in (degrevlex(n), lex(n)):
        for i, j in itertools.combinations(range(1, n + 1), 2):
            assert binom(n, i, j).leading_monomial(order) == mono(n, [i], [j])


def test_degrevlex_compares_degree_first():
    o = degrevlex(2)
    assert o.key(mono(2, [1, 1])) > o.key(mono(2, [], [1]))


# groebner

def test_single_binomial_is_its_own_basis():
    f = binom(2, 1, 2)
    assert groebner([f], degrevlex(2)) == [f]


def test_path3_basis_is_quadratic():
    gb = binomial_edge_groebner(G.path(3))
    assert sorted(gb, key=repr) == sorted(binomial_generators(G.path(3)), key=repr)


def test_cycle4_basis_grows():
    gb = binomial_edge_groebner(G.cycle(4))
    assert len(gb) > 4
    assert any(max(sum(m) for m in f.terms) == 3 for f in gb)
    assert is_groebner_basis(gb, degrevlex(4))


def test_groebner_is_reduced_and_monic():
    g = G.cycle(5)
    order = degrevlex(5)
    gb = binomial_edge_groebner(g, order)
    lms = [f.leading_monomial(order) for f in gb]
    for f, lm in zip(gb, lms):
        assert f.terms[lm] == 1
        others = [m for m in lms if m != lm]
        for m in f.terms:
            assert not any(all(a <= b for a, b in zip(o, m)) for o in others)


def test_groebner_general_rational_input():
    # non-binomial input exercises the rational arithmetic
    n = 2
    x1, x2, y1, y2 = (mono(n, [1]), mono(n, [2]), mono(n, [], [1]), mono(n, [], [2]))
    f = SparsePoly({tuple(a + b for a, b in zip(x1, x1)): 2, tuple(a + b for a, b in zip(x2, y1)): Fraction(1, 3)}, 4)
    g = SparsePoly({tuple(a + b for a, b in zip(x1, y2)): 3, tuple(a + b for a, b in zip(y1, y2)): -1}, 4)
    gb = groebner([f, g], degrevlex(n))
    assert is_groebner_basis(gb, degrevlex(n))
    assert all(h.leading_coefficient(degrevlex(n)) == 1 for h in gb)


@pytest.mark.parametrize("n", range(1, 6))
def test_spair_postcondition_families(n):
    for g in [G.path(n), G.complete(n)] + ([G.cycle(n)] if n >= 3 else []):
        for order in (degrevlex(n), lex(n)):
            assert is_groebner_basis(binomial_edge_groebner(g, order), order)


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=5))
def test_spair_postcondition_random(g):
    order = degrevlex(g.n)
    assert is_groebner_basis(binomial_edge_groebner(g, order), order)


# initial ideals

def test_initial_ideal_examples():
    o = degrevlex(2)
    assert initial_ideal([binom(2, 1, 2)], o).generators == (mono(2, [1], [2]),)
    assert oracle_initial_ideal(G.path(3)).generators == tuple(sorted([mono(3, [1], [2]), mono(3, [2], [3])]))
    assert initial_ideal([], o, 4).is_zero()


# monomial numerators

def test_numerator_principal():
    assert monomial_numerator(MonomialIdeal.of([mono(2, [1], [2])], 4)) == (1, 0, -1)


def test_numerator_path3():
    ideal = MonomialIdeal.of([mono(3, [1], [2]), mono(3, [2], [3])], 6)
    assert monomial_numerator(ideal) == (1, 0, -2, 0, 1)
    assert normalize(monomial_numerator(ideal), 6) == normalize((1, 2, 1), 4)


def test_minimalization_invariance():
    x1 = (1, 0, 0)
    x1x2 = (1, 1, 0)
    assert minimalize([x1, x1x2]) == (x1,)
    assert monomial_numerator([x1, x1x2], 3) == monomial_numerator([x1], 3)


def test_numerator_zero_and_unit_ideals():
    assert monomial_numerator([], 3) == (1,)
    assert monomial_numerator([(0, 0, 0)], 3) == ()


def _random_ideal(rnd):
    nv = rnd.randint(1, 10)
    k = rnd.randint(0, 12)
    gens = []
    for _ in range(k):
        gens.append(tuple(rnd.choice([0, 0, 0, 1, 1, 2, 3]) for _ in range(nv)))
    return nv, gens


@pytest.mark.parametrize("seed", range(40))
def test_numerator_matches_inclusion_exclusion(seed):
    nv, gens = _random_ideal(random.Random(seed))
    assert monomial_numerator(gens, nv) == inclusion_exclusion_numerator(gens)


# oracle series

def test_oracle_examples():
    assert oracle_series(G.complete(3)) == normalize((1, 2), 4)
    c5 = normalize((1, 4, 5, 0, -5), 6)
    assert oracle_series(G.cycle(5)) == c5
    assert oracle_series(G.empty(2)) == normalize((1,), 4)
    assert oracle_series(G.Graph(0, ())) == normalize((1,), 0)


def test_oracle_guard(monkeypatch):
    with pytest.raises(SizeGuardError):
        oracle_series(G.path(5), limit=8)
    monkeypatch.setenv("BEHILB_MAX_VARS", "6")
    with pytest.raises(SizeGuardError):
        oracle_series(G.path(4))


@pytest.mark.parametrize("g", [G.cycle(4), G.path(4), G.kpartite([1, 3]), G.fan(2, 2), G.complete(4)])
def test_order_independence(g):
    assert oracle_series(g, "degrevlex") == oracle_series(g, "lex")


@settings(max_examples=25, deadline=None)
@given(small_graphs(max_n=4), small_graphs(max_n=3))
def test_oracle_multiplicative_on_disjoint_union(g, h):
    assert oracle_series(G.disjoint_union(g, h)) == oracle_series(g) * oracle_series(h)


# verify

def test_verify_wheel():
    report = verify(G.wheel(4))
    assert report.ok and report.equal
    data = report.formula.hilbert_data()
    assert (data.dim, data.multiplicity) == (6, 5)


def test_verify_fan_2_3():
    report = verify(G.fan(2, 3))
    assert report.ok
    data = report.formula.hilbert_data()
    assert (data.dim, data.multiplicity) == (6, 6)


def test_verify_k2():
    report = verify(G.complete(2))
    assert report.ok and not report.used_fallback
    assert report.to_dict()["equal"] is True


# GB dump format

def test_render_dump():
    gb = binomial_edge_groebner(G.path(3))
    assert [f.render(degrevlex(3), 3) for f in gb] == ["+1*x2*y3-1*x3*y2", "+1*x1*y2-1*x2*y1"]
