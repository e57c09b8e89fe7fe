
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import small_graphs

from behilb import graphs as G
from behilb.formulas import (
    analyze,
    cone_multiplicity,
    kpartite_table,
    lollipop_table,
    multifan_table,
    partial_join_formula,
    series_complete,
    series_cone_empty,
    series_cycle,
    series_decomposable,
    series_empty,
    series_fan,
    series_join,
    series_join_complete,
    series_kpartite,
    series_lollipop,
    series_multifan,
    series_partial_join_complete,
    series_path,
    series_wheel,
    wheel_table,
)
from behilb.graphs import dimension_from_cutsets
from behilb.oracle import oracle_series
from behilb.series import PoleSeries, normalize


def S(num, pole):
    return normalize(num, pole)


# base cases

def test_complete_series():
    assert series_complete(3) == S([1, 2], 4)
    assert series_complete(1) == S([1], 2)
    assert series_complete(2) == S([1, 1], 3) == oracle_series(G.complete(2))
    assert series_complete(0) == PoleSeries.one()


def test_path_series():
    assert series_path(1) == S([1], 2)
    assert series_path(4) == S([1, 3, 3, 1], 5)
    assert series_path(2) == series_complete(2)


def test_cycle_series():
    assert series_cycle(3) == series_complete(3) == S([1, 2], 4)
    assert series_cycle(4) == oracle_series(G.cycle(4))
    assert series_cycle(4) == series_kpartite([2, 2])
    with pytest.raises(ValueError):
        series_cycle(2)


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_matches_oracle(n):
    assert series_cycle(n) == oracle_series(G.cycle(n))


# decomposable graphs

@pytest.mark.parametrize("n", range(2, 9))
def test_decomposable_path(n):
    assert series_decomposable([series_complete(2)] * (n - 1)) == series_path(n)


def test_decomposable_closed_graph():
    ms = [3, 2, 4]
    n = sum(ms) - len(ms) + 1
    got = series_decomposable([series_complete(m) for m in ms])
    from behilb.series import poly_mul

    num = (1,)
    for m in ms:
        num = poly_mul(num, (1, m - 1))
    assert got == S(num, n + 1)
    assert got.hilbert_data().multiplicity == 3 * 2 * 4


def test_decomposable_single_part():
    s = series_cycle(5)
    assert series_decomposable([s]) == s


# lollipops

def test_lollipop_series():
    s = series_lollipop(3, [2])
    assert s == S([1, 3, 2], 5)
    assert s.hilbert_data().multiplicity == 6
    assert series_lollipop(4, [1, 1]) == S([1, 3], 5)
    assert series_lollipop(4, [1, 1]).hilbert_data().multiplicity == 4


def test_lollipop_family_dimension_and_oracle():
    g = G.lollipop(3, [2])
    assert dimension_from_cutsets(g) == 5
    assert oracle_series(g) == series_lollipop(3, [2])


def test_lollipop_m2_is_a_path():
    g = G.lollipop(2, [1])
    assert g == G.path(2)
    assert series_lollipop(2, [1]) == analyze(g).result == series_path(2)
    assert series_lollipop(2, [3]) == series_path(4) == analyze(G.lollipop(2, [3])).result


@pytest.mark.parametrize("m,handles", [(3, [2]), (3, [2, 2]), (4, [1, 3]), (2, [2, 2]), (3, [1, 2, 2])])
def test_lollipop_against_dispatcher(m, handles):
    g = G.lollipop(m, handles)
    assert analyze(g).result == series_lollipop(m, handles)
    assert series_lollipop(m, handles).hilbert_data().dim == lollipop_table(m, handles)[0]


# joins

def test_join_k1_k1():
    k1 = series_complete(1)
    assert series_join(k1, k1, 1, 1) == series_complete(2)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 5) for q in range(1, 5)])
def test_complete_join_empty_composite(p, q):
    # K_p * K_q^c by the general join formula versus the stated closed form
    closed = S([1], 2 * q) + S([1, p + q - 1], p + q + 1) - S([1, q - 1], q + 1)
    assert series_join(series_complete(p), series_empty(q), p, q) == closed


def test_join_figure_graph_matches_oracle():
    g = G.join(G.complete(4), G.empty(3))
    want = series_join(series_complete(4), series_empty(3), 4, 3)
    assert oracle_series(g) == want


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 6) for q in range(1, 6)])
def test_join_complete_with_complete(p, q):
    assert series_join_complete(series_complete(p), p, q) == series_complete(p + q)


def test_wheel_via_cone():
    s = series_join_complete(series_cycle(4), 4, 1)
    data = s.hilbert_data()
    assert (data.dim, data.multiplicity) == (6, 5)
    assert s == oracle_series(G.wheel(4))


def test_multifan_via_cone():
    h = series_path(2) * series_path(2)
    s = series_join_complete(h, 4, 1)
    assert s.hilbert_data().multiplicity == 2 ** (4 - 2) + 4 + 1 == 9
    assert s == oracle_series(G.multifan([2, 2]))


def test_partial_join_examples():
    assert series_partial_join_complete(series_complete(1), 1, 2, 1) == S([1, 2, 1], 4)
    g = G.partial_join(G.path(3), 4, 2)
    assert series_partial_join_complete(series_path(3), 3, 4, 2) == oracle_series(g)
    g = G.partial_join(G.complete(2), 3, 2)
    assert series_partial_join_complete(series_complete(2), 2, 3, 2) == oracle_series(g)
    with pytest.raises(ValueError):
        series_partial_join_complete(series_path(3), 3, 4, 4)
    with pytest.raises(ValueError):
        series_partial_join_complete(series_path(3), 3, 4, 0)


@pytest.mark.parametrize("h,q,r", [(G.path(2), 3, 1), (G.empty(2), 3, 2), (G.cycle(4), 2, 1), (G.path(3), 3, 1)])
def test_partial_join_against_oracle(h, q, r):
    want = oracle_series(G.partial_join(h, q, r))
    assert series_partial_join_complete(oracle_series(h), h.n, q, r) == want


def test_cone_empty_examples():
    for p in range(1, 6):
        hs = series_path(p)
        assert series_cone_empty(hs, p, 1) == hs + S([0, 2, p - 1], p + 2)
        for q in range(1, 5):
            assert series_cone_empty(series_path(p), p, q) == series_fan(p, q)
            assert series_cone_empty(series_complete(p), p, q) == series_kpartite([1] * p + [q])


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 5) for q in range(1, 4) if p + q <= 6])
def test_fan_matches_oracle(p, q):
    assert series_fan(p, q) == oracle_series(G.fan(p, q))


def test_family_examples():
    d = series_multifan([2, 2]).hilbert_data()
    assert (d.dim, d.multiplicity) == (6, 9)
    d = series_kpartite([3, 1]).hilbert_data()
    assert (d.dim, d.multiplicity) == (6, 1)
    assert series_kpartite([1, 1, 1]) == series_complete(3)


@pytest.mark.parametrize("parts", [[1, 1], [2, 1], [2, 2], [3, 1], [2, 1, 1], [3, 2], [2, 2, 1], [4, 1]])
def test_kpartite_matches_oracle(parts):
    assert series_kpartite(parts) == oracle_series(G.kpartite(parts))
    d = series_kpartite(parts).hilbert_data()
    assert (d.dim, d.multiplicity) == kpartite_table(parts)


@pytest.mark.parametrize("paths", [[1, 1], [2, 1], [2, 2], [1, 1, 1], [2, 1, 1], [3, 2]])
def test_multifan_matches_oracle(paths):
    s = series_multifan(paths)
    assert s == oracle_series(G.multifan(paths))
    d = s.hilbert_data()
    assert (d.dim, d.multiplicity) == multifan_table(paths)


@pytest.mark.parametrize("p", [3, 4, 5])
def test_wheel_matches_oracle(p):
    s = series_wheel(p)
    assert s == oracle_series(G.wheel(p))
    d = s.hilbert_data()
    assert (d.dim, d.multiplicity) == wheel_table(p)


def test_cone_multiplicity_table():
    # checked where its precondition dim(H) >= p + 1 holds
    for h in [G.path(3), G.cycle(4), G.cycle(5), G.complete(3), G.kpartite([1, 3]), G.lollipop(3, [2])]:
        hs = analyze(h).result
        d = hs.hilbert_data()
        cone = series_join_complete(hs, h.n, 1).hilbert_data()
        assert d.dim >= h.n + 1
        assert cone.multiplicity == cone_multiplicity(d.dim, d.multiplicity, h.n)


# consistency identities (pure algebra)

def _sample_series(p):
    out = [series_complete(p), series_path(p), series_empty(p)]
    if p >= 3:
        out.append(series_cycle(p))
    return out


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 6) for q in range(1, 6)])
def test_consistency_identities(p, q):
    for hs in _sample_series(p):
        assert series_join_complete(hs, p, q) == series_join(hs, series_complete(q), p, q)
        assert partial_join_formula(hs, p, q, q) == series_join_complete(hs, p, q)
        for hs2 in _sample_series(q):
            assert series_join(hs, hs2, p, q) == series_join(hs2, hs, q, p)
    assert series_fan(p, q) == series_cone_empty(series_path(p), p, q)


# dispatcher

def test_analyze_wheel_trace():
    d = analyze(G.wheel(4))
    assert d.rule == "join"
    assert {c.rule for c in d.children} == {"isolated", "cycle"}
    assert d.result == series_wheel(4)


def test_analyze_path_trace():
    d = analyze(G.path(5))
    assert d.rule == "decomposable"
    assert [c.rule for c in d.children] == ["complete"] * 4
    assert d.result == series_path(5)


def test_analyze_fallback():
    g = G.build_graph(5, list(G.cycle(5).edges) + [(1, 3)])
    d = analyze(g)
    assert d.rule == "oracle" and d.uses_oracle()
    assert d.result == oracle_series(g)
    assert d.result.pole == dimension_from_cutsets(g)


def test_analyze_disconnected():
    g = G.disjoint_union(G.path(3), G.cycle(4))
    d = analyze(g)
    assert d.rule == "disjoint-union"
    assert d.result == series_path(3) * series_cycle(4) == oracle_series(g)


def test_trace_replay_and_json():
    for g in [G.wheel(5), G.fan(3, 2), G.lollipop(3, [2, 2]), G.partial_join(G.path(3), 3, 1)]:
        d = analyze(g)
        assert d.replay() == d.result
        data = d.to_dict()
        assert set(data) == {"rule", "ref", "graph", "series", "children"}


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6), st.randoms(use_true_random=False))
def test_relabeling_invariance(g, rnd):
    perm = list(range(1, g.n + 1))
    rnd.shuffle(perm)
    assert analyze(g).result == analyze(g.relabel(perm)).result


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6))
def test_analyze_matches_oracle_random(g):
    d = analyze(g)
    assert d.result == oracle_series(g)
    assert d.result.pole == dimension_from_cutsets(g)
    assert d.replay() == d.result
