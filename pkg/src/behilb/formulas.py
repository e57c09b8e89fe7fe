"""Closed-form Hilbert series of S/J_G and a structural dispatcher.

The dispatcher (:func:`analyze`) splits a graph along disjoint unions,
joins (disconnected complements) and free-vertex gluings, evaluates the
pieces with the closed forms below, and only falls back to the Groebner
oracle for pieces none of the rules cover.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Sequence

from . import graphs
from .graphs import Graph
from .series import PoleSeries, normalize, poly_add, poly_mul, poly_pow


def _t_linear(a: int) -> tuple[int, ...]:
    """a*t + 1."""
    return (1, a)


def _complete_term(n: int) -> PoleSeries:
    """((n-1)t+1)/(1-t)^(n+1); the unit series for n = 0."""
    if n == 0:
        return PoleSeries.one()
    return normalize(_t_linear(n - 1), n + 1)


def series_complete(n: int) -> PoleSeries:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _complete_term(n)


def series_empty(n: int) -> PoleSeries:
    """n isolated vertices: no relations in 2n variables."""
    return normalize((1,), 2 * n)


def series_path(n: int) -> PoleSeries:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return normalize(poly_pow((1, 1), n - 1), n + 1)


def series_cycle(n: int) -> PoleSeries:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    # (1-t^2)(1+t)^(n-1) + (n-1)t^n + t^(n+1)
    num = poly_mul((1, 0, -1), poly_pow((1, 1), n - 1))
    tail = [0] * (n + 2)
    tail[n] = n - 1
    tail[n + 1] = 1
    return normalize(poly_add(num, tail), n + 1)


def series_decomposable(parts: Sequence[PoleSeries]) -> PoleSeries:
    """Glue r pieces along free vertices: (1-t)^(2r-2) times the product."""
    if not parts:
        raise ValueError("need at least one part")
    out = parts[0]
    for s in parts[1:]:
        out = out * s
    return out.times_one_minus_t(2 * len(parts) - 2)


def series_lollipop(m: int, handles: Sequence[int]) -> PoleSeries:
    k = len(handles)
    if m < 2 or not 1 <= k <= m or any(r < 1 for r in handles):
        raise ValueError(f"invalid lollipop parameters m={m}, handles={list(handles)}")
    r = sum(handles)
    num = poly_mul(_t_linear(m - 1), poly_pow((1, 1), r - k))
    return normalize(num, m + r - k + 1)


def series_join(hs: PoleSeries, hs2: PoleSeries, p: int, q: int) -> PoleSeries:
    """Series of H * H' from those of H (on p vertices) and H' (on q)."""
    if p < 1 or q < 1:
        raise ValueError("join needs p, q >= 1")
    return hs + hs2 + _complete_term(p + q) - _complete_term(p) - _complete_term(q)


def series_join_complete(hs: PoleSeries, p: int, q: int) -> PoleSeries:
    """H * K_q."""
    if q < 1:
        raise ValueError("q must be positive")
    if q == 1:
        return hs + normalize((0, 2, p - 1), p + 2)
    return hs + _complete_term(p + q) - _complete_term(p)


def series_partial_join_complete(hs: PoleSeries, p: int, q: int, r: int) -> PoleSeries:
    """H (*)^r K_q with 1 <= r < q; use :func:`series_join_complete` for r = q."""
    if q < 2 or not 1 <= r < q:
        raise ValueError(f"partial join needs q >= 2 and 1 <= r < q (got q={q}, r={r})")
    return partial_join_formula(hs, p, q, r)


def partial_join_formula(hs: PoleSeries, p: int, q: int, r: int) -> PoleSeries:
    """The partial-join expression without range checks.

    At r = q the factor ((q-r-1)t+1)/(1-t)^(q-r+1) collapses to 1.
    """
    return hs * _complete_term(q - r) + _complete_term(p + q) - _complete_term(p + q - r)


def series_complete_join_empty(p: int, q: int) -> PoleSeries:
    """K_p * K_q^c."""
    return series_empty(q) + _complete_term(p + q) - _complete_term(q)


def series_cone_empty(hs: PoleSeries, p: int, q: int) -> PoleSeries:
    """Connected H on p vertices joined with q isolated vertices."""
    if q < 1:
        raise ValueError("q must be positive")
    return hs + series_complete_join_empty(p, q) - _complete_term(p)


def series_fan(p: int, q: int) -> PoleSeries:
    return series_path(p) + series_empty(q) + _complete_term(p + q) - _complete_term(p) - _complete_term(q)


def series_wheel(p: int) -> PoleSeries:
    """Wheel with a rim of p vertices (p+1 vertices in all)."""
    if p < 3:
        raise ValueError("wheel needs p >= 3")
    return series_cycle(p) + normalize((0, 2, p - 1), p + 2)


def series_multifan(paths: Sequence[int]) -> PoleSeries:
    r = len(paths)
    if r < 2 or any(x < 1 for x in paths):
        raise ValueError("multi-fan needs r >= 2 positive path lengths")
    p = sum(paths)
    return normalize(poly_pow((1, 1), p - r), p + r) + normalize((0, 2, p - 1), p + 2)


def series_kpartite(parts: Sequence[int]) -> PoleSeries:
    if len(parts) < 2 or any(x < 1 for x in parts):
        raise ValueError("k-partite needs k >= 2 positive parts")
    n = sum(parts)
    out = _complete_term(n)
    for pi in sorted(parts, reverse=True):
        out = out + series_empty(pi) - _complete_term(pi)
    return out


# -- published (dim, e) case tables ----------------------------------------

def fan_table(p: int, q: int) -> tuple[int, int]:
    dim = max(2 * q, p + q + 1)
    if p + 1 < q:
        return dim, 1
    if p + 1 == q:
        return dim, p + q + 1
    return dim, p + q


def wheel_table(p: int) -> tuple[int, int]:
    return p + 2, p + 1


def multifan_table(paths: Sequence[int]) -> tuple[int, int]:
    p, r = sum(paths), len(paths)
    e = 2 ** (p - r) if r > 2 else 2 ** (p - r) + p + 1
    return p + r, e


def kpartite_table(parts: Sequence[int]) -> tuple[int, int]:
    n = sum(parts)
    p1 = max(parts)
    dim = max(2 * p1, n + 1)
    if p1 == 1 or 2 * p1 < n + 1:
        return dim, n
    if 2 * p1 > n + 1:
        return dim, 1
    return dim, n + 1


def lollipop_table(m: int, handles: Sequence[int]) -> tuple[int, int]:
    r, k = sum(handles), len(handles)
    return m + r - k + 1, 2 ** (r - k) * m


def cone_multiplicity(h_dim: int, h_mult: int, p: int) -> int:
    """e of H * {v} for connected H on p vertices, from dim and e of H."""
    if h_dim >= p + 3:
        return h_mult
    if h_dim == p + 2:
        return p + 1 + h_mult
    if h_dim == p + 1:
        return p + 1
    raise ValueError(f"case table needs dim(H) >= p+1, got {h_dim} with p={p}")


# -- dispatcher -------------------------------------------------------------

RULE_REFS = {
    "empty-graph": "no variables: series 1",
    "isolated": "one vertex, no relations: 1/(1-t)^2",
    "complete": "determinantal ring: ((n-1)t+1)/(1-t)^(n+1)",
    "path": "(1+t)^(n-1)/(1-t)^(n+1)",
    "cycle": "[(1-t^2)(1+t)^(n-1)+(n-1)t^n+t^(n+1)]/(1-t)^(n+1)",
    "disjoint-union": "tensor product over disjoint variables: product of series",
    "join": "H*H': Hilb_H + Hilb_H' + K_(p+q) - K_p - K_q terms",
    "decomposable": "gluing at free vertices: (1-t)^(2r-2) times product",
    "oracle": "Groebner basis fallback (no structural rule applies)",
}


@dataclass(frozen=True)
class SeriesDerivation:
    rule: str
    graph: Graph
    result: PoleSeries
    children: tuple["SeriesDerivation", ...] = field(default=())

    @property
    def ref(self) -> str:
        return RULE_REFS[self.rule]

    def uses_oracle(self) -> bool:
        return self.rule == "oracle" or any(c.uses_oracle() for c in self.children)

    def rules(self) -> set[str]:
        out = {self.rule}
        for c in self.children:
            out |= c.rules()
        return out

    def replay(self) -> PoleSeries:
        """Recompute the result bottom-up from the trace."""
        g = self.graph
        kids = [c.replay() for c in self.children]
        if self.rule in ("oracle", "empty-graph", "isolated", "complete", "path", "cycle"):
            return _base_series(self.rule, g) if self.rule != "oracle" else self.result
        if self.rule == "disjoint-union":
            out = PoleSeries.one()
            for s in kids:
                out = out * s
            return out
        if self.rule == "join":
            a, b = self.children
            return series_join(kids[0], kids[1], a.graph.n, b.graph.n)
        if self.rule == "decomposable":
            return series_decomposable(kids)
        raise ValueError(f"unknown rule {self.rule!r}")

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "ref": self.ref,
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges]},
            "series": self.result.to_dict(),
            "children": [c.to_dict() for c in self.children],
        }

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}{self.rule} [n={self.graph.n}, m={len(self.graph.edges)}] {self.result}   # {self.ref}"]
        for c in self.children:
            lines.append(c.render(indent + 1))
        return "\n".join(lines)


def _base_series(rule: str, g: Graph) -> PoleSeries:
    if rule == "empty-graph":
        return PoleSeries.one()
    if rule == "isolated":
        return series_empty(1)
    if rule == "complete":
        return series_complete(g.n)
    if rule == "path":
        return series_path(g.n)
    if rule == "cycle":
        return series_cycle(g.n)
    raise ValueError(rule)


def _path_order(g: Graph) -> list[int] | None:
    """Vertex sequence if g is a path (any labeling), else None."""
    if g.n == 1:
        return [1]
    if len(g.edges) != g.n - 1 or any(g.degree(v) > 2 for v in g.vertices):
        return None
    ends = [v for v in g.vertices if g.degree(v) == 1]
    if len(ends) != 2:
        return None
    seq = [ends[0]]
    prev = None
    while len(seq) < g.n:
        nxt = [w for w in g.adj[seq[-1]] if w != prev]
        if not nxt:
            return None
        prev = seq[-1]
        seq.append(nxt[0])
    return seq


def is_path_graph(g: Graph) -> bool:
    return g.n >= 1 and _path_order(g) is not None


def is_cycle_graph(g: Graph) -> bool:
    return (
        g.n >= 3
        and len(g.edges) == g.n
        and all(g.degree(v) == 2 for v in g.vertices)
        and graphs.is_connected(g)
    )


_memo: dict[Graph, SeriesDerivation] = {}
_memo_lock = threading.Lock()


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


def analyze(g: Graph, oracle_limit: int | None = None) -> SeriesDerivation:
    """Series of S/J_G with a trace of the rules that produced it.

    Rules are tried in order: trivial and complete graphs, disjoint unions,
    cycles, joins (peeling the smallest complement component first),
    free-vertex decompositions, paths, and finally the oracle.
    """
    with _memo_lock:
        hit = _memo.get(g)
    if hit is not None:
        _recheck_guard(hit, oracle_limit)
        return hit
    d = _analyze(g, oracle_limit)
    with _memo_lock:
        if len(_memo) > 200_000:
            _memo.clear()
        _memo[g] = d
    return d


def _recheck_guard(d: SeriesDerivation, oracle_limit: int | None) -> None:
    # a cached trace may have used the oracle under a looser guard
    from .oracle import oracle_series

    stack = [d]
    while stack:
        node = stack.pop()
        if node.rule == "oracle":
            oracle_series(node.graph, limit=oracle_limit)
        stack.extend(node.children)


def _leaf(rule: str, g: Graph) -> SeriesDerivation:
    return SeriesDerivation(rule, g, _base_series(rule, g))


def _analyze(g: Graph, oracle_limit: int | None) -> SeriesDerivation:
    if g.n == 0:
        return _leaf("empty-graph", g)
    if g.n == 1:
        return _leaf("isolated", g)
    if g.is_complete():
        return _leaf("complete", g)

    comps = graphs.connected_components(g)
    if len(comps) > 1:
        kids = tuple(analyze(g.induced(c), oracle_limit) for c in comps)
        out = PoleSeries.one()
        for k in kids:
            out = out * k.result
        return SeriesDerivation("disjoint-union", g, out, kids)

    if is_cycle_graph(g):
        return _leaf("cycle", g)

    co = graphs.connected_components(graphs.complement(g))
    if len(co) > 1:
        first = min(co, key=lambda c: (len(c), c))
        rest = [v for v in g.vertices if v not in set(first)]
        a = analyze(g.induced(first), oracle_limit)
        b = analyze(g.induced(rest), oracle_limit)
        out = series_join(a.result, b.result, len(first), len(rest))
        return SeriesDerivation("join", g, out, (a, b))

    dec = graphs.decompose(g)
    if len(dec) > 1:
        kids = tuple(analyze(g.induced(c), oracle_limit) for c in dec.components)
        out = series_decomposable([k.result for k in kids])
        return SeriesDerivation("decomposable", g, out, kids)

    if is_path_graph(g):
        return _leaf("path", g)

    from .oracle import oracle_series

    return SeriesDerivation("oracle", g, oracle_series(g, limit=oracle_limit))


def analyze_series(g: Graph) -> PoleSeries:
    return analyze(g).result

