"""Finite simple graphs on [n] and the structure the series formulas use.

Vertices are the integers 1..n. All graph values are immutable; every
operation returns a new graph.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


class SizeGuardError(RuntimeError):
    """Raised when an exponential computation would exceed its size guard."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """adj[v] for v in 1..n; adj[0] is unused."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled 1..k in increasing vertex order."""
        vs = sorted(set(vertices))
        pos = {v: k + 1 for k, v in enumerate(vs)}
        edges = [(pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos]
        return Graph(len(vs), tuple(sorted(edges)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v-1]."""
        return build_graph(self.n, [(perm[i - 1], perm[j - 1]) for i, j in self.edges])

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    norm = set()
    for e in edges:
        i, j = e
        if i == j:
            raise GraphError(f"loop edge ({i}, {j})")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"edge ({i}, {j}) has a vertex outside 1..{n}")
        norm.add((min(i, j), max(i, j)))
    return Graph(n, tuple(sorted(norm)))


# -- constructions ----------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph(n, ())


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edges)
        offset += g.n
    return Graph(offset, tuple(sorted(edges)))


def complement(g: Graph) -> Graph:
    present = g.edge_set
    return Graph(g.n, tuple(e for e in itertools.combinations(g.vertices, 2) if e not in present))


def join(h: Graph, h2: Graph) -> Graph:
    """H * H': vertices of H' are shifted by H.n; all cross edges added."""
    p = h.n
    cross = [(i, p + j) for i in range(1, p + 1) for j in range(1, h2.n + 1)]
    shifted = [(i + p, j + p) for i, j in h2.edges]
    return Graph(p + h2.n, tuple(sorted(list(h.edges) + shifted + cross)))


def partial_join(h: Graph, q: int, r: int) -> Graph:
    """H (*)^r K_q: K_q on p+1..p+q, first r of those joined to all of H."""
    if not 1 <= r <= q:
        raise GraphError(f"partial join needs 1 <= r <= q, got r={r}, q={q}")
    p = h.n
    clique = [(p + i, p + j) for i, j in itertools.combinations(range(1, q + 1), 2)]
    cross = [(i, p + j) for i in range(1, p + 1) for j in range(1, r + 1)]
    return Graph(p + q, tuple(sorted(list(h.edges) + clique + cross)))


def lollipop(m: int, handles: Sequence[int]) -> Graph:
    """K_m on 1..m; handle i (a path on handles[i] vertices) hangs off m-i.

    Handle vertices are numbered consecutively after the clique, each path
    starting next to its clique vertex.
    """
    k = len(handles)
    if m < 2:
        raise GraphError("lollipop needs m >= 2")
    if not 1 <= k <= m:
        raise GraphError(f"lollipop needs 1 <= k <= m handles, got k={k}")
    if any(r < 1 for r in handles):
        raise GraphError("handle lengths must be positive")
    edges = list(itertools.combinations(range(1, m + 1), 2))
    nxt = m + 1
    for idx, r in enumerate(handles):
        prev = m - idx
        for _ in range(r - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt - 1, edges)


def fan(p: int, q: int) -> Graph:
    """P_p * K_q^c."""
    if p < 1 or q < 1:
        raise GraphError("fan needs p, q >= 1")
    return join(path(p), empty(q))


def multifan(paths: Sequence[int]) -> Graph:
    """(P_{p_1} + ... + P_{p_r}) * {v}; the cone vertex is labeled last."""
    if len(paths) < 2:
        raise GraphError("multi-fan needs at least two paths")
    return join(disjoint_union(*(path(p) for p in paths)), empty(1))


def wheel(p: int) -> Graph:
    """C_p * {v}: the wheel on p+1 vertices, hub labeled p+1."""
    if p < 3:
        raise GraphError("wheel needs a rim of at least 3 vertices")
    return join(cycle(p), empty(1))


def kpartite(parts: Sequence[int]) -> Graph:
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise GraphError("k-partite needs k >= 2 positive part sizes")
    g = empty(parts[0])
    for p in parts[1:]:
        g = join(g, empty(p))
    return g


# -- structure --------------------------------------------------------------

def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Components of g (or of the induced subgraph on ``within``), sorted."""
    allowed = set(g.vertices if within is None else within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2))


def is_free_vertex(g: Graph, v: int, within: Iterable[int] | None = None) -> bool:
    """v lies in exactly one maximal clique, i.e. its neighbourhood is a clique."""
    nbrs = g.adj[v] if within is None else g.adj[v] & set(within)
    return is_clique(g, nbrs)


@dataclass(frozen=True)
class Decomposition:
    """Indecomposable pieces (vertex sets of g) and their shared vertices."""

    components: tuple[tuple[int, ...], ...]
    gluing: tuple[tuple[int, int, int], ...]

    def __len__(self) -> int:
        return len(self.components)


def _split(g: Graph, part: frozenset[int]) -> tuple[frozenset[int], frozenset[int]] | None:
    for v in sorted(part):
        rest = part - {v}
        comps = connected_components(g, rest)
        if len(comps) != 2:
            continue
        a = frozenset(comps[0]) | {v}
        b = frozenset(comps[1]) | {v}
        if is_free_vertex(g, v, a) and is_free_vertex(g, v, b):
            return a, b
    return None


def decompose(g: Graph) -> Decomposition:
    """Unique decomposition into indecomposable induced subgraphs.

    Disconnected graphs are decomposed component by component.
    """
    pieces: list[frozenset[int]] = []
    todo = [frozenset(c) for c in connected_components(g)]
    while todo:
        part = todo.pop()
        halves = _split(g, part)
        if halves is None:
            pieces.append(part)
        else:
            todo.extend(halves)
    comps = sorted((tuple(sorted(p)) for p in pieces), key=lambda c: (c[0], len(c), c))
    gluing = []
    for i, j in itertools.combinations(range(len(comps)), 2):
        shared = set(comps[i]) & set(comps[j])
        if shared:
            (v,) = shared
            gluing.append((i, j, v))
    return Decomposition(tuple(comps), tuple(gluing))


# -- cut-point sets ---------------------------------------------------------

DEFAULT_CUTSET_LIMIT = 22


@dataclass(frozen=True)
class CutSet:
    """T with the cut point property and the components of G on the rest."""

    T: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def c(self) -> int:
        return len(self.components)

    def dimension(self, n: int) -> int:
        """dim S/P_T(G) = n - |T| + c(T)."""
        return n - len(self.T) + self.c


def _component_count(adjmask: Sequence[int], mask: int) -> int:
    count = 0
    while mask:
        low = mask & -mask
        frontier = low
        seen = low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = adjmask[bit.bit_length() - 1] & mask & ~seen
            seen |= new
            frontier |= new
        mask &= ~seen
        count += 1
    return count


def cut_point_sets(g: Graph, limit: int | None = None) -> list[CutSet]:
    """All T in C(G): the empty set and every T whose members are cut
    vertices of G restricted to the complement of T plus themselves."""
    if limit is None:
        limit = int(os.environ.get("BEHILB_CUTSET_LIMIT", DEFAULT_CUTSET_LIMIT))
    n = g.n
    if n > limit:
        raise SizeGuardError(f"cut-point enumeration refused for n={n} > {limit}")
    adjmask = [0] * n
    for i, j in g.edges:
        adjmask[i - 1] |= 1 << (j - 1)
        adjmask[j - 1] |= 1 << (i - 1)
    full = (1 << n) - 1
    counts: dict[int, int] = {}

    def c(rest: int) -> int:
        if rest not in counts:
            counts[rest] = _component_count(adjmask, rest)
        return counts[rest]

    found = [0]
    for T in range(1, full + 1):
        rest = full & ~T
        ok = True
        bits = T
        while bits:
            bit = bits & -bits
            bits ^= bit
            # a cut vertex needs neighbours in two different components
            if bin(adjmask[bit.bit_length() - 1] & rest).count("1") < 2:
                ok = False
                break
        if not ok:
            continue
        base = c(rest)
        bits = T
        while bits:
            bit = bits & -bits
            bits ^= bit
            if c(rest | bit) >= base:
                ok = False
                break
        if ok:
            found.append(T)
    out = []
    for T in found:
        members = tuple(v for v in g.vertices if T >> (v - 1) & 1)
        rest = [v for v in g.vertices if not T >> (v - 1) & 1]
        out.append(CutSet(members, tuple(connected_components(g, rest))))
    out.sort(key=lambda cs: (len(cs.T), cs.T))
    return out


def dimension_from_cutsets(g: Graph, limit: int | None = None) -> int:
    """Krull dimension of S/J_G as the largest dim S/P_T(G) over C(G)."""
    return max(cs.dimension(g.n) for cs in cut_point_sets(g, limit))


# -- edge-list text format --------------------------------------------------

class GraphParseError(GraphError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by m lines ``u v``; ``#`` starts a comment."""
    rows: list[tuple[int, list[tuple[int, str]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            tokens.append((col + 1, tok))
            col += len(tok)
        if tokens:
            rows.append((lineno, tokens))
    if not rows:
        raise GraphParseError("empty input, expected header 'n m'", 1)

    def ints(lineno: int, tokens: list[tuple[int, str]], what: str) -> tuple[int, int]:
        if len(tokens) != 2:
            col = tokens[2][0] if len(tokens) > 2 else tokens[-1][0]
            raise GraphParseError(f"expected two integers ({what})", lineno, col)
        vals = []
        for col, tok in tokens:
            try:
                vals.append(int(tok))
            except ValueError:
                raise GraphParseError(f"not an integer: {tok!r}", lineno, col) from None
        return vals[0], vals[1]

    lineno, tokens = rows[0]
    n, m = ints(lineno, tokens, "header n m")
    if n < 0 or m < 0:
        raise GraphParseError("negative count in header", lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise GraphParseError(f"header announces {m} edges, found {len(body)}", where)
    edges = []
    for lineno, tokens in body:
        u, v = ints(lineno, tokens, "edge u v")
        try:
            edges.extend(build_graph(n, [(u, v)]).edges)
        except GraphError as exc:
            raise GraphParseError(str(exc), lineno, tokens[0][0]) from None
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"
