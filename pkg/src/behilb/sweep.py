"""Exhaustive formula-versus-oracle sweeps over small labeled graphs."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .graphs import Graph, is_connected
from .oracle import verify


def labeled_graphs(n: int, connected: bool = True) -> Iterator[Graph]:
    """All labeled simple graphs on [n], by edge subset, optionally connected only."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for k, p in enumerate(pairs) if mask >> k & 1))
        if not connected or is_connected(g):
            yield g


def canonical_form(g: Graph) -> Graph:
    """Lexicographically least relabeling; brute force, for n <= 7."""
    if g.n > 7:
        raise ValueError("naive canonical form is limited to n <= 7")
    best = None
    for perm in itertools.permutations(range(1, g.n + 1)):
        edges = tuple(sorted((min(perm[i - 1], perm[j - 1]), max(perm[i - 1], perm[j - 1])) for i, j in g.edges))
        if best is None or edges < best:
            best = edges
    return Graph(g.n, best or ())


@dataclass
class SweepRow:
    n: int
    graphs: int = 0
    formula: int = 0
    fallback: int = 0
    mismatches: list[Graph] = field(default_factory=list)
    dim_mismatches: list[Graph] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.dim_mismatches


def _check(g: Graph) -> tuple[Graph, bool, bool, bool]:
    report = verify(g)
    return g, report.used_fallback, report.equal, report.dim_ok


def sweep(max_n: int, dedup: bool = False, jobs: int = 1) -> list[SweepRow]:
    """Verify every connected labeled graph on 1..max_n vertices."""
    rows = []
    for n in range(1, max_n + 1):
        start = time.perf_counter()
        todo = list(labeled_graphs(n))
        if dedup:
            todo = sorted({canonical_form(g) for g in todo}, key=lambda g: g.edges)
        row = SweepRow(n)
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                results = list(pool.map(_check, todo, chunksize=64))
        else:
            results = [_check(g) for g in todo]
        for g, fallback, equal, dim_ok in sorted(results, key=lambda r: r[0].edges):
            row.graphs += 1
            if fallback:
                row.fallback += 1
            else:
                row.formula += 1
            if not equal:
                row.mismatches.append(g)
            if not dim_ok:
                row.dim_mismatches.append(g)
        row.seconds = time.perf_counter() - start
        rows.append(row)
    return rows


def format_table(rows: list[SweepRow]) -> str:
    lines = [f"{'n':>3} {'graphs':>7} {'formula':>8} {'fallback':>9} {'mismatch':>9} {'dim-bad':>8} {'sec':>8}"]
    for r in rows:
        lines.append(
            f"{r.n:>3} {r.graphs:>7} {r.formula:>8} {r.fallback:>9} "
            f"{len(r.mismatches):>9} {len(r.dim_mismatches):>8} {r.seconds:>8.2f}"
        )
    return "\n".join(lines)
