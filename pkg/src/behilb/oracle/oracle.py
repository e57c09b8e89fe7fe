"""Ground-truth Hilbert series of S/J_G from a Groebner basis of J_G."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..graphs import Graph, SizeGuardError, dimension_from_cutsets
from ..series import PoleSeries, normalize
from .groebner import groebner
from .monomial import MonomialIdeal, initial_ideal, monomial_numerator
from .polys import ORDERS, MonomialOrder, SparsePoly

DEFAULT_MAX_VARS = 16


def max_vars() -> int:
    return int(os.environ.get("BEHILB_MAX_VARS", DEFAULT_MAX_VARS))


def binomial_generators(g: Graph) -> list[SparsePoly]:
    """x_i y_j - x_j y_i for every edge {i, j}, i < j."""
    n = g.n
    out = []
    for i, j in g.edges:
        a = [0] * (2 * n)
        a[i - 1] = 1
        a[n + j - 1] = 1
        b = [0] * (2 * n)
        b[j - 1] = 1
        b[n + i - 1] = 1
        out.append(SparsePoly({tuple(a): Fraction(1), tuple(b): Fraction(-1)}, 2 * n))
    return out


def make_order(g: Graph, order: str | MonomialOrder = "degrevlex") -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    try:
        return ORDERS[order](g.n)
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


def binomial_edge_groebner(g: Graph, order: str | MonomialOrder = "degrevlex") -> list[SparsePoly]:
    return groebner(binomial_generators(g), make_order(g, order))


def oracle_initial_ideal(g: Graph, order: str = "degrevlex") -> MonomialIdeal:
    o = make_order(g, order)
    return initial_ideal(groebner(binomial_generators(g), o), o, 2 * g.n)


def oracle_series(g: Graph, order: str = "degrevlex", limit: int | None = None) -> PoleSeries:
    """Hilbert series of S/J_G via the initial ideal of J_G."""
    limit = max_vars() if limit is None else limit
    if 2 * g.n > limit:
        raise SizeGuardError(f"oracle refused: {2 * g.n} variables exceeds the guard of {limit}")
    return _oracle_series(g, order)


@lru_cache(maxsize=65536)
def _oracle_series(g: Graph, order: str) -> PoleSeries:
    if not g.edges:
        return normalize((1,), 2 * g.n)
    ideal = oracle_initial_ideal(g, order)
    return normalize(monomial_numerator(ideal), 2 * g.n)


@dataclass
class VerifyReport:
    graph: Graph
    formula: PoleSeries
    oracle: PoleSeries
    cutset_dim: int
    derivation: object

    @property
    def equal(self) -> bool:
        return self.formula == self.oracle

    @property
    def dim_ok(self) -> bool:
        return self.oracle.pole == self.cutset_dim and self.formula.pole == self.cutset_dim

    @property
    def ok(self) -> bool:
        return self.equal and self.dim_ok

    @property
    def used_fallback(self) -> bool:
        return self.derivation.uses_oracle()

    def to_dict(self) -> dict:
        data = self.formula.hilbert_data()
        return {
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges]},
            "equal": self.equal,
            "formula": self.formula.to_dict(),
            "oracle": self.oracle.to_dict(),
            "dim": data.dim,
            "multiplicity": data.multiplicity,
            "cutset_dim": self.cutset_dim,
            "fallback": self.used_fallback,
            "trace": self.derivation.to_dict(),
        }


def verify(g: Graph, order: str = "degrevlex", limit: int | None = None) -> VerifyReport:
    """Compare the structural formula for g with the Groebner oracle."""
    from ..formulas import analyze

    oracle = oracle_series(g, order, limit)
    derivation = analyze(g, oracle_limit=limit)
    return VerifyReport(g, derivation.result, oracle, dimension_from_cutsets(g), derivation)
