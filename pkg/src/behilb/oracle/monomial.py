"""Monomial ideals and the numerator of their Hilbert series."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..series import poly_add, poly_mul
from .groebner import _lead
from .polys import Monomial, MonomialOrder, SparsePoly, mono_lcm


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every generator divisible by another; result sorted."""
    uniq = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in uniq:
        if not any(all(a <= b for a, b in zip(g, m)) for g in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple[Monomial, ...]
    nvars: int

    @classmethod
    def of(cls, gens: Iterable[Monomial], nvars: int) -> "MonomialIdeal":
        return cls(minimalize(tuple(g) for g in gens), nvars)

    def is_zero(self) -> bool:
        return not self.generators


def initial_ideal(gb: Sequence[SparsePoly], order: MonomialOrder, nvars: int | None = None) -> MonomialIdeal:
    if nvars is None:
        nvars = next((g.nvars for g in gb), 0)
    return MonomialIdeal.of((_lead(g.terms, order) for g in gb if g), nvars)


def _one_minus_t_to(k: int) -> tuple[int, ...]:
    """1 - t^k."""
    if k == 0:
        return ()
    out = [0] * (k + 1)
    out[0] = 1
    out[k] = -1
    return tuple(out)


def _numerator(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return ()
    # pairwise coprime generators: product of (1 - t^deg)
    used = [0] * len(gens[0])
    coprime = True
    for g in gens:
        for k, e in enumerate(g):
            if e:
                if used[k]:
                    coprime = False
                    break
                used[k] = 1
        if not coprime:
            break
    if coprime:
        out: tuple[int, ...] = (1,)
        for g in gens:
            out = poly_mul(out, _one_minus_t_to(sum(g)))
        return out
    # pivot on the variable occurring in the most generators, lowest index on ties
    counts = [0] * len(gens[0])
    for g in gens:
        for k, e in enumerate(g):
            if e:
                counts[k] += 1
    pivot = max(range(len(counts)), key=lambda k: (counts[k], -k))
    unit = tuple(1 if k == pivot else 0 for k in range(len(counts)))
    plus = minimalize([g for g in gens if not g[pivot]] + [unit])
    colon = minimalize(tuple(e - 1 if k == pivot and e else e for k, e in enumerate(g)) for g in gens)
    # Hilb S/I = Hilb S/(I + x) + t * Hilb S/(I : x)
    return poly_add(_numerator(plus), (0,) + _numerator(colon))


def monomial_numerator(ideal: MonomialIdeal | Iterable[Monomial], nvars: int | None = None) -> tuple[int, ...]:
    """N(t) with Hilb S/I = N(t) / (1-t)^nvars (dense, index = degree)."""
    if not isinstance(ideal, MonomialIdeal):
        ideal = MonomialIdeal.of(ideal, nvars or 0)
    return _numerator(ideal.generators)


def inclusion_exclusion_numerator(gens: Sequence[Monomial]) -> tuple[int, ...]:
    """Sum over subsets A of the generators of (-1)^|A| t^deg(lcm A)."""
    out: tuple[int, ...] = (1,)
    for size in range(1, len(gens) + 1):
        sign = (-1) ** size
        for subset in combinations(gens, size):
            lcm = subset[0]
            for m in subset[1:]:
                lcm = mono_lcm(lcm, m)
            deg = sum(lcm)
            term = [0] * (deg + 1)
            term[deg] = sign
            out = poly_add(out, term)
    return out
