"""Buchberger's algorithm with the normal selection strategy and the
Gebauer-Moeller installation of the coprime and chain criteria."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polys import (
    Monomial,
    MonomialOrder,
    SparsePoly,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

Terms = dict  # Monomial -> Fraction


def _lead(f: Terms, order: MonomialOrder) -> Monomial:
    return max(f, key=order.key)


def _monic(f: Terms, lm: Monomial) -> Terms:
    c = f[lm]
    if c == 1:
        return f
    return {m: v / c for m, v in f.items()}


def normal_form(f: Terms, basis: Sequence[tuple[Monomial, Terms]], order: MonomialOrder) -> Terms:
    """Full reduction of f modulo monic polynomials given as (lm, terms)."""
    f = dict(f)
    rem: Terms = {}
    key = order.key
    while f:
        m = max(f, key=key)
        c = f.pop(m)
        for glm, g in basis:
            if mono_divides(glm, m):
                q = mono_div(m, glm)
                for gm, gc in g.items():
                    if gm == glm:
                        continue
                    t = mono_mul(gm, q)
                    v = f.get(t, 0) - c * gc
                    if v:
                        f[t] = v
                    else:
                        f.pop(t, None)
                break
        else:
            rem[m] = c
    return rem


def s_polynomial(f: Terms, flm: Monomial, g: Terms, glm: Monomial) -> Terms:
    """S(f, g) for monic f, g."""
    lcm = mono_lcm(flm, glm)
    uf = mono_div(lcm, flm)
    ug = mono_div(lcm, glm)
    out: Terms = {}
    for m, c in f.items():
        t = mono_mul(m, uf)
        out[t] = out.get(t, 0) + c
    for m, c in g.items():
        t = mono_mul(m, ug)
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return {m: c for m, c in out.items() if c}


def groebner(gens: Sequence[SparsePoly], order: MonomialOrder) -> list[SparsePoly]:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Output is sorted by leading monomial, largest first, with monic
    leading coefficients.
    """
    nvars = next((g.nvars for g in gens if g), 0)
    polys: list[Terms] = []
    lms: list[Monomial] = []
    active: list[int] = []
    pairs: list[tuple[int, int, Monomial]] = []

    def install(h: Terms) -> None:
        hlm = _lead(h, order)
        h = _monic(h, hlm)
        k = len(polys)
        polys.append(h)
        lms.append(hlm)
        # Gebauer-Moeller update
        cand = [(g, mono_lcm(lms[g], hlm)) for g in active]
        kept = []
        for idx, (g, lcm) in enumerate(cand):
            if mono_coprime(lms[g], hlm):
                kept.append((g, lcm))
                continue
            dominated = False
            for g2, lcm2 in cand[idx + 1 :]:
                if mono_divides(lcm2, lcm):
                    dominated = True
                    break
            if not dominated:
                for g2, lcm2 in kept:
                    if mono_divides(lcm2, lcm):
                        dominated = True
                        break
            if not dominated:
                kept.append((g, lcm))
        new_pairs = [(g, k, lcm) for g, lcm in kept if not mono_coprime(lms[g], hlm)]
        survivors = []
        for a, b, lcm in pairs:
            if (
                mono_divides(hlm, lcm)
                and mono_lcm(lms[a], hlm) != lcm
                and mono_lcm(lms[b], hlm) != lcm
            ):
                continue
            survivors.append((a, b, lcm))
        pairs[:] = survivors + new_pairs
        active[:] = [g for g in active if not mono_divides(hlm, lms[g])] + [k]

    basis_view = lambda: [(lms[g], polys[g]) for g in active]  # noqa: E731

    seeds = []
    for g in gens:
        if g:
            seeds.append(dict(g.terms))
    seeds.sort(key=lambda f: order.key(_lead(f, order)))
    for f in seeds:
        r = normal_form(f, basis_view(), order) if active else f
        if r:
            install(r)

    while pairs:
        best = min(range(len(pairs)), key=lambda i: (sum(pairs[i][2]), order.key(pairs[i][2])))
        a, b, _ = pairs.pop(best)
        s = s_polynomial(polys[a], lms[a], polys[b], lms[b])
        if not s:
            continue
        r = normal_form(s, basis_view(), order)
        if r:
            install(r)

    return _reduce([(lms[g], polys[g]) for g in active], order, nvars)


def _reduce(basis: list[tuple[Monomial, Terms]], order: MonomialOrder, nvars: int) -> list[SparsePoly]:
    minimal = [
        (lm, f)
        for i, (lm, f) in enumerate(basis)
        if not any(j != i and mono_divides(olm, lm) and (olm != lm or j < i) for j, (olm, _) in enumerate(basis))
    ]
    out = []
    for i, (lm, f) in enumerate(minimal):
        others = [b for j, b in enumerate(minimal) if j != i]
        tail = {m: c for m, c in f.items() if m != lm}
        reduced = normal_form(tail, others, order)
        reduced[lm] = Fraction(1)
        out.append((lm, reduced))
    out.sort(key=lambda p: order.key(p[0]), reverse=True)
    return [SparsePoly(f, nvars) for _, f in out]


def reduces_to_zero(f: SparsePoly, basis: Sequence[SparsePoly], order: MonomialOrder) -> bool:
    view = [(g.leading_monomial(order), dict(g.monic(order).terms)) for g in basis]
    return not normal_form(dict(f.terms), view, order)


def is_groebner_basis(basis: Sequence[SparsePoly], order: MonomialOrder) -> bool:
    """Every S-polynomial of ``basis`` reduces to zero modulo ``basis``."""
    view = [(g.leading_monomial(order), dict(g.monic(order).terms)) for g in basis]
    for i in range(len(view)):
        for j in range(i + 1, len(view)):
            s = s_polynomial(view[i][1], view[i][0], view[j][1], view[j][0])
            if s and normal_form(s, view, order):
                return False
    return True
