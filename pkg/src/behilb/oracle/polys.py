"""Sparse polynomials over Q in x_1..x_n, y_1..y_n.

A monomial is a dense exponent tuple of length 2n: position i-1 holds the
exponent of x_i and position n+i-1 the exponent of y_i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

Monomial = tuple  # tuple[int, ...] of length 2n


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def sparse_exponents(m: Monomial) -> dict[int, int]:
    """1-based variable index (x_i -> i, y_i -> n+i) to positive exponent."""
    return {k + 1: e for k, e in enumerate(m) if e}


def variable_name(pos: int, n: int) -> str:
    return f"x{pos + 1}" if pos < n else f"y{pos - n + 1}"


# -- monomial orders --------------------------------------------------------

class MonomialOrder:
    """A global order given by a variable priority and a comparison rule.

    ``priority`` lists exponent positions from the largest variable down.
    ``key(m)`` is increasing in the order, so ``max(..., key=order.key)``
    is the leading monomial.
    """

    def __init__(self, name: str, priority: list[int], graded_reverse: bool):
        self.name = name
        self.priority = priority
        self.graded_reverse = graded_reverse
        self._cache: dict[Monomial, tuple] = {}

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m)
        if k is None:
            ordered = [m[p] for p in self.priority]
            if self.graded_reverse:
                k = (sum(ordered), tuple(-e for e in reversed(ordered)))
            else:
                k = tuple(ordered)
            if len(self._cache) > 500_000:
                self._cache.clear()
            self._cache[m] = k
        return k

    def __repr__(self) -> str:
        return f"MonomialOrder({self.name!r})"


def degrevlex(n: int) -> MonomialOrder:
    """Degree reverse lexicographic with x_1 > ... > x_n > y_n > ... > y_1.

    With this variable order the leading term of x_i y_j - x_j y_i (i < j)
    is x_i y_j.
    """
    priority = list(range(n)) + [n + i for i in range(n - 1, -1, -1)]
    return MonomialOrder("degrevlex", priority, True)


def lex(n: int) -> MonomialOrder:
    """Lexicographic with x_1 > ... > x_n > y_1 > ... > y_n."""
    return MonomialOrder("lex", list(range(2 * n)), False)


ORDERS: dict[str, Callable[[int], MonomialOrder]] = {"degrevlex": degrevlex, "lex": lex}


# -- polynomials ------------------------------------------------------------

class SparsePoly:
    """Polynomial as a map monomial -> nonzero Fraction."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, nvars: int = 0):
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(m)] = c
        if not nvars and self.terms:
            nvars = len(next(iter(self.terms)))
        self.nvars = nvars

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[Monomial, object]], nvars: int) -> "SparsePoly":
        acc: dict[Monomial, Fraction] = {}
        for m, c in pairs:
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        return cls(acc, nvars)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return SparsePoly(out, self.nvars or other.nvars)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, c: object, m: Monomial | None = None) -> "SparsePoly":
        c = Fraction(c)
        if m is None:
            return SparsePoly({k: v * c for k, v in self.terms.items()}, self.nvars)
        return SparsePoly({mono_mul(k, m): v * c for k, v in self.terms.items()}, self.nvars)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "SparsePoly":
        return self.scale(1 / self.leading_coefficient(order))

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def render(self, order: MonomialOrder, n: int | None = None) -> str:
        """Terms as ``+c*x3*y5^2`` sorted by ``order``; the zero polynomial is ``0``."""
        if not self.terms:
            return "0"
        n = n if n is not None else self.nvars // 2
        out = []
        for m, c in self.sorted_terms(order):
            sign = "-" if c < 0 else "+"
            factors = [
                variable_name(k, n) + (f"^{e}" if e > 1 else "")
                for k, e in enumerate(m)
                if e
            ]
            body = "*".join([str(abs(c))] + factors)
            out.append(sign + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"SparsePoly({self.terms!r})"
