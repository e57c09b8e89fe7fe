"""Exact rational functions Q(t)/(1-t)^d and the invariants read off them.

Every Hilbert series handled by the package is a :class:`PoleSeries`: an
integer numerator polynomial together with the order of its pole at t = 1.
Values are kept in pole normal form, i.e. no factor (1-t) is shared between
numerator and denominator, so structural equality is series equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

# -- dense integer polynomials (index = degree) -----------------------------

def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_scale(a: Sequence[int], k: int) -> tuple[int, ...]:
    return _trim(k * c for c in a)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def poly_pow(a: Sequence[int], k: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def one_minus_t_pow(k: int) -> tuple[int, ...]:
    """Coefficients of (1-t)^k."""
    return tuple((-1) ** i * comb(k, i) for i in range(k + 1))


def poly_eval(a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _divide_by_t_minus_1(a: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Synthetic division by (t-1); returns (quotient, remainder=a(1))."""
    if not a:
        return (), 0
    q = [0] * (len(a) - 1)
    carry = 0
    for i in range(len(a) - 1, 0, -1):
        carry += a[i]
        q[i - 1] = carry
    return _trim(q), carry + a[0]


def taylor_at_one(a: Sequence[int]) -> list[int]:
    """Coefficients of a(t) in powers of (t-1), so entry i is a^(i)(1)/i!."""
    out = []
    rest = tuple(a)
    while rest:
        rest, r = _divide_by_t_minus_1(rest)
        out.append(r)
    return out


# -- pole series ------------------------------------------------------------

@dataclass(frozen=True)
class PoleSeries:
    """Q(t)/(1-t)^pole with ``num`` the coefficients of Q (index = degree).

    Build through :func:`normalize` (or the helpers below); the constructor
    does not reduce.
    """

    num: tuple[int, ...]
    pole: int

    # construction helpers
    @classmethod
    def of(cls, num: Iterable[int], pole: int = 0) -> "PoleSeries":
        return normalize(num, pole)

    @classmethod
    def one(cls) -> "PoleSeries":
        return cls((1,), 0)

    @classmethod
    def zero(cls) -> "PoleSeries":
        return cls((), 0)

    def is_zero(self) -> bool:
        return not self.num

    @property
    def degree(self) -> int:
        """Degree of the numerator (-1 for the zero series)."""
        return len(self.num) - 1

    # arithmetic
    def __add__(self, other: "PoleSeries") -> "PoleSeries":
        d = max(self.pole, other.pole)
        a = poly_mul(self.num, one_minus_t_pow(d - self.pole))
        b = poly_mul(other.num, one_minus_t_pow(d - other.pole))
        return normalize(poly_add(a, b), d)

    def __neg__(self) -> "PoleSeries":
        return PoleSeries(poly_scale(self.num, -1), self.pole)

    def __sub__(self, other: "PoleSeries") -> "PoleSeries":
        return self + (-other)

    def __mul__(self, other: "PoleSeries | int") -> "PoleSeries":
        if isinstance(other, int):
            return normalize(poly_scale(self.num, other), self.pole)
        return normalize(poly_mul(self.num, other.num), self.pole + other.pole)

    __rmul__ = __mul__

    def times_one_minus_t(self, k: int) -> "PoleSeries":
        """Multiply by (1-t)^k; k may be negative."""
        return normalize(self.num, self.pole - k)

    def times_t(self, k: int) -> "PoleSeries":
        if k < 0:
            raise ValueError("negative power of t")
        return PoleSeries((0,) * k + self.num if self.num else (), self.pole)

    # evaluation
    def taylor(self, N: int) -> list[int]:
        return taylor(self, N)

    def hilbert_data(self) -> "HilbertData":
        return hilbert_data(self)

    # rendering
    def to_dict(self) -> dict:
        return {"num": list(self.num), "pole": self.pole}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "PoleSeries":
        return normalize(data["num"], data["pole"])

    @classmethod
    def from_json(cls, text: str) -> "PoleSeries":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        return render(self)


def normalize(num: Iterable[int], pole: int) -> PoleSeries:
    """Cancel common factors (1-t) and return the pole normal form.

    A negative pole is absorbed into the numerator.
    """
    q = _trim(int(c) for c in num)
    if not q:
        return PoleSeries((), 0)
    if pole < 0:
        q = poly_mul(q, one_minus_t_pow(-pole))
        pole = 0
    while pole > 0:
        quo, rem = _divide_by_t_minus_1(q)
        if rem != 0:
            break
        # Q = (t-1) * quo = (1-t) * (-quo)
        q = poly_scale(quo, -1)
        pole -= 1
    return PoleSeries(q, pole)


def taylor(s: PoleSeries, N: int) -> list[int]:
    """Coefficients of t^0..t^N in the power-series expansion of ``s``."""
    d = s.pole
    out = []
    for k in range(N + 1):
        if d == 0:
            out.append(s.num[k] if k < len(s.num) else 0)
            continue
        total = 0
        for j, c in enumerate(s.num[: k + 1]):
            total += c * comb(k - j + d - 1, d - 1)
        out.append(total)
    return out


@dataclass(frozen=True)
class HilbertData:
    """Dimension, multiplicity, e-coefficients and Hilbert polynomial.

    ``hilbert_polynomial[i]`` is the coefficient of binom(X+i, i), so
    ``P(X) = sum((-1)**(d-1-i) * e[d-1-i] * binom(X+i, i))``.
    """

    dim: int
    multiplicity: int
    e: tuple[int, ...]
    hilbert_polynomial: tuple[int, ...]

    def e_at(self, j: int) -> int:
        return self.e[j] if 0 <= j < len(self.e) else 0

    def evaluate_polynomial(self, k: int) -> int:
        return sum(c * comb(k + i, i) for i, c in enumerate(self.hilbert_polynomial))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "multiplicity": self.multiplicity,
            "e": list(self.e),
            "hilbert_polynomial": list(self.hilbert_polynomial),
        }


def hilbert_data(s: PoleSeries) -> HilbertData:
    if s.is_zero():
        raise ValueError("the zero series has no Hilbert data")
    d = s.pole
    shifted = taylor_at_one(s.num)
    e = tuple(shifted[i] if i < len(shifted) else 0 for i in range(d))
    poly = tuple((-1) ** (d - 1 - i) * e[d - 1 - i] for i in range(d))
    return HilbertData(dim=d, multiplicity=shifted[0], e=e, hilbert_polynomial=poly)


# -- text rendering ---------------------------------------------------------

def render_poly(coeffs: Sequence[int], var: str = "t") -> str:
    if not any(coeffs):
        return "0"
    parts = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            power = var if deg == 1 else f"{var}^{deg}"
            body = power if mag == 1 else f"{mag}{power}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text


def render(s: PoleSeries) -> str:
    """Render as e.g. ``(2t+1)/(1-t)^4``."""
    num = render_poly(s.num)
    if s.pole == 0:
        return num
    nonzero = sum(1 for c in s.num if c)
    if nonzero > 1 or num.startswith("-"):
        num = f"({num})"
    den = "(1-t)" if s.pole == 1 else f"(1-t)^{s.pole}"
    return f"{num}/{den}"
