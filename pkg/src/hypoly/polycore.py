"""Exact rational scalars, dense univariate polynomials and truncated power series.

Everything here is immutable.  Coefficients are :class:`fractions.Fraction`
values, which are kept in lowest terms with a positive denominator by the
standard library after every operation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class InexactDivision(ArithmeticError):
    """Polynomial long division left a nonzero remainder."""

    def __init__(self, remainder: "Poly"):
        super().__init__(f"division is not exact, remainder {remainder}")
        self.remainder = remainder


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction; decimals are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class Poly:
    """Dense polynomial in ``x``; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "Poly":
        return cls([0] * n + [c])

    @property
    def degree(self):
        if not self.coeffs:
            return MINUS_INFINITY
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if i == 0:
                body = mag
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if abs(c) == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x0: Scalar) -> Fraction:
        return poly_eval(self, x0)

    def derive(self) -> "Poly":
        return poly_derive(self)

    def compose_neg(self) -> "Poly":
        """p(-x)."""
        return Poly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def poly_mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return Poly(out)


def poly_derive(p: Poly) -> Poly:
    return Poly([i * c for i, c in enumerate(p.coeffs)][1:])


def poly_divmod(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dd = d.coeffs
    n = len(dd) - 1
    lead = dd[-1]
    if len(rem) <= n:
        return ZERO, p
    quot = [Fraction(0)] * (len(rem) - n)
    for k in range(len(rem) - 1, n - 1, -1):
        c = rem[k] / lead
        quot[k - n] = c
        if c:
            for j in range(n + 1):
                rem[k - n + j] -= c * dd[j]
    return Poly(quot), Poly(rem[:n])


def poly_div_exact(p: Poly, d: Poly) -> Poly:
    """Quotient ``q`` with ``q * d == p``; raises :class:`InexactDivision` otherwise."""
    q, r = poly_divmod(p, d)
    if not r.is_zero():
        raise InexactDivision(r)
    return q


def poly_eval(p: Poly, x0: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


class PolySeries:
    """Truncated power series ``sum_{n<=order} c_n(x) y**n`` with Poly coefficients.

    The truncation order is explicit; binary operations require equal orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Poly | Scalar], order: int | None = None):
        cs = [c if isinstance(c, Poly) else Poly([c]) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        cs += [ZERO] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolySeries is immutable")

    def __eq__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"PolySeries({list(self.coeffs)!r}, order={self.order})"

    def _check(self, other: "PolySeries"):
        if not isinstance(other, PolySeries):
            raise TypeError("expected a PolySeries")
        if other.order != self.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return PolySeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        self._check(other)
        return PolySeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return PolySeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (Poly, int, Fraction)):
            return PolySeries([c * other for c in self.coeffs], self.order)
        self._check(other)
        m = self.order
        out = [ZERO] * (m + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(m + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return PolySeries(out, m)

    __rmul__ = __mul__

    def derive_y(self) -> "PolySeries":
        """d/dy, keeping the order (the top slot becomes zero: its source is truncated)."""
        cs = [(n + 1) * self.coeffs[n + 1] for n in range(self.order)]
        return PolySeries(cs, self.order)

    def eval_x(self, x0: Scalar) -> list[Fraction]:
        return [poly_eval(c, x0) for c in self.coeffs]
