"""Hypergeometric-type families ``sigma(x) y'' + tau(x) y' + Lambda y = 0``.

A family is fixed by five rationals: ``sigma(x) = e x^2 + 2 f x + g`` and
``tau(x) = a + b x``.  The weight function is never built; only the Pearson
ratio ``w'/w = (tau - sigma')/sigma`` is exposed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .polycore import Poly, Scalar, format_rational


class DegenerateSigma(ValueError):
    pass


@dataclass(frozen=True)
class Family:
    e: Fraction
    f: Fraction
    g: Fraction
    a: Fraction
    b: Fraction
    label: str = field(default="custom", compare=False)

    def __post_init__(self):
        for name in "efgab":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.e == 0 and self.f == 0 and self.g == 0:
            raise DegenerateSigma("sigma(x) = e x^2 + 2 f x + g must not vanish identically")

    @cached_property
    def sigma(self) -> Poly:
        return Poly([self.g, 2 * self.f, self.e])

    @cached_property
    def dsigma(self) -> Poly:
        return Poly([2 * self.f, 2 * self.e])

    @property
    def d2sigma(self) -> Fraction:
        return 2 * self.e

    @cached_property
    def tau(self) -> Poly:
        return Poly([self.a, self.b])

    @property
    def dtau(self) -> Fraction:
        return self.b

    def describe(self) -> str:
        vals = ",".join(format_rational(v) for v in (self.e, self.f, self.g, self.a, self.b))
        return f"{self.label}[{vals}]"


@dataclass(frozen=True)
class EigenPair:
    index: int
    value: Fraction


def make_family(e: Scalar, f: Scalar, g: Scalar, a: Scalar, b: Scalar, label: str = "custom") -> Family:
    return Family(Fraction(e), Fraction(f), Fraction(g), Fraction(a), Fraction(b), label)


def hermite() -> Family:
    return make_family(0, 0, 1, 0, -2, "hermite")


def laguerre() -> Family:
    return make_family(0, Fraction(1, 2), 0, 1, -1, "laguerre")


def jacobi(a: Scalar, b: Scalar) -> Family:
    """sigma = 1 - x^2, tau = b - a - (2 + a + b) x, weight (1-x)^a (1+x)^b."""
    a, b = Fraction(a), Fraction(b)
    return make_family(-1, 0, 1, b - a, -(2 + a + b), f"jacobi({format_rational(a)},{format_rational(b)})")


def random_families(count: int, seed: int, bound: int = 9) -> list[Family]:
    """Seeded rational families with numerators and denominators bounded by ``bound``."""
    rng = random.Random(seed)

    def draw() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    out = []
    while len(out) < count:
        e, f, g, a, b = (draw() for _ in range(5))
        if e == f == g == 0:
            continue
        out.append(make_family(e, f, g, a, b, f"random{len(out)}(seed={seed})"))
    return out


def big_lambda(fam: Family, l: int) -> Fraction:
    """Eigenvalue of the main ODE: ``-l tau' - l (l-1)/2 sigma''``."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    return -l * fam.dtau - Fraction(l * (l - 1), 2) * fam.d2sigma


def small_lambda(fam: Family, l: int, nu: int) -> Fraction:
    """Eigenvalue of the complementary polynomial of index ``nu``."""
    if l < 0 or nu < 0:
        raise ValueError("l and nu must be nonnegative")
    return -nu * ((l - Fraction(nu + 1, 2)) * fam.d2sigma + fam.dtau)


def pearson_ratio(fam: Family) -> tuple[Poly, Poly]:
    """``(tau - sigma', sigma)``, so that ``w'/w = num/den``."""
    return fam.tau - fam.dsigma, fam.sigma
