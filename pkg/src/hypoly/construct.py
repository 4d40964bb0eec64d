"""Four independent constructions of the complementary polynomials P_nu(x; l).

``comp_poly_recursive`` is the reference route; the three-term recursion, the
series solution of the generating-function ODE, the cross-l recursion and the
expansion over the l = 0 polynomials are all checked against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .family import Family
from .polycore import ONE, ZERO, Poly, PolySeries, poly_div_exact


class IndexUnderflow(ValueError):
    pass


ROUTES = ("recursive_ode", "three_term", "shift_l", "series", "expansion")


@dataclass(frozen=True)
class CompPoly:
    family: Family
    l: int
    nu: int
    poly: Poly
    route: str


def _check_indices(l: int, nu: int):
    if l < 0 or nu < 0:
        raise ValueError(f"need l >= 0 and nu >= 0, got l={l}, nu={nu}")


def _recursive_step(fam: Family, l: int, nu: int, p: Poly) -> Poly:
    # P_{nu+1} = sigma P_nu' + [tau + (l - nu - 1) sigma'] P_nu
    return fam.sigma * p.derive() + (fam.tau + (l - nu - 1) * fam.dsigma) * p


def recursive_ladder_uncached(fam: Family, l: int, nu: int) -> list[Poly]:
    """[P_0, ..., P_nu] by the first-order recursive ODE, no memoization."""
    out = [ONE]
    for k in range(nu):
        out.append(_recursive_step(fam, l, k, out[-1]))
    return out


@lru_cache(maxsize=4096)
def _recursive_cached(fam: Family, l: int, nu: int) -> Poly:
    if nu == 0:
        return ONE
    return _recursive_step(fam, l, nu - 1, _recursive_cached(fam, l, nu - 1))


def comp_poly_recursive(fam: Family, l: int, nu: int) -> Poly:
    _check_indices(l, nu)
    # fill bottom-up so deep ladders never hit the recursion limit
    for k in range(0, nu, 64):
        _recursive_cached(fam, l, k)
    return _recursive_cached(fam, l, nu)


def clear_cache():
    _recursive_cached.cache_clear()


def ladder_coefficient(fam: Family, l: int, nu: int) -> Fraction:
    """c_nu with dP_nu/dx = nu * c_nu * P_{nu-1}: ``tau' + (l - 1 - (nu-1)/2) sigma''``."""
    return fam.dtau + (l - 1 - Fraction(nu - 1, 2)) * fam.d2sigma


def comp_poly_three_term(fam: Family, l: int, nu: int) -> Poly:
    """Two-back recursion with no differentiation."""
    _check_indices(l, nu)
    prev, cur = ZERO, ONE
    for k in range(nu):
        nxt = (fam.tau + (l - 1 - k) * fam.dsigma) * cur
        if k:
            nxt = nxt + k * ladder_coefficient(fam, l, k) * fam.sigma * prev
        prev, cur = cur, nxt
    return cur


def comp_poly_p1(fam: Family, l: int) -> Poly:
    """P_1(x; l) = (l - 1) sigma' + tau."""
    return (l - 1) * fam.dsigma + fam.tau


def comp_poly_shift_l(fam: Family, l: int, nu: int) -> Poly:
    """P_nu(x; l) assembled from the (l-1)-indexed ladder.

    P_{k+1}(l) = P_1(x; l) P_k(l-1) + k sigma P_1'(x; l) P_{k-1}(l-1).
    """
    _check_indices(l, nu)
    if l == 0:
        raise IndexUnderflow("the cross-l route needs l >= 1")
    if nu == 0:
        return ONE
    k = nu - 1
    lower = [comp_poly_recursive(fam, l - 1, j) for j in (k, k - 1) if j >= 0]
    p1 = comp_poly_p1(fam, l)
    out = p1 * lower[0]
    if k:
        out = out + k * p1.derive() * fam.sigma * lower[1]
    return out


def genfun_series(fam: Family, l: int, order: int) -> PolySeries:
    """Truncated generating function sum_n P_n(x; l) y^n / n!.

    Solves sigma(z) dG/dy = sigma(x) [tau(z) + (l-1) sigma'(z)] G with
    z = x + y sigma(x), coefficient by coefficient in y.  Each step divides
    by sigma(x); the division must be exact.
    """
    _check_indices(l, order)
    s, ds, d2s = fam.sigma, fam.dsigma, fam.d2sigma
    m = order
    # sigma(z) = sigma + y sigma sigma' + y^2 sigma'' sigma^2 / 2 (exact for quadratic sigma)
    lhs = PolySeries([s, s * ds, Fraction(d2s, 2) * s * s][: m + 1], m)
    # sigma(x) [tau(z) + (l-1) sigma'(z)]
    p1 = comp_poly_p1(fam, l)
    rhs = PolySeries([s * p1, s * s * p1.derive()][: m + 1], m)

    c = [ONE] + [ZERO] * m
    for n in range(m):
        # coefficient of y^n in lhs * G' - rhs * G, with (n+1) c_{n+1} unknown
        known = ZERO
        for i in range(1, min(n, 2) + 1):
            known = known + lhs.coeffs[i] * ((n - i + 1) * c[n - i + 1])
        source = ZERO
        for i in range(min(n, 1) + 1):
            source = source + rhs.coeffs[i] * c[n - i]
        c[n + 1] = poly_div_exact(source - known, s) * Fraction(1, n + 1)
    return PolySeries(c, m)


def _trinomial(l: int, j: int, k: int) -> int:
    return math.factorial(l) // (math.factorial(j) * math.factorial(k) * math.factorial(l - j - k))


def comp_poly_expansion(fam: Family, l: int, n: int) -> Poly:
    """P_N(x; l) expanded over the l = 0 polynomials P_m(x; 0).

    Uses sigma(z)/sigma(x) = 1 + y sigma' + y^2 sigma sigma''/2 raised to the
    l-th power.  When sigma'' = 0 only k = 0 survives and this is the binomial
    expansion sum_m C(l, N-m) N!/m! P_m(x; 0) sigma'^(N-m).
    """
    _check_indices(l, n)
    half_ss = Fraction(fam.d2sigma, 2) * fam.sigma
    out = ZERO
    for k in range(0, min(l, n // 2) + 1):
        if k and fam.d2sigma == 0:
            break
        for j in range(0, min(l - k, n - 2 * k) + 1):
            m = n - j - 2 * k
            coef = Fraction(_trinomial(l, j, k) * math.factorial(n), math.factorial(m))
            # sigma'^0 = 1 even when sigma' vanishes identically
            term = comp_poly_recursive(fam, 0, m) * fam.dsigma ** j * half_ss ** k
            out = out + coef * term
    return out


def comp_poly_expansion_binomial(fam: Family, l: int, n: int) -> Poly:
    """The binomial-only expansion that drops the sigma'' term of sigma(z)/sigma(x).

    Agrees with the reference route only when sigma'' = 0.
    """
    _check_indices(l, n)
    out = ZERO
    for m in range(max(0, n - l), n + 1):
        coef = math.comb(l, n - m) * Fraction(math.factorial(n), math.factorial(m))
        out = out + coef * comp_poly_recursive(fam, 0, m) * fam.dsigma ** (n - m)
    return out


def main_poly(fam: Family, l: int) -> Poly:
    """P_l(x) = P_l(x; l), the polynomial solution of the main ODE."""
    return comp_poly_recursive(fam, l, l)


def comp_poly(fam: Family, l: int, nu: int, route: str = "recursive_ode") -> CompPoly:
    if route == "recursive_ode":
        p = comp_poly_recursive(fam, l, nu)
    elif route == "three_term":
        p = comp_poly_three_term(fam, l, nu)
    elif route == "shift_l":
        p = comp_poly_shift_l(fam, l, nu)
    elif route == "series":
        p = genfun_series(fam, l, nu).coeffs[nu] * math.factorial(nu)
    elif route == "expansion":
        p = comp_poly_expansion(fam, l, nu)
    else:
        raise ValueError(f"unknown route {route!r}")
    return CompPoly(fam, l, nu, p, route)


def expected_leading(fam: Family, l: int, nu: int) -> Fraction:
    """Coefficient of x^nu in P_nu(x; l), the product of the ladder coefficients c_1..c_nu."""
    out = Fraction(1)
    for k in range(1, nu + 1):
        out *= ladder_coefficient(fam, l, k)
    return out
