"""Exact checks of the structural identities of the complementary polynomials.

Every check builds a residual polynomial and passes only when it is the
zero polynomial.  Nothing here uses a tolerance.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .construct import (
    ROUTES,
    comp_poly,
    comp_poly_p1,
    comp_poly_recursive,
    expected_leading,
    genfun_series,
    ladder_coefficient,
    main_poly,
)
from .family import Family, big_lambda, pearson_ratio, small_lambda
from .polycore import ZERO, Poly
from .report import (  # noqa: F401  (re-exported)
    SampleGrid,
    VerdictReport,
    check_bivariate_on_grid,
    verdict_from_residual,
)


class HypothesisNotMet(ValueError):
    """The family does not have the symmetry the parity relations assume."""


def _params(**kw):
    return tuple(kw.items())


def check_route_agreement(fam: Family, l: int, nu: int) -> VerdictReport:
    ref = comp_poly_recursive(fam, l, nu)
    for route in ROUTES[1:]:
        if route == "shift_l" and l == 0:
            continue
        other = comp_poly(fam, l, nu, route).poly
        if other != ref:
            return verdict_from_residual("route_agreement", fam.label, _params(l=l, nu=nu),
                                         other - ref, f"route {route} disagrees")
    return VerdictReport("route_agreement", fam.label, _params(l=l, nu=nu))


def check_genfun_series(fam: Family, l: int, order: int) -> VerdictReport:
    series = genfun_series(fam, l, order)
    for n, c in enumerate(series.coeffs):
        res = c * math.factorial(n) - comp_poly_recursive(fam, l, n)
        if not res.is_zero():
            return verdict_from_residual("genfun_series", fam.label, _params(l=l, order=order),
                                         res, f"coefficient {n}")
    return VerdictReport("genfun_series", fam.label, _params(l=l, order=order))


def check_hypergeometric(fam: Family, l: int) -> VerdictReport:
    """sigma P_l'' + tau P_l' + Lambda_l P_l = 0."""
    p = main_poly(fam, l)
    dp = p.derive()
    res = fam.sigma * dp.derive() + fam.tau * dp + big_lambda(fam, l) * p
    return verdict_from_residual("hypergeometric", fam.label, _params(l=l), res)


def sturm_liouville_residual(fam: Family, l: int, nu: int) -> Poly:
    p = comp_poly_recursive(fam, l, nu)
    dp = p.derive()
    return (fam.sigma * dp.derive() + ((l - nu) * fam.dsigma + fam.tau) * dp
            + small_lambda(fam, l, nu) * p)


def check_sturm_liouville(fam: Family, l: int, nu: int) -> VerdictReport:
    """sigma P'' + [(l - nu) sigma' + tau] P' + lambda_nu P = 0."""
    if not 0 <= nu <= l:
        raise ValueError("Sturm-Liouville check needs 0 <= nu <= l")
    return verdict_from_residual("sturm_liouville", fam.label, _params(l=l, nu=nu),
                                 sturm_liouville_residual(fam, l, nu))


def check_eigen_recursion(fam: Family, l: int, nu: int) -> VerdictReport:
    """lambda_{nu+1} = lambda_nu - [(l - nu - 1) sigma'' + tau'], plus lambda_l = Lambda_l."""
    diff = (small_lambda(fam, l, nu + 1)
            - (small_lambda(fam, l, nu) - ((l - nu - 1) * fam.d2sigma + fam.dtau)))
    params = _params(l=l, nu=nu)
    if diff != 0:
        return VerdictReport("eigen_recursion", fam.label, params, False, diff)
    if nu == l and small_lambda(fam, l, l) != big_lambda(fam, l):
        return VerdictReport("eigen_recursion", fam.label, params, False,
                             small_lambda(fam, l, l) - big_lambda(fam, l), note="lambda_l != Lambda_l")
    return VerdictReport("eigen_recursion", fam.label, params)


def check_generalized_rodrigues(fam: Family, l: int, nu: int, mu: int) -> VerdictReport:
    """Peel nu - mu derivatives starting from P_mu and land on P_nu."""
    if not 0 <= mu <= nu <= l:
        raise ValueError("need 0 <= mu <= nu <= l")
    b = comp_poly_recursive(fam, l, mu)
    for k in range(nu - mu):
        b = fam.sigma * b.derive() + (fam.tau + (l - mu - k - 1) * fam.dsigma) * b
    return verdict_from_residual("generalized_rodrigues", fam.label, _params(l=l, nu=nu, mu=mu),
                                 b - comp_poly_recursive(fam, l, nu))


def addition_residual(fam: Family, l1: int, l2: int, nu: int) -> Poly:
    out = ZERO
    for mu in range(nu + 1):
        term = (comp_poly_recursive(fam, l1 + l2, mu) * comp_poly_recursive(fam, 0, nu - mu)
                - comp_poly_recursive(fam, l1, mu) * comp_poly_recursive(fam, l2, nu - mu))
        out = out + math.comb(nu, mu) * term
    return out


def check_addition_theorem(fam: Family, l1: int, l2: int, nu: int) -> VerdictReport:
    if min(l1, l2, nu) < 0:
        raise ValueError("l1, l2, nu must be nonnegative")
    return verdict_from_residual("addition_theorem", fam.label, _params(l1=l1, l2=l2, nu=nu),
                                 addition_residual(fam, l1, l2, nu))


def _parity(p: Poly):
    """+1 if even, -1 if odd, None if mixed (zero counts as both; report +1)."""
    if p.is_zero() or p.compose_neg() == p:
        return 1
    if p.compose_neg() == -p:
        return -1
    return None


def parity_exponent(fam: Family) -> int:
    """Return m mod 2 where sigma(-x) = (-1)^m sigma(x).

    Raises HypothesisNotMet unless sigma has a parity and w'/w is odd.
    """
    num, den = pearson_ratio(fam)
    ps = _parity(den)
    if ps is None:
        raise HypothesisNotMet(f"sigma = {den} has no parity")
    pn = _parity(num)
    # w'/w odd  <=>  num and den have opposite parity (num = 0 is fine)
    if not num.is_zero() and pn != -ps:
        raise HypothesisNotMet(f"w'/w = ({num})/({den}) is not odd")
    return 0 if ps == 1 else 1


def check_parity(fam: Family, l: int, nu: int) -> VerdictReport:
    params = _params(l=l, nu=nu)
    try:
        m = parity_exponent(fam)
    except HypothesisNotMet as exc:
        return VerdictReport("parity", fam.label, params, skipped=True, note=f"HypothesisNotMet: {exc}")
    p = comp_poly_recursive(fam, l, nu)
    sign = 1 if m == 1 else (-1) ** nu
    branch = "m odd" if m == 1 else "m even"
    return verdict_from_residual("parity", fam.label, params, p.compose_neg() - sign * p, branch)


def check_derivative_ladder(fam: Family, l: int, nu: int) -> VerdictReport:
    """dP_nu/dx = nu [tau' + (l - 1 - (nu-1)/2) sigma''] P_{nu-1}."""
    params = _params(l=l, nu=nu)
    p = comp_poly_recursive(fam, l, nu)
    if nu == 0:
        return verdict_from_residual("derivative_ladder", fam.label, params, p.derive())
    res = p.derive() - nu * ladder_coefficient(fam, l, nu) * comp_poly_recursive(fam, l, nu - 1)
    return verdict_from_residual("derivative_ladder", fam.label, params, res)


def differential_recursion_residual(fam: Family, l: int, nu: int) -> Poly:
    s, ds, half = fam.sigma, fam.dsigma, Fraction(fam.d2sigma, 2)

    def p(k):
        return comp_poly_recursive(fam, l, k) if k >= 0 else ZERO

    p1 = comp_poly_p1(fam, l)
    dp1 = p1.derive()
    lhs = nu * (nu - 1) * half * s * p(nu - 2).derive() + nu * ds * p(nu - 1).derive() + p(nu).derive()
    rhs = nu * dp1 * p(nu - 1) + nu * (nu - 1) * (ds * dp1 - half * p1) * p(nu - 2)
    return lhs - rhs


def check_differential_recursion(fam: Family, l: int, nu: int) -> VerdictReport:
    return verdict_from_residual("differential_recursion", fam.label, _params(l=l, nu=nu),
                                 differential_recursion_residual(fam, l, nu))


def check_degree(fam: Family, l: int, nu: int) -> VerdictReport:
    """deg P_nu <= nu, and the x^nu coefficient equals the ladder product.

    A vanishing ladder product (degree drop) is recorded in the note, not failed.
    """
    p = comp_poly_recursive(fam, l, nu)
    params = _params(l=l, nu=nu)
    if p.degree > nu:
        return VerdictReport("degree", fam.label, params, False, p, note="degree exceeds nu")
    lead = expected_leading(fam, l, nu)
    if p.coeff(nu) != lead:
        return VerdictReport("degree", fam.label, params, False, p.coeff(nu) - lead,
                             note="leading coefficient mismatch")
    note = "" if lead != 0 else f"degenerate: degree {p.degree} < {nu}"
    return VerdictReport("degree", fam.label, params, note=note)
