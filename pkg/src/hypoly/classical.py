"""Hermite, associated Laguerre and Jacobi specializations.

The oracles here are textbook constructions (three-term recursion, explicit
finite sums) that never touch the complementary-polynomial machinery, so
agreement with :mod:`hypoly.construct` is a genuine cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import family as fam_mod
from .construct import comp_poly_recursive, main_poly
from .family import Family
from .polycore import ONE, X, ZERO, Poly, Scalar, format_rational
from .report import VerdictReport, check_bivariate_on_grid, verdict_from_residual

KINDS = ("hermite", "laguerre", "jacobi")


class BasePointSingular(ValueError):
    pass


def binom(top: Scalar, k: int) -> Fraction:
    """Generalized binomial coefficient top (top-1) ... (top-k+1) / k!; zero for k < 0."""
    if k < 0:
        return Fraction(0)
    top = Fraction(top)
    out = Fraction(1)
    for i in range(k):
        out = out * (top - i) / (i + 1)
    return out


# -- oracles ---------------------------------------------------------------


def hermite_oracle(n: int) -> Poly:
    """Physicists' Hermite polynomial from H_{n+1} = 2x H_n - 2n H_{n-1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = ZERO, ONE
    for k in range(n):
        prev, cur = cur, 2 * X * cur - 2 * k * prev
    return cur


def laguerre_oracle(n: int, alpha: Scalar) -> Poly:
    """L_n^alpha(x) = sum_m C(alpha + n, n - m) (-x)^m / m!, any rational alpha."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = Fraction(alpha)
    return Poly(
        [binom(alpha + n, n - m) * Fraction((-1) ** m, math.factorial(m)) for m in range(n + 1)]
    )


def jacobi_oracle(n: int, a: Scalar, b: Scalar) -> Poly:
    """P_n^(a,b)(x) = sum_k C(n+a, k) C(n+b, n-k) ((x-1)/2)^(n-k) ((x+1)/2)^k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = Fraction(a), Fraction(b)
    xm = Poly([Fraction(-1, 2), Fraction(1, 2)])
    xp = Poly([Fraction(1, 2), Fraction(1, 2)])
    out = ZERO
    for k in range(n + 1):
        c = binom(n + a, k) * binom(n + b, n - k)
        if c:
            out = out + c * xm ** (n - k) * xp ** k
    return out


# -- normalization maps ------------------------------------------------------


@dataclass(frozen=True)
class ClassicalMap:
    """How a classical family's P_l and P_nu(x; l) relate to the textbook polynomials."""

    family_kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.family_kind not in KINDS:
            raise ValueError(f"unknown classical family {self.family_kind!r}")
        want = 2 if self.family_kind == "jacobi" else 0
        if len(self.params) != want:
            raise ValueError(f"{self.family_kind} takes {want} parameters")
        object.__setattr__(self, "params", tuple(Fraction(p) for p in self.params))

    def family(self) -> Family:
        if self.family_kind == "hermite":
            return fam_mod.hermite()
        if self.family_kind == "laguerre":
            return fam_mod.laguerre()
        return fam_mod.jacobi(*self.params)

    def main_scale(self, l: int) -> Fraction:
        if self.family_kind == "hermite":
            return Fraction((-1) ** l)
        if self.family_kind == "laguerre":
            return Fraction(math.factorial(l))
        return Fraction((-2) ** l * math.factorial(l))

    def comp_scale(self, nu: int) -> Fraction:
        if self.family_kind == "hermite":
            return Fraction((-1) ** nu)
        if self.family_kind == "laguerre":
            return Fraction(math.factorial(nu))
        return Fraction((-2) ** nu * math.factorial(nu))

    comp_param_shift = property(
        lambda self: {
            "hermite": "none (independent of l)",
            "laguerre": "L_nu^(l - nu)",
            "jacobi": "P_nu^(a + l - nu, b + l - nu)",
        }[self.family_kind]
    )

    def main_oracle(self, l: int) -> Poly:
        if self.family_kind == "hermite":
            return hermite_oracle(l)
        if self.family_kind == "laguerre":
            return laguerre_oracle(l, 0)
        a, b = self.params
        return jacobi_oracle(l, a, b)

    def comp_oracle(self, l: int, nu: int) -> Poly:
        if self.family_kind == "hermite":
            return hermite_oracle(nu)
        if self.family_kind == "laguerre":
            return laguerre_oracle(nu, l - nu)
        a, b = self.params
        return jacobi_oracle(nu, a + l - nu, b + l - nu)

    @property
    def label(self) -> str:
        if self.family_kind == "jacobi":
            return f"jacobi({format_rational(self.params[0])},{format_rational(self.params[1])})"
        return self.family_kind


def check_classical_map(kind: str, params: Sequence[Scalar], l: int, nu: int) -> VerdictReport:
    cmap = ClassicalMap(kind, tuple(params))
    fam = cmap.family()
    comp_res = comp_poly_recursive(fam, l, nu) - cmap.comp_scale(nu) * cmap.comp_oracle(l, nu)
    main_res = main_poly(fam, l) - cmap.main_scale(l) * cmap.main_oracle(l)
    params_out = (("l", l), ("nu", nu))
    if not comp_res.is_zero():
        return verdict_from_residual("classical_map", cmap.label, params_out, comp_res, "complementary map")
    return verdict_from_residual("classical_map", cmap.label, params_out, main_res, "main map")


# -- closed-form generating functions ------------------------------------------


def _series_mul(p: Sequence[Fraction], q: Sequence[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(p[: order + 1]):
        if a:
            for j, b in enumerate(q[: order + 1 - i]):
                out[i + j] += a * b
    return out


def exp_series(g: Sequence[Fraction], order: int) -> list[Fraction]:
    """Taylor coefficients of exp(g(y)) for a polynomial g with g(0) = 0."""
    g = [Fraction(c) for c in g] + [Fraction(0)] * (order + 1)
    if g[0] != 0:
        raise ValueError("exp_series needs g(0) = 0 to stay rational")
    # E' = g' E  =>  (n+1) E_{n+1} = sum_k (k+1) g_{k+1} E_{n-k}
    out = [Fraction(1)] + [Fraction(0)] * order
    for n in range(order):
        acc = sum(((k + 1) * g[k + 1] * out[n - k] for k in range(n + 1)), Fraction(0))
        out[n + 1] = acc / (n + 1)
    return out


def binomial_series(c0: Scalar, c1: Scalar, alpha: Scalar, order: int) -> list[Fraction]:
    """Taylor coefficients of (c0 + c1 y)^alpha with a rational exponent.

    Written as c0^alpha (1 + (c1/c0) y)^alpha, so c0 must be nonzero unless
    alpha is a nonnegative integer, and c0^alpha must be rational.
    """
    c0, c1, alpha = Fraction(c0), Fraction(c1), Fraction(alpha)
    if alpha.denominator == 1 and alpha >= 0:
        n = int(alpha)
        return [binom(n, k) * c0 ** (n - k) * c1 ** k for k in range(order + 1)]
    if c0 == 0:
        raise BasePointSingular(
            f"base {format_rational(c1)}*y vanishes at y = 0 under exponent {format_rational(alpha)}"
        )
    if alpha.denominator == 1:
        scale = c0 ** int(alpha)
    elif c0 == 1:
        scale = Fraction(1)
    else:
        raise ValueError(f"{format_rational(c0)}^{format_rational(alpha)} is not handled as a rational")
    ratio = c1 / c0
    return [scale * binom(alpha, k) * ratio ** k for k in range(order + 1)]


def closed_genfun_expand(kind: str, params: Sequence[Scalar], l: int, x0: Scalar, order: int) -> list[Fraction]:
    """Taylor coefficients in y of the closed-form generating function at x = x0.

    hermite:  exp(-2 x y - y^2)
    laguerre: exp(-x y) (1 + y)^l
    jacobi:   [1 - y(1+x)]^a [1 + y(1-x)]^b [1 - 2 x y - y^2 (1 - x^2)]^l
    """
    if order < 0 or l < 0:
        raise ValueError("order and l must be nonnegative")
    cmap = ClassicalMap(kind, tuple(params))
    x0 = Fraction(x0)
    if kind == "hermite":
        return exp_series([0, -2 * x0, -1], order)
    if kind == "laguerre":
        return _series_mul(exp_series([0, -x0], order), binomial_series(1, 1, l, order), order)
    a, b = cmap.params
    out = binomial_series(1, -(1 + x0), a, order)
    out = _series_mul(out, binomial_series(1, 1 - x0, b, order), order)
    trinomial = [Fraction(1)] + [Fraction(0)] * order
    base = [Fraction(1), -2 * x0, -(1 - x0 * x0)]
    for _ in range(l):
        trinomial = _series_mul(trinomial, base, order)
    return _series_mul(out, trinomial, order)


# -- the two novel identities ------------------------------------------------


def check_laguerre_addition(nu: int, n1: int, n2: int) -> VerdictReport:
    """L_nu^(n1+n2)(x1+x2) = sum_k L_k^(n1-k)(x1) L_(nu-k)^(n2+k)(x2), decided on a grid.

    Also checks the complementary form
    P_nu(x1+x2; n1+n2) = sum_k C(nu,k) P_(nu-k)(x1; n1) P_k(x2; n2).
    """
    if min(nu, n1, n2) < 0:
        raise ValueError("nu, n1, n2 must be nonnegative")
    params = (("nu", nu), ("n1", n1), ("n2", n2))
    lhs_poly = laguerre_oracle(nu, n1 + n2)
    left = [laguerre_oracle(k, n1 - k) for k in range(nu + 1)]
    right = [laguerre_oracle(nu - k, n2 + k) for k in range(nu + 1)]

    def lhs(x1, x2):
        return lhs_poly(x1 + x2)

    def rhs(x1, x2):
        return sum((left[k](x1) * right[k](x2) for k in range(nu + 1)), Fraction(0))

    rep = check_bivariate_on_grid(lhs, rhs, nu, nu, "laguerre_addition", "laguerre", params)
    if not rep.passed:
        return rep

    lag = fam_mod.laguerre()
    comp_lhs = comp_poly_recursive(lag, n1 + n2, nu)
    p1 = [comp_poly_recursive(lag, n1, j) for j in range(nu + 1)]
    p2 = [comp_poly_recursive(lag, n2, j) for j in range(nu + 1)]

    def comp_rhs(x1, x2):
        return sum(
            (math.comb(nu, k) * p1[nu - k](x1) * p2[k](x2) for k in range(nu + 1)),
            Fraction(0),
        )

    rep2 = check_bivariate_on_grid(
        lambda x1, x2: comp_lhs(x1 + x2), comp_rhs, nu, nu, "laguerre_addition", "laguerre", params
    )
    if not rep2.passed:
        return VerdictReport(rep2.identity_name, "laguerre", params, False, rep2.witness,
                             note="complementary form: " + rep2.note)
    return VerdictReport("laguerre_addition", "laguerre", params, True, None,
                         note=f"both forms, {rep.note}")


def jacobi_product_rhs(nu1: int, nu2: int, a: Scalar, b: Scalar) -> Poly:
    """Right-hand side of the Jacobi product formula, summed as printed."""
    a, b = Fraction(a), Fraction(b)
    one_p = Poly([1, 1])
    one_m = Poly([1, -1])
    out = ZERO
    for v in range((nu1 + nu2) // 2 + 1):
        outer = Fraction(1, 4 ** v) * binom(nu1 + nu2 - 2 * v, nu1 - v)
        if outer == 0:
            continue
        for k in range(v + 1):
            c = outer * binom(a + nu1, k) * binom(b + nu1, v - k)
            if c == 0:
                continue
            jac = jacobi_oracle(nu1 + nu2 - 2 * v, a + 2 * v - nu2 - k, b + v - nu2 + k)
            out = out + c * one_p ** (2 * k) * one_m ** (2 * (v - k)) * jac
    return out


def check_jacobi_product(nu1: int, nu2: int, a: Scalar, b: Scalar) -> VerdictReport:
    """P_nu1^(a,b) P_nu2^(a+nu1-nu2, b+nu1-nu2) against the double sum, exactly."""
    if nu1 < 0 or nu2 < 0:
        raise ValueError("nu1, nu2 must be nonnegative")
    a, b = Fraction(a), Fraction(b)
    lhs = jacobi_oracle(nu1, a, b) * jacobi_oracle(nu2, a + nu1 - nu2, b + nu1 - nu2)
    params = (("nu1", nu1), ("nu2", nu2), ("a", a), ("b", b))
    return verdict_from_residual("jacobi_product", "jacobi", params, lhs - jacobi_product_rhs(nu1, nu2, a, b))


# -- recursion images --------------------------------------------------------


def hermite_recursion_residuals(n: int) -> dict[str, Poly]:
    """H_{n+1} = 2x H_n - H_n' and H_n' = 2n H_{n-1}, for n >= 1."""
    h = hermite_oracle
    return {
        "differential": h(n + 1) - (2 * X * h(n) - h(n).derive()),
        "derivative": h(n).derive() - 2 * n * h(n - 1),
    }


def laguerre_recursion_residuals(nu: int, alpha: Scalar) -> dict[str, Poly]:
    """Residuals of the associated Laguerre relations obtained from the general recursions, nu >= 1."""
    L = laguerre_oracle
    al = Fraction(alpha)
    d = L(nu, al).derive()
    prev2 = L(nu - 2, al + 2) if nu >= 2 else ZERO
    return {
        "recursive_ode": (nu + 1) * L(nu + 1, al - 1) - (X * d + (al - X) * L(nu, al)),
        "index_lowering": L(nu + 1, al - 1) - (L(nu + 1, al) - L(nu, al)),
        "mixed_derivative": (nu + 1) * L(nu + 1, al) - ((al + nu + 1 - X) * L(nu, al) + X * d),
        "three_term_image": (nu + 1) * L(nu + 1, al - 1) - ((al - X) * L(nu, al) - X * L(nu - 1, al + 1)),
        "shift_l_image": (nu + 1) * L(nu + 1, al) - ((al + nu + 1 - X) * L(nu, al) - X * L(nu - 1, al + 1)),
        "differential_image": (L(nu - 1, al + 1).derive() + d) - (-L(nu - 1, al + 1) - prev2),
        "derivative": d + L(nu - 1, al + 1),
        "standard_three_term": (nu + 1) * L(nu + 1, al)
        - ((al + 2 * nu + 1 - X) * L(nu, al) - (nu + al) * L(nu - 1, al)),
    }


def jacobi_recursion_residuals(nu: int, a: Scalar, b: Scalar, printed: bool = False) -> dict[str, Poly]:
    """Residuals of the Jacobi images of the general recursions, nu >= 1.

    With ``printed=True`` the three-term and cross-l images are taken exactly
    as typeset in the source, which carries a sign slip in the first and an
    index slip (P_nu instead of P_{nu-1}) in the second; those residuals are
    nonzero.
    """
    P = jacobi_oracle
    a, b = Fraction(a), Fraction(b)
    s = ONE - X * X
    nxt = -4 * (nu + 1) * P(nu + 1, a - 1, b - 1)
    three_sign = -1 if printed else 1
    cross_last = P(nu, a, b) if printed else P(nu - 1, a, b)
    prev2 = P(nu - 2, a + 2, b + 2) if nu >= 2 else ZERO
    return {
        "recursive_ode": -2 * (nu + 1) * P(nu + 1, a - 1, b - 1)
        - ((b - a - (a + b) * X) * P(nu, a, b) + s * P(nu, a, b).derive()),
        "three_term_image": nxt
        - (2 * (b - a - (a + b) * X) * P(nu, a, b) + three_sign * (nu + 1 + a + b) * s * P(nu - 1, a + 1, b + 1)),
        "shift_l_image": nxt
        - (2 * (b - a - (a + b + 2 * nu) * X) * P(nu, a - 1, b - 1) + (a + b + 2 * nu) * s * cross_last),
        "differential_image": ((X * X - 1) * prev2.derive() + 4 * X * P(nu - 1, a + 1, b + 1).derive()
                               + 4 * P(nu, a, b).derive())
        - (2 * (a + b + 2 * nu) * P(nu - 1, a + 1, b + 1) + (b - a + (a + b + 2 * nu) * X) * prev2),
    }


def check_classical_recursions(kind: str, params: Sequence[Scalar], nu: int) -> VerdictReport:
    cmap = ClassicalMap(kind, tuple(params))
    if kind == "hermite":
        res = hermite_recursion_residuals(nu)
    elif kind == "laguerre":
        res = {}
        for alpha in (0, 1, Fraction(5, 2)):
            res.update({f"{k}[alpha={format_rational(alpha)}]": v
                        for k, v in laguerre_recursion_residuals(nu, alpha).items()})
    else:
        res = jacobi_recursion_residuals(nu, *cmap.params)
    for name, r in res.items():
        if not r.is_zero():
            return verdict_from_residual("classical_recursions", cmap.label, (("nu", nu),), r, name)
    return VerdictReport("classical_recursions", cmap.label, (("nu", nu),), note=f"{len(res)} relations")
