"""
The generating function, as a series and in closed form
=======================================================

The exponential generating function of the ladder is computed term by term from
its first-order ODE in y; for the classical families it also has a closed form,
whose Taylor coefficients we expand exactly with rational binomial series.
"""

from fractions import Fraction
from math import factorial

from hypoly import closed_genfun_expand, comp_poly, genfun_series, jacobi

a, b, l = Fraction(1, 2), Fraction(3, 2), 2
fam = jacobi(a, b)

# Series route: coefficients are polynomials in x.
series = genfun_series(fam, l, 5)
for n, c in enumerate(series.coeffs):
    print(f"y^{n}:", c)

# n! times each coefficient is the n-th complementary polynomial.
print(all(series.coeffs[n] * factorial(n) == comp_poly(fam, l, n).poly for n in range(6)))

# Closed-form route at a rational base point: [1 - y(1+x)]^a [1 + y(1-x)]^b [...]^l.
x0 = Fraction(1, 3)
print("series at x0:", [str(c) for c in series.eval_x(x0)])
print("closed form :", [str(c) for c in closed_genfun_expand("jacobi", (a, b), l, x0, 5)])
