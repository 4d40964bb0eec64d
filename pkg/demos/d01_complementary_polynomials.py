"""
Complementary polynomials, five ways
====================================

Build the complementary polynomials of a hypergeometric-type family by every
available route and watch them agree, coefficient for coefficient.
"""

from hypoly import ROUTES, comp_poly, hermite, jacobi, laguerre, main_poly, make_family

# A family is fixed by sigma = e x^2 + 2 f x + g and tau = a + b x.
fam = laguerre()
print(fam.describe())

# The ladder P_0, P_1, ..., P_l at l = 3.  The top rung is the main polynomial.
for nu in range(4):
    print(f"P_{nu}(x; 3) =", comp_poly(fam, 3, nu).poly)
print("main polynomial P_3 =", main_poly(fam, 3))

# Every route gives the same exact coefficients.
for route in ROUTES:
    print(f"{route:>15}:", comp_poly(fam, 3, 2, route).poly)

# The same holds for the other classical families and for an arbitrary one.
odd = make_family("1/2", -1, 3, 2, "-7/3", label="odd")
for f in (hermite(), jacobi("1/2", "1/2"), odd):
    polys = {route: comp_poly(f, 4, 3, route).poly for route in ROUTES}
    print(f.label, "all routes agree:", len(set(polys.values())) == 1, "->", polys["recursive_ode"])
