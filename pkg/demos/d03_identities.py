"""
Checking identities exactly
===========================

Every identity check returns a verdict.  A pass means the residual is the zero
polynomial.  A failure carries the nonzero residual as its witness, so you can
see which coefficient is off.
"""

from hypoly import (
    check_addition_theorem,
    check_jacobi_product,
    check_laguerre_addition,
    check_parity,
    check_sturm_liouville,
    hermite,
    jacobi,
    laguerre,
    run_suite,
)

# Single-variable identities: the residual is a polynomial that must vanish.
print(check_sturm_liouville(jacobi(1, "-1/2"), 5, 3).line())
print(check_addition_theorem(hermite(), 2, 3, 4).line())

# Parity needs a symmetric family; Laguerre is skipped rather than failed.
print(check_parity(hermite(), 4, 3).line())
print(check_parity(laguerre(), 4, 3).line())

# Two-variable identities are decided by exact sampling on a big enough grid.
print(check_laguerre_addition(4, 2, 3).line())
print(check_jacobi_product(2, 3, "1/2", "3/2").line())

# A small suite, run with four worker threads; the order of the reports is fixed.
reports = run_suite({"families": ["laguerre", "random:2"], "l_max": 3,
                     "identities": ["route_agreement", "parity", "degree"]}, workers=4)
for r in reports[:6]:
    print(r.line())
print(len(reports), "reports, all passed:", all(r.passed for r in reports))
