from fractions import Fraction

import pytest

from hypoly import identities as ids
from hypoly.family import hermite, jacobi, laguerre, make_family
from hypoly.polycore import Poly
from hypoly.report import SampleGrid, VerdictReport, check_bivariate_on_grid


def test_sturm_liouville_examples():
    assert ids.check_sturm_liouville(hermite(), 4, 4).passed
    assert ids.check_sturm_liouville(laguerre(), 3, 2).passed
    assert ids.check_sturm_liouville(jacobi(2, 5), 6, 0).passed
    with pytest.raises(ValueError):
        ids.check_sturm_liouville(hermite(), 2, 3)


def test_hermite_sturm_liouville_is_hermite_ode():
    # P_nu = (-1)^nu H_nu solves H'' - 2x H' + 2 nu H = 0
    from hypoly.classical import hermite_oracle

    h = hermite_oracle(5)
    assert (h.derive().derive() - 2 * Poly([0, 1]) * h.derive() + 10 * h).is_zero()


def test_hypergeometric_examples():
    assert ids.check_hypergeometric(hermite(), 3).passed
    assert ids.check_hypergeometric(jacobi(Fraction(1, 2), Fraction(1, 2)), 4).passed
    assert ids.check_hypergeometric(make_family(2, 1, 3, -1, 7), 0).passed


def test_generalized_rodrigues_examples():
    for nu in range(5):
        assert ids.check_generalized_rodrigues(jacobi(1, 2), 4, nu, nu).passed
    for nu in range(1, 5):
        assert ids.check_generalized_rodrigues(jacobi(1, 2), 4, nu, nu - 1).passed
    assert ids.check_generalized_rodrigues(laguerre(), 4, 3, 1).passed
    with pytest.raises(ValueError):
        ids.check_generalized_rodrigues(laguerre(), 2, 1, 2)


def test_addition_theorem_examples():
    assert ids.check_addition_theorem(hermite(), 3, 5, 4).passed
    # P_1(x;2) + P_1(x;0) = (2 - x) + (-x) = 2 P_1(x;1)
    assert ids.addition_residual(laguerre(), 1, 1, 1).is_zero()
    assert ids.check_addition_theorem(jacobi(1, 2), 2, 3, 4).passed


def test_parity_examples():
    r = ids.check_parity(hermite(), 5, 3)
    assert r.passed and not r.skipped and r.note == "m even"
    r = ids.check_parity(jacobi(Fraction(3, 2), Fraction(3, 2)), 4, 3)
    assert r.passed and r.note == "m even"
    r = ids.check_parity(laguerre(), 3, 2)
    assert r.skipped and r.passed and "HypothesisNotMet" in r.note
    with pytest.raises(ids.HypothesisNotMet):
        ids.parity_exponent(jacobi(1, 2))


def test_parity_odd_sigma_branch():
    # sigma = x (odd), tau constant: w = x^(a-1) has parity, P_nu(-x) = P_nu(x)
    fam = make_family(0, Fraction(1, 2), 0, 3, 0)
    assert ids.parity_exponent(fam) == 1
    for l in range(5):
        for nu in range(6):
            r = ids.check_parity(fam, l, nu)
            assert r.passed and r.note == "m odd"


def test_ladder_and_differential_recursion(fam):
    for l in range(9):
        for nu in range(l + 1):
            assert ids.check_derivative_ladder(fam, l, nu).passed
            assert ids.check_differential_recursion(fam, l, nu).passed


def test_full_single_variable_identities(fam):
    for l in range(7):
        assert ids.check_hypergeometric(fam, l).passed
        for nu in range(l + 1):
            assert ids.check_sturm_liouville(fam, l, nu).passed
            assert ids.check_degree(fam, l, nu).passed
            for mu in range(nu + 1):
                assert ids.check_generalized_rodrigues(fam, l, nu, mu).passed


def test_failed_verdict_carries_residual():
    # deliberately wrong eigenvalue: residual is lambda-shift times P
    fam = laguerre()
    res = ids.sturm_liouville_residual(fam, 3, 2) + Poly([1])
    bad = ids.verdict_from_residual("x", fam.label, (("l", 3),), res)
    assert not bad.passed and bad.witness == Poly([1])
    assert bad.status == "FAIL" and "residual" in bad.line()


def test_verdict_invariant():
    with pytest.raises(ValueError):
        VerdictReport("x", "y", (), True, Poly([1]))
    with pytest.raises(ValueError):
        VerdictReport("x", "y", (), False, None)


def test_verdicts_deterministic():
    a = ids.check_addition_theorem(jacobi(1, 2), 2, 3, 4)
    b = ids.check_addition_theorem(jacobi(1, 2), 2, 3, 4)
    assert a == b


def test_grid_examples():
    r = check_bivariate_on_grid(lambda a, b: 1, lambda a, b: 1, 0, 0)
    assert r.passed and r.note == "1 grid points"
    r = check_bivariate_on_grid(lambda a, b: (a + b) ** 2, lambda a, b: a * a + 2 * a * b + b * b, 2, 2)
    assert r.passed and r.note == "9 grid points"
    r = check_bivariate_on_grid(lambda a, b: (a + b) ** 2, lambda a, b: a * a + b * b, 2, 2)
    assert not r.passed and r.witness != 0


def test_grid_catches_difference_vanishing_on_all_but_one_node():
    g = SampleGrid.for_degrees(3, 2)
    assert len(g.points) == 12
    # degree-3 polynomial in x1 vanishing on three of the four x1 nodes
    def bump(x1, x2):
        out = Fraction(1)
        for node in g.xs[:-1]:
            out *= x1 - node
        return out

    r = check_bivariate_on_grid(bump, lambda a, b: 0, 3, 2)
    assert not r.passed
    with pytest.raises(ValueError):
        SampleGrid((Fraction(1), Fraction(1)), (Fraction(0),))
