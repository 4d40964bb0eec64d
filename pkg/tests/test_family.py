from fractions import Fraction

import pytest

from hypoly.family import (
    DegenerateSigma,
    big_lambda,
    hermite,
    jacobi,
    laguerre,
    make_family,
    pearson_ratio,
    small_lambda,
)
from hypoly.polycore import Poly


def test_classical_constructors():
    h = hermite()
    assert h.sigma == Poly([1]) and h.tau == Poly([0, -2])
    lag = laguerre()
    assert lag.sigma == Poly([0, 1]) and lag.tau == Poly([1, -1])
    a, b = Fraction(1, 2), Fraction(-1, 3)
    j = jacobi(a, b)
    assert j.sigma == Poly([1, 0, -1])
    assert j.tau == Poly([b - a, -(2 + a + b)])


def test_derived_symbols():
    f = make_family(3, Fraction(1, 2), -1, 2, 5)
    assert f.sigma == Poly([-1, 1, 3])
    assert f.dsigma == Poly([1, 6])
    assert f.d2sigma == 6
    assert f.dtau == 5


def test_degenerate_sigma():
    with pytest.raises(DegenerateSigma):
        make_family(0, 0, 0, 1, 1)


def test_big_lambda_examples():
    assert big_lambda(hermite(), 0) == 0
    assert big_lambda(hermite(), 3) == 6
    assert big_lambda(laguerre(), 4) == 4


def test_small_lambda_examples():
    for l in range(6):
        assert small_lambda(jacobi(2, 3), l, 0) == 0
        for nu in range(8):
            assert small_lambda(laguerre(), l, nu) == nu
            assert small_lambda(hermite(), l, nu) == 2 * nu


def test_pearson_ratio_examples():
    assert pearson_ratio(hermite()) == (Poly([0, -2]), Poly([1]))
    assert pearson_ratio(laguerre()) == (Poly([0, -1]), Poly([0, 1]))
    a, b = Fraction(3, 2), Fraction(1, 4)
    assert pearson_ratio(jacobi(a, b)) == (Poly([b - a, -(a + b)]), Poly([1, 0, -1]))


def test_eigen_recursion_and_consistency(fam):
    for l in range(13):
        assert small_lambda(fam, l, l) == big_lambda(fam, l)
        for nu in range(12):
            step = (l - nu - 1) * fam.d2sigma + fam.dtau
            assert small_lambda(fam, l, nu + 1) == small_lambda(fam, l, nu) - step
    assert big_lambda(fam, 1) == -fam.dtau


def test_family_is_hashable_value():
    assert jacobi(1, 2) == jacobi(1, 2)
    assert hash(jacobi(1, 2)) == hash(make_family(-1, 0, 1, 1, -5, "other label"))
