from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hypoly.family import hermite, jacobi, laguerre, random_families
from hypoly.polycore import Poly

SEED = 20240611

small_fracs = st.builds(
    Fraction, st.integers(min_value=-9, max_value=9), st.integers(min_value=1, max_value=9)
)
polys = st.lists(small_fracs, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def classical_families():
    return [hermite(), laguerre(), jacobi(Fraction(1, 2), Fraction(1, 2)), jacobi(1, Fraction(-1, 2))]


def matrix_families():
    return classical_families() + random_families(5, SEED)


@pytest.fixture(params=matrix_families(), ids=lambda f: f.label)
def fam(request):
    return request.param
