"""Complementary polynomials of hypergeometric-type ODEs in exact rational arithmetic."""

from .classical import (
    BasePointSingular,
    ClassicalMap,
    binom,
    check_classical_map,
    check_jacobi_product,
    check_laguerre_addition,
    closed_genfun_expand,
    hermite_oracle,
    jacobi_oracle,
    laguerre_oracle,
)
from .construct import (
    ROUTES,
    CompPoly,
    IndexUnderflow,
    comp_poly,
    comp_poly_expansion,
    comp_poly_recursive,
    comp_poly_shift_l,
    comp_poly_three_term,
    genfun_series,
    main_poly,
)
from .family import (
    DegenerateSigma,
    Family,
    big_lambda,
    hermite,
    jacobi,
    laguerre,
    make_family,
    pearson_ratio,
    random_families,
    small_lambda,
)
from .identities import (
    HypothesisNotMet,
    check_addition_theorem,
    check_generalized_rodrigues,
    check_hypergeometric,
    check_parity,
    check_sturm_liouville,
)
from .polycore import InexactDivision, Poly, PolySeries, Rational, poly_div_exact
from .report import SampleGrid, VerdictReport, check_bivariate_on_grid
from .suite import ConfigError, SuiteConfig, run_suite

__version__ = "0.1.0"
