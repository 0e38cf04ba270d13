"""Derivative polynomials of the tree function and Lambert W, with the
Greg/Cayley tree combinatorics they count and a machine verification
suite for every identity involved."""

from .polys import (
    Poly,
    PolyTriangle,
    X,
    coefficient_rows,
    double_factorial,
    eval_rational,
    gen_F,
    gen_G,
    gen_H,
    gen_P,
    gen_Q,
    shift,
)
from .report import CheckReport
from .series import (
    RatSeries,
    check_basic_identities,
    check_def_identity,
    check_egf_theorem,
    check_gh_functional,
    check_imp_census_series,
    check_reversion_lemma,
    nth_derivative,
    poly_at_series,
    reversion,
    rhs_series,
    series_T,
    series_W,
)
from .suite import CHECK_NAMES, SuiteConfig, SuiteResult, run_suite
from .trees import (
    VARIANTS,
    CayleyTree,
    GregTree,
    degree_filtered_count,
    enumerate_cayley,
    enumerate_greg,
    imp,
    imp_census,
    imp_polynomial,
    prufer_decode,
    restrict,
    restriction_census,
    u_bound,
    unl_polynomial,
)
from .wfunc import (
    WEval,
    check_bernstein,
    check_halfplane,
    eval_W,
    family_derivative,
    finite_difference_W,
    halfplane_sample,
    nth_derivative_W,
)

__version__ = "0.1.0"

__all__ = [
    "CHECK_NAMES",
    "CayleyTree",
    "CheckReport",
    "GregTree",
    "Poly",
    "PolyTriangle",
    "RatSeries",
    "SuiteConfig",
    "SuiteResult",
    "VARIANTS",
    "WEval",
    "X",
    "check_basic_identities",
    "check_bernstein",
    "check_def_identity",
    "check_egf_theorem",
    "check_gh_functional",
    "check_halfplane",
    "check_imp_census_series",
    "check_reversion_lemma",
    "coefficient_rows",
    "degree_filtered_count",
    "double_factorial",
    "enumerate_cayley",
    "enumerate_greg",
    "eval_W",
    "eval_rational",
    "family_derivative",
    "finite_difference_W",
    "gen_F",
    "gen_G",
    "gen_H",
    "gen_P",
    "gen_Q",
    "halfplane_sample",
    "imp",
    "imp_census",
    "imp_polynomial",
    "nth_derivative",
    "nth_derivative_W",
    "poly_at_series",
    "prufer_decode",
    "restrict",
    "restriction_census",
    "reversion",
    "rhs_series",
    "run_suite",
    "series_T",
    "series_W",
    "shift",
    "u_bound",
    "unl_polynomial",
]
