"""
Dimensions of graded algebras: Hilbert functions of monomial algebras,
rational Poincaré series, Hilbert-Serre classification and degree-truncated
initial algebras.
"""
from .errors import (
    CapacityError,
    DimensionMismatch,
    GradimError,
    InvalidOrder,
    NotRegularError,
    ParseError,
    PreconditionError,
    SubductionLimitError,
    UnknownCase,
    ZeroPolynomialError,
)
from .config import Defaults, Limits
from .monomials import ExponentVector, MonomialOrder, Ordering, WeightVector, compare, weighted_degree
from .polynomial import Polynomial, leading_monomial, leading_term, poly_mul
from .linalg import (
    EchelonForm,
    IntegerLattice,
    RationalMatrix,
    bareiss_rank,
    hermite_normal_form,
    lattice_rank,
    row_echelon,
)
from .series import (
    GradedSeries,
    HSClassification,
    NoFit,
    Obstruction,
    RationalSeries,
    Verdict,
    classify_hilbert_serre,
    expand,
    exponential_series,
    fit_rational,
    lift_regular_element,
    partition_series,
    pole_order_at_one,
    power_sum_series,
    radius_estimate,
    regular_element_factor,
)
from .monoid import (
    DimensionReport,
    GrowthTable,
    MonoidPresentation,
    dimension_report,
    gk_slope,
    growth_table,
    hilbert_function,
    lattice_point_bound,
    monoid_rank,
)
from .sagbi import (
    InitialAlgebraTruncation,
    SubalgebraPresentation,
    degree_component_basis,
    pure_power_check,
    initial_algebra_truncation,
    order_family_check,
    subduct,
    verify_poincare_equality,
)
from .formats import format_polynomial, parse_monomial, parse_polynomial
from .gallery import GalleryParams, RunReport, build_case, run_case
from .cli import cli_main

__all__ = [
    "CapacityError",
    "DimensionMismatch",
    "GradimError",
    "InvalidOrder",
    "NotRegularError",
    "ParseError",
    "PreconditionError",
    "SubductionLimitError",
    "UnknownCase",
    "ZeroPolynomialError",
    "Defaults",
    "Limits",
    "ExponentVector",
    "MonomialOrder",
    "Ordering",
    "WeightVector",
    "compare",
    "weighted_degree",
    "Polynomial",
    "leading_monomial",
    "leading_term",
    "poly_mul",
    "EchelonForm",
    "IntegerLattice",
    "RationalMatrix",
    "bareiss_rank",
    "hermite_normal_form",
    "lattice_rank",
    "row_echelon",
    "GradedSeries",
    "HSClassification",
    "NoFit",
    "Obstruction",
    "RationalSeries",
    "Verdict",
    "classify_hilbert_serre",
    "expand",
    "exponential_series",
    "fit_rational",
    "lift_regular_element",
    "partition_series",
    "pole_order_at_one",
    "power_sum_series",
    "radius_estimate",
    "regular_element_factor",
    "DimensionReport",
    "GrowthTable",
    "MonoidPresentation",
    "dimension_report",
    "gk_slope",
    "growth_table",
    "hilbert_function",
    "lattice_point_bound",
    "monoid_rank",
    "InitialAlgebraTruncation",
    "SubalgebraPresentation",
    "degree_component_basis",
    "pure_power_check",
    "initial_algebra_truncation",
    "order_family_check",
    "subduct",
    "verify_poincare_equality",
    "format_polynomial",
    "parse_monomial",
    "parse_polynomial",
    "GalleryParams",
    "RunReport",
    "build_case",
    "run_case",
    "cli_main",
]
