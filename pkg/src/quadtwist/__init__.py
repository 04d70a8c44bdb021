"""Exact arithmetic for well-rounded and stable twists of ideal lattices
from real quadratic fields."""

from .quadfield import (
    InvalidFieldError,
    QuadElem,
    Surd,
    check_field,
    delta,
    discriminant,
    fundamental_unit,
    is_squarefree,
    is_totally_positive,
    norm,
    surd_compare,
    trace,
)
from .ideals import (
    CanonicalBasisError,
    CanonicalIdeal,
    basis_elements,
    enumerate_canonical,
    ideal_norm,
    primitive_reduction,
    ring_of_integers,
    validate_canonical,
)
from .lattice2 import (
    Gram2,
    SimilarityPoint,
    UnimodularMap,
    covering_radius_sq,
    det_gram,
    gram_of_twist,
    hermite_thickness,
    hermite_thickness_sq,
    is_lagrange_reduced,
    is_paper_reduced,
    is_stable,
    is_wr,
    lagrange_reduce,
    minima_brute_force,
    reduce_to_fundamental,
    similarity_point,
    successive_minima,
    wr_stretch,
)
from .twist import (
    FeasibilityReport,
    Interval,
    TwistVerdict,
    raw_stable_polynomials,
    simplest_rational_in,
    solve_quadratic_ge0,
    stable_bound_filter,
    stable_twist,
    wr_bound_filter,
    wr_twist,
)
from .geodesic import (
    F_invariant,
    GeodesicSample,
    orthogonal_only,
    sample_at,
    sample_orbit,
    wr_intersection_classes,
)
from .applications import (
    EuclideanBoundReport,
    HEXAGONAL_THICKNESS_SQ,
    NormSearchResult,
    ThicknessSearchResult,
    d_min_sq_twist,
    euclidean_bounds,
    form_minimum,
    min_abs_norm,
    tau_min_search,
)

__version__ = "1.0.0"

__all__ = [
    "InvalidFieldError",
    "QuadElem",
    "Surd",
    "check_field",
    "delta",
    "discriminant",
    "fundamental_unit",
    "is_squarefree",
    "is_totally_positive",
    "norm",
    "surd_compare",
    "trace",
    "CanonicalBasisError",
    "CanonicalIdeal",
    "basis_elements",
    "enumerate_canonical",
    "ideal_norm",
    "primitive_reduction",
    "ring_of_integers",
    "validate_canonical",
    "Gram2",
    "SimilarityPoint",
    "UnimodularMap",
    "covering_radius_sq",
    "det_gram",
    "gram_of_twist",
    "hermite_thickness",
    "hermite_thickness_sq",
    "is_lagrange_reduced",
    "is_paper_reduced",
    "is_stable",
    "is_wr",
    "lagrange_reduce",
    "minima_brute_force",
    "reduce_to_fundamental",
    "similarity_point",
    "successive_minima",
    "wr_stretch",
    "FeasibilityReport",
    "Interval",
    "TwistVerdict",
    "raw_stable_polynomials",
    "simplest_rational_in",
    "solve_quadratic_ge0",
    "stable_bound_filter",
    "stable_twist",
    "wr_bound_filter",
    "wr_twist",
    "F_invariant",
    "GeodesicSample",
    "orthogonal_only",
    "sample_at",
    "sample_orbit",
    "wr_intersection_classes",
    "EuclideanBoundReport",
    "HEXAGONAL_THICKNESS_SQ",
    "NormSearchResult",
    "ThicknessSearchResult",
    "d_min_sq_twist",
    "euclidean_bounds",
    "form_minimum",
    "min_abs_norm",
    "tau_min_search",
]
