"""magoglab: exact-arithmetic toolkit for magog matrices, the triangles
in bijection with them, and the two TSSCPP polytopes."""

from .core import (
    BooleanTriangle,
    Classification,
    InversionStats,
    MagogTriangle,
    Permutation,
    SignMatrix,
    ValidationFailure,
    ValidationReport,
    classify,
    column_one_positions,
    column_partial_sums,
    inversion_profile,
    inversion_stats,
    is_132_avoiding,
    magog_triangle_to_matrix,
    matrix_to_magog_triangle,
    max_negative_ones_bound,
    max_negative_ones_matrix,
    validate_asm,
    validate_boolean_triangle,
    validate_magog,
    validate_square_sign,
)
from .enumeration import (
    CeilingExceeded,
    DistributionTable,
    boundary_count,
    conjecture_suite,
    count,
    distribution,
    distribution_bundle,
    enumerate_objects,
    product_formula,
    theorem_suite,
)
from .polytope import (
    ConvexDecomposition,
    NotInHull,
    RationalMatrixPoint,
    RationalPolynomial,
    RationalTrianglePoint,
    affine_dimension,
    boolean_separating_hyperplane,
    btp_contains,
    btp_decompose,
    btp_facet_audit,
    btp_split,
    check_necessary_inequalities,
    ehrhart_interpolate,
    lattice_points_in_dilate,
    lp_membership,
    magog_separating_hyperplane,
    tsscpp3_vertex_audit,
    verify_vertex_certificates,
)

__version__ = "0.1.0"
