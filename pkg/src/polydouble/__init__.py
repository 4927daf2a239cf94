"""Exact tools for the facet-doubling operation on simple polytopes.

Three views of the same construction are implemented and cross-checked:
combinatorial (dual simplicial complexes), polynomial (f- and
h-polynomials with the doubling identity h(double) = (a+t)^(m-n)
h(a^2, t^2)), and geometric (exact rational kernel slices with column
duplication).  A Hochster-type engine computes cohomology ranks of
moment-angle and real moment-angle complexes and checks the 2^(m-n)
lower bound on the total rank.
"""

from .bipoly import (
    BivariatePolynomial,
    derivative_sum,
    divided_derivative,
    doubling_operator_apply,
    f_polynomial,
    face_sum_lemma2,
    h_polynomial,
    theorem3_rhs,
)
from .catalog import (
    CatalogEntry,
    built_in_catalog,
    cube_entry,
    parse_spec,
    point_entry,
    polygon_entry,
    product_entry,
    simplex_entry,
)
from .complexes import (
    DualPolytope,
    SimplicialComplex,
    disjoint_facet_count,
    double_complex,
    equal_under_relabel,
    f_counts,
    full_subcomplex,
    join,
    link,
    minimal_non_faces,
    validate_dual,
)
from .errors import PolytopeError
from .geometry import (
    LinearSlice,
    PolytopeSystem,
    VertexSet,
    derive_linear_slice,
    double_system,
    dual_complex_from_hrep,
    enumerate_slice_vertices,
    enumerate_vertices,
    validate_hrep,
)
from .moment_angle import (
    GF2,
    RATIONALS,
    SPACE_R,
    SPACE_Z,
    BettiTable,
    hochster_betti,
    hrk,
    reduced_homology_ranks,
    verify_facet_splitting,
    verify_lemma6,
    verify_trc_bound,
)
from .polytope_ring import FormalPolytopeSum, boundary_d, h_of_sum, product

__all__ = [
    "BettiTable",
    "BivariatePolynomial",
    "CatalogEntry",
    "DualPolytope",
    "FormalPolytopeSum",
    "GF2",
    "LinearSlice",
    "PolytopeError",
    "PolytopeSystem",
    "RATIONALS",
    "SPACE_R",
    "SPACE_Z",
    "SimplicialComplex",
    "VertexSet",
    "boundary_d",
    "built_in_catalog",
    "cube_entry",
    "derivative_sum",
    "derive_linear_slice",
    "disjoint_facet_count",
    "divided_derivative",
    "double_complex",
    "double_system",
    "doubling_operator_apply",
    "dual_complex_from_hrep",
    "enumerate_slice_vertices",
    "enumerate_vertices",
    "equal_under_relabel",
    "f_counts",
    "f_polynomial",
    "face_sum_lemma2",
    "full_subcomplex",
    "h_of_sum",
    "h_polynomial",
    "hochster_betti",
    "hrk",
    "join",
    "link",
    "minimal_non_faces",
    "parse_spec",
    "point_entry",
    "polygon_entry",
    "product",
    "product_entry",
    "reduced_homology_ranks",
    "simplex_entry",
    "theorem3_rhs",
    "validate_dual",
    "validate_hrep",
    "verify_facet_splitting",
    "verify_lemma6",
    "verify_trc_bound",
]
