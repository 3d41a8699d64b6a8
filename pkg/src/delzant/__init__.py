"""Exact-arithmetic toolkit for Delzant polygons: generation, validation,
the spectral forward map, and finite inverse reconstruction."""

from .errors import (
    BudgetExceededError,
    ChopError,
    DegenerateFamilyError,
    DelzantError,
    InconsistentSystemError,
    OrientationWarning,
    ParseError,
    PoleError,
    ReconstructionInfeasibleError,
    StructuralPolygonError,
    UnsupportedAmbiguityError,
    UnsupportedError,
)
from .geometry import (
    Edge,
    Polygon,
    SubpolygonReport,
    ValidationReport,
    area,
    detect_subpolygons,
    normalize_translation,
    polygon_from_halfplanes,
    primitive_outward_normal,
    sl2z_equivalent,
    validate_delzant,
)
from .polytope3 import Facet, Polytope3
from .reconstruct import (
    AssignmentRecord,
    CandidateSet,
    GenericityReport,
    SignedEdgeList,
    ThreePairFamily,
    angle_sort_oracle,
    build_most_obtuse,
    bundle_reconstruct,
    enumerate_candidates,
    is_generic,
    solve_three_pair_parameter,
    three_pair_family,
)
from .spectral import (
    HalfSpaceEntry,
    HalfSpaceSystem,
    HeatLeadingTerm,
    NormalClass,
    SpectralData,
    Stratum,
    bundle_facet_data,
    donnelly_leading_term,
    euler_characteristic,
    evaluate_leading_coefficient,
    fixed_point_strata,
    parallel_pair_count,
    spectral_data,
    vertex_count,
)
from .vectors import Vec2, Vec3, format_rational, parse_rational
from .zoo import ChopSpec, ZooCensus, chop, hirzebruch, parallel_pair_census, perturb_generic, random_delzant

__version__ = "0.1.0"

__all__ = [
    "AssignmentRecord",
    "BudgetExceededError",
    "CandidateSet",
    "ChopError",
    "ChopSpec",
    "DegenerateFamilyError",
    "DelzantError",
    "Edge",
    "Facet",
    "GenericityReport",
    "HalfSpaceEntry",
    "HalfSpaceSystem",
    "HeatLeadingTerm",
    "InconsistentSystemError",
    "NormalClass",
    "OrientationWarning",
    "ParseError",
    "PoleError",
    "Polygon",
    "Polytope3",
    "ReconstructionInfeasibleError",
    "SignedEdgeList",
    "SpectralData",
    "Stratum",
    "StructuralPolygonError",
    "SubpolygonReport",
    "ThreePairFamily",
    "UnsupportedAmbiguityError",
    "UnsupportedError",
    "ValidationReport",
    "Vec2",
    "Vec3",
    "ZooCensus",
    "angle_sort_oracle",
    "area",
    "build_most_obtuse",
    "bundle_facet_data",
    "bundle_reconstruct",
    "chop",
    "detect_subpolygons",
    "donnelly_leading_term",
    "enumerate_candidates",
    "euler_characteristic",
    "evaluate_leading_coefficient",
    "fixed_point_strata",
    "format_rational",
    "hirzebruch",
    "is_generic",
    "normalize_translation",
    "parallel_pair_census",
    "parallel_pair_count",
    "parse_rational",
    "perturb_generic",
    "polygon_from_halfplanes",
    "primitive_outward_normal",
    "random_delzant",
    "sl2z_equivalent",
    "solve_three_pair_parameter",
    "spectral_data",
    "three_pair_family",
    "validate_delzant",
    "vertex_count",
]
