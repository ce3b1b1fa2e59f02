"""Exact-arithmetic toolkit for distinct distances between points on plane
algebraic curves: curves and their symmetries, four-dimensional distance
curves, incidence and quadruple counting, and a scenario harness."""

from .curves import (
    CommonComponent,
    FinitePoints,
    IntersectionPoint,
    PlaneCurve,
    PointSet,
    circle_curve,
    classify_conic,
    conic_curve,
    contains_point,
    curve_poly,
    detect_special,
    generate_points,
    graph_curve,
    intersect_curves,
    line_curve,
)
from .elekes import (
    Config,
    ConstraintConic,
    FourCurve,
    NoSymmetry,
    NormalizationReport,
    PartitionResult,
    ProjectionReport,
    QuadrupleReport,
    SymmetryFound,
    build_four_curves,
    constraint_conic,
    count_incidences,
    distance_set,
    four_curve,
    generic_projection,
    incidence,
    line_case_intersection,
    normalize_config,
    partition,
    quadruple_report,
    same_distance_symmetry_test,
    sqdist,
)
from .errors import (
    AssumptionViolation,
    BudgetExceeded,
    CurvedistError,
    DegreeError,
    EliminationBudget,
    ExcludedPair,
    InputError,
    NonGenericSeed,
    ParseError,
    PreconditionError,
    UnsupportedScalar,
)
from .harness import (
    RunReport,
    Scenario,
    SuiteReport,
    estimate_exponent,
    run_scenario,
    scenario_from_json,
    verify_all,
)
from .isometry import (
    AffineMap,
    Isometry,
    apply_to_poly,
    conic_stabilizer,
    fixes_curve,
    isometry_from_point_pairs,
    reflection_across_line,
)
from .mpoly import MPoly, normalize_primitive, poly_gcd, resultant, squarefree_part
from .parsepoly import parse_poly
from .scalar import Scalar
from .serialize import config_from_json, curve_from_json, dump_json, load_json, pointset_from_json
from .symmetry import FiniteSymmetries, InfiniteFamily, UnrepresentableCandidate, find_symmetries
from .upoly import UPoly, isolate_real_roots

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "AssumptionViolation",
    "BudgetExceeded",
    "CommonComponent",
    "Config",
    "ConstraintConic",
    "CurvedistError",
    "DegreeError",
    "EliminationBudget",
    "ExcludedPair",
    "FiniteSymmetries",
    "FinitePoints",
    "FourCurve",
    "InfiniteFamily",
    "InputError",
    "IntersectionPoint",
    "Isometry",
    "MPoly",
    "NoSymmetry",
    "NonGenericSeed",
    "NormalizationReport",
    "ParseError",
    "PartitionResult",
    "PlaneCurve",
    "PointSet",
    "PreconditionError",
    "ProjectionReport",
    "QuadrupleReport",
    "RunReport",
    "Scalar",
    "Scenario",
    "SuiteReport",
    "SymmetryFound",
    "UPoly",
    "UnrepresentableCandidate",
    "UnsupportedScalar",
    "apply_to_poly",
    "build_four_curves",
    "circle_curve",
    "classify_conic",
    "config_from_json",
    "conic_curve",
    "conic_stabilizer",
    "constraint_conic",
    "contains_point",
    "count_incidences",
    "curve_from_json",
    "curve_poly",
    "detect_special",
    "distance_set",
    "dump_json",
    "estimate_exponent",
    "find_symmetries",
    "fixes_curve",
    "four_curve",
    "generate_points",
    "generic_projection",
    "graph_curve",
    "incidence",
    "intersect_curves",
    "isolate_real_roots",
    "isometry_from_point_pairs",
    "line_case_intersection",
    "line_curve",
    "load_json",
    "normalize_config",
    "normalize_primitive",
    "parse_poly",
    "partition",
    "pointset_from_json",
    "poly_gcd",
    "quadruple_report",
    "reflection_across_line",
    "resultant",
    "run_scenario",
    "same_distance_symmetry_test",
    "scenario_from_json",
    "sqdist",
    "squarefree_part",
    "verify_all",
]
