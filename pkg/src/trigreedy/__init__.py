"""Schnyder drawings of planar triangulations and greedy routing on them."""

__version__ = "0.1.0"

from .drawing import CartesianPlacement, Drawing, compute_drawing, region_counts, region_counts_oracle, to_cartesian, validate_drawing
from .formats import ParseError, read_bary, read_sat, read_tri, write_bary, write_sat, write_tri
from .generate import generate_stacked, randomize_flips
from .geometry import validate_enclosing_triangle, validate_planarity, validate_three_wedge
from .realizer import Realizer, compute_realizer, validate_realizer
from .routing import (
    DeliveryReport,
    Outcome,
    RouteTrace,
    Strategy,
    compare_strategies,
    hex_distance,
    next_hop_euclidean,
    next_hop_sector,
    route,
    verify_all_pairs,
)
from .svg import render_svg
from .sectors import (
    EmptySector,
    IdenticalCoordinates,
    NoUniqueMinimum,
    SaturatedGraph,
    check_saturated,
    classify_sector,
    extract_saturated,
    saturated_equals_realizer,
    sign_triple,
)
from .triangulation import (
    CORNERS,
    InconsistentRotation,
    MissingOuterFace,
    NotTriangulated,
    Triangulation,
    TriangulationError,
    WrongEdgeCount,
    build_triangulation,
    validate_triangulation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
