"""Exact shortest-path metric on the Sierpinski gasket via symbolic addresses."""

from .codes import (
    Code,
    MalformedCode,
    NotAJunction,
    canonicalize,
    is_junction,
    parse_code,
    prepend,
    same_point,
    shift,
    twin,
)
from .geodesic import DepthTooSmall, Geodesic, JunctionTriple, SamePoint, geodesic, junction_triple
from .geometry import (
    Barycentric,
    CartesianPoint,
    apply_contraction,
    to_barycentric,
    to_cartesian,
    twin_coordinates_agree,
)
from .levelgraph import (
    LevelGraph,
    LevelTooLarge,
    VertexNotFound,
    build_level_graph,
    graph_distance,
    oracle_distance,
    project,
)
from .metric import (
    ROUTE_EDGE,
    ROUTE_P,
    ROUTE_TIE,
    DistanceResult,
    IdenticalCodes,
    distance,
    indicator_bits,
    periodic_bit_sum,
    split_index,
)

__version__ = "0.1.0"

__all__ = [
    "Barycentric",
    "CartesianPoint",
    "Code",
    "DepthTooSmall",
    "DistanceResult",
    "Geodesic",
    "IdenticalCodes",
    "JunctionTriple",
    "LevelGraph",
    "LevelTooLarge",
    "MalformedCode",
    "NotAJunction",
    "ROUTE_EDGE",
    "ROUTE_P",
    "ROUTE_TIE",
    "SamePoint",
    "VertexNotFound",
    "apply_contraction",
    "build_level_graph",
    "canonicalize",
    "distance",
    "geodesic",
    "graph_distance",
    "indicator_bits",
    "is_junction",
    "junction_triple",
    "oracle_distance",
    "parse_code",
    "periodic_bit_sum",
    "prepend",
    "project",
    "same_point",
    "shift",
    "split_index",
    "to_barycentric",
    "to_cartesian",
    "twin",
    "twin_coordinates_agree",
    "__version__",
]
