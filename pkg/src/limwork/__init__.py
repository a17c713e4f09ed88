"""Planar Voronoi, Delaunay, EMST and convex hull with limited workspace.

Input is read-only, every algorithm works inside a budgeted
:class:`Workspace` of cells, and results leave through a write-only
:class:`OutputStream`.
"""

from .edges import DelaunayEdge, HullEdge, VoronoiEdge
from .emst import FaceWalkOverrun, enumerate_emst, is_emst_edge
from .estimators import (
    ConvexHull,
    DelaunayTriangulation,
    EuclideanMST,
    VoronoiDiagram,
    check_points,
)
from .exact import (
    CirclePosition,
    DuplicatePoints,
    DuplicateSites,
    GeneralPositionViolation,
    Orientation,
    PointSet,
    Ray,
    bisector,
    check_general_position,
    incircle,
    orientation,
    ray_line_intersection,
)
from .generate import GuardExhausted, generate
from .hull import gift_wrap_hull
from .io import ParseError, read_points
from .oracles import (
    TieDetected,
    oracle_delaunay,
    oracle_emst,
    oracle_hull,
    oracle_voronoi,
)
from .tradeoff import batch_find_edges, small_voronoi, tradeoff_voronoi
from .voronoi_cws import (
    NotADelaunayEdge,
    clockwise_next_delaunay_edge,
    enumerate_delaunay_edges,
    enumerate_voronoi_edges,
    find_cell_edge,
)
from .workspace import (
    AlgebraicPoint,
    BoundedInt,
    BudgetExceeded,
    DoubleFree,
    InputRef,
    OutputStream,
    StepCounter,
    Workspace,
)

__version__ = "0.1.0"
