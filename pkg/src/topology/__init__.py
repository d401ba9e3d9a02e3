"""
Curve topology: planar arrangements, TOP, common points and planar graphs
"""

from .shear import shear, unshear
from .points import PlanePoint
from .arrangement import (
    Band,
    Branch,
    Fiber,
    FiberPoint,
    PlanarArrangement,
    arrange,
    arrange_sheared,
)
from .top import (
    GenericityVerdict,
    MarkedPoint,
    PlanarTopology,
    common_points,
    is_generic_position,
    top,
    top_with_respect_to,
    topology_of_arrangement,
)
from .graph import GraphVertex, PlanarGraph, planar_graph

__all__ = [
    "shear",
    "unshear",
    "PlanePoint",
    "Band",
    "Branch",
    "Fiber",
    "FiberPoint",
    "PlanarArrangement",
    "arrange",
    "arrange_sheared",
    "GenericityVerdict",
    "MarkedPoint",
    "PlanarTopology",
    "common_points",
    "is_generic_position",
    "top",
    "top_with_respect_to",
    "topology_of_arrangement",
    "GraphVertex",
    "PlanarGraph",
    "planar_graph",
]
