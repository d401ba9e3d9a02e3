"""
Cylindrical decomposition of quadric arrangements, connectivity and Betti numbers
"""

from .objects import (
    Atom,
    ObjectDescriptor,
    Region,
    Relation,
    parse_object_line,
    validate_object,
)
from .decomposition import CadResult, Cell, StackNode, cad_quadrics, projection_factors
from .adjacency import adjacency_01, plane_neighbours
from .components import Component, Signature, component_of, components, signatures
from .betti import BettiResult, betti01, incidence, mv_matrices, rank

__all__ = [
    "Atom",
    "ObjectDescriptor",
    "Region",
    "Relation",
    "parse_object_line",
    "validate_object",
    "CadResult",
    "Cell",
    "StackNode",
    "cad_quadrics",
    "projection_factors",
    "adjacency_01",
    "plane_neighbours",
    "Component",
    "Signature",
    "component_of",
    "components",
    "signatures",
    "BettiResult",
    "betti01",
    "incidence",
    "mv_matrices",
    "rank",
]
