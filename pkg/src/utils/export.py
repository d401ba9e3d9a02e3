"""
Result Export
JSON, DOT and rich-table renderings of topologies, intersections, decompositions and Betti
numbers. Coordinates are printed in the input frame unless stated otherwise.
"""

import json
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rich.table import Table

from src.cad.betti import BettiResult
from src.cad.components import Component
from src.cad.decomposition import CadResult, Label
from src.quadrics.engine import IntersectionResult
from src.quadrics.lifting import SpatialPoint
from src.topology.graph import planar_graph
from src.topology.top import PlanarTopology

from .formatting import point_text, to_decimal


def to_json(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=False)


def _label_text(label: Label) -> str:
    return "(" + ",".join(str(i) for i in label) + ")"


# Topology

def topology_to_dict(topology: PlanarTopology, precision: int = 15) -> Dict[str, Any]:
    """TOP numbers (abscissas in the sheared frame) and the graph in the input frame"""
    graph = planar_graph(topology)
    return {
        "shear": topology.shear,
        "abscissas": [to_decimal(x, precision) for x in topology.abscissas],
        "bandCounts": list(topology.band_counts),
        "fiberCounts": list(topology.fiber_counts),
        "criticalIndices": list(topology.critical_indices),
        "marked": [
            {"fiber": m.fiber, "position": m.position, "curves": list(m.curves)}
            for m in topology.marked
        ],
        "graph": {
            "vertices": [
                {
                    "column": v.column,
                    "index": v.index,
                    "kind": v.kind,
                    "point": [to_decimal(c, precision) for c in v.point.original()],
                }
                for v in graph.vertices
            ],
            "edges": [list(e) for e in graph.edges],
        },
    }


def topology_to_dot(topology: PlanarTopology, precision: int = 15) -> str:
    graph = planar_graph(topology)
    lines = ["graph topology {"]
    for n, v in enumerate(graph.vertices):
        lines.append(f'  v{n} [label="{point_text(v.point.original(), precision)}"];')
    for a, b in graph.edges:
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines)


def topology_table(topology: PlanarTopology, precision: int = 15) -> Table:
    table = Table(title=f"Curve topology (shear t={topology.shear})")
    table.add_column("fiber", justify="right")
    table.add_column("x", justify="right")
    table.add_column("points", justify="right")
    table.add_column("critical", justify="right")
    table.add_column("branches right", justify="right")
    table.add_row("", "", "", "", str(topology.band_counts[0]))
    for i, x in enumerate(topology.abscissas):
        table.add_row(
            str(i + 1),
            to_decimal(x, precision),
            str(topology.fiber_counts[i]),
            str(topology.critical_indices[i]),
            str(topology.band_counts[i + 1]),
        )
    return table


# Intersection

def _spatial(point: SpatialPoint, precision: int) -> Dict[str, Any]:
    return {
        "coordinates": [to_decimal(c, precision) for c in point.coordinates],
        "slot": point.slot,
        "kind": point.kind,
    }


def intersection_to_dict(result: IntersectionResult, precision: int = 15) -> Dict[str, Any]:
    """Isolated points as coordinate triples; graph vertices keep their slot and kind"""
    return {
        "empty": result.empty,
        "isolated": [[to_decimal(c, precision) for c in p.coordinates] for p in result.isolated],
        "graph": {
            "vertices": [_spatial(p, precision) for p in result.graph.vertices],
            "edges": [list(e) for e in result.graph.edges],
        },
        "meta": {**result.meta, "precision": precision},
    }


def intersection_to_dot(result: IntersectionResult, precision: int = 15) -> str:
    lines = ["graph intersection {"]
    for n, p in enumerate(result.graph.vertices):
        lines.append(f'  v{n} [label="{point_text(p.coordinates, precision)}"];')
    offset = len(result.graph.vertices)
    for n, p in enumerate(result.isolated):
        lines.append(
            f'  v{offset + n} [label="{point_text(p.coordinates, precision)}", shape=box];'
        )
    for a, b in result.graph.edges:
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines)


def intersection_table(result: IntersectionResult, precision: int = 15) -> Table:
    table = Table(title="Intersection of three quadrics")
    table.add_column("#", justify="right")
    table.add_column("kind")
    table.add_column("point")
    table.add_column("degree", justify="right")
    for n, p in enumerate(result.graph.vertices):
        table.add_row(str(n), p.kind, point_text(p.coordinates, precision),
                      str(result.graph.degree(n)))
    for p in result.isolated:
        table.add_row("-", p.kind, point_text(p.coordinates, precision), "0")
    return table


# Cylindrical decomposition

def cad_to_dict(
    cad: CadResult,
    precision: int = 15,
    truth: Optional[Dict[Label, bool]] = None,
    adjacency: Sequence[Tuple[Label, Label]] = (),
    found: Sequence[Component] = (),
) -> Dict[str, Any]:
    """Cells with samples in the decomposition frame, and the region data when given"""
    levels: Dict[str, List[Dict[str, Any]]] = {}
    for level, cells in sorted(cad.cells.items()):
        rows = []
        for cell in cells:
            row = {
                "label": list(cell.label),
                "dimension": cell.dimension,
                "sample": [to_decimal(v, precision) for v in cell.sample],
                "signs": list(cell.signs),
            }
            if truth is not None and cell.label in truth:
                row["truth"] = truth[cell.label]
            rows.append(row)
        levels[str(level)] = rows
    data: Dict[str, Any] = {
        "shear": cad.shear,
        "coordinateChange": [list(row) for row in cad.change.matrix],
        "counts": {str(k): v for k, v in sorted(cad.counts.items())},
        "factors": {
            str(level): [f.to_text() for f in factors]
            for level, factors in sorted(cad.factors.items())
        },
        "cells": levels,
    }
    if truth is not None:
        data["adjacency"] = [[list(a), list(b)] for a, b in adjacency]
        data["components"] = [[list(label) for label in c.cells] for c in found]
    return data


def cad_to_dot(
    cad: CadResult,
    adjacency: Sequence[Tuple[Label, Label]],
    found: Sequence[Component] = (),
) -> str:
    """Graph of the region's 0- and 1-cells, one cluster per component"""
    lines = ["graph cad {"]
    for component in found:
        lines.append(f"  subgraph cluster_{component.index} {{")
        for label in component.cells:
            shape = "point" if cad.cell(label).dimension == 0 else "ellipse"
            lines.append(f'    "{_label_text(label)}" [shape={shape}];')
        lines.append("  }")
    for a, b in adjacency:
        lines.append(f'  "{_label_text(a)}" -- "{_label_text(b)}";')
    lines.append("}")
    return "\n".join(lines)


def cad_tables(
    cad: CadResult, precision: int = 15, truth: Optional[Dict[Label, bool]] = None
) -> List[Table]:
    tables = []
    for level, cells in sorted(cad.cells.items()):
        table = Table(title=f"Level {level}: {len(cells)} cells")
        table.add_column("cell")
        table.add_column("dim", justify="right")
        table.add_column("sample")
        table.add_column("signs")
        if truth is not None and level == 3:
            table.add_column("region")
        for cell in cells:
            signs = "".join("0+-"[s] for s in cell.signs)
            row = [
                _label_text(cell.label),
                str(cell.dimension),
                point_text(cell.sample, precision),
                signs,
            ]
            if truth is not None and level == 3:
                row.append("T" if truth.get(cell.label) else "F")
            table.add_row(*row)
        tables.append(table)
    return tables


# Betti numbers

def betti_table(result: BettiResult) -> Table:
    table = Table(title="Betti numbers")
    table.add_column("quantity")
    table.add_column("value", justify="right")
    for name, value in (
        ("b0", result.b0),
        ("b1", result.b1),
        ("d0", result.d0),
        ("d1", result.d1),
        ("rank A", result.rank_a),
        ("rank B", result.rank_b),
    ):
        table.add_row(name, str(value))
    return table


def betti_to_dot(result: BettiResult) -> str:
    """Incidence of triple components in pair components"""
    lines = ["graph betti {"]
    for (i, j), count in sorted(result.pair_components.items()):
        for p in range(count):
            lines.append(f'  "{i + 1},{j + 1}#{p + 1}";')
    for (i, j, l), rows in sorted(result.triple_components.items()):
        parents = ((i, j), (i, l), (j, l))
        for n, row in enumerate(rows):
            node = f"{i + 1},{j + 1},{l + 1}#{n + 1}"
            for (a, b), p in zip(parents, row):
                lines.append(f'  "{node}" -- "{a + 1},{b + 1}#{p + 1}";')
    lines.append("}")
    return "\n".join(lines)
