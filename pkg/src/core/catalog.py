"""
Example Catalog
Built-in inputs for every subcommand: the 27 ellipsoids of the Betti experiments and their
arrangements, the quadric triples quad1 to quad7, and a few curves and surfaces
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

ELLIPSOIDS: Tuple[str, ...] = (
    "8/9*x1^2 + 1/64*x2^2 + 1/6*x3^2 - 1",
    "1/64*x1^2 + 8/9*x2^2 + 8/9*x3^2 - 1",
    "8/9*x1^2 + 8/9*x2^2 + 1/64*x3^2 - 1",
    "8/9*(x1-4)^2 + 1/64*(x2-4)^2 + 1/6*x3^2 - 1",
    "1/64*(x1-4)^2 + 8/9*(x2-4)^2 + 8/9*x3^2 - 1",
    "8/9*(x1-4)^2 + 8/9*(x2-4)^2 + 1/64*x3^2 - 1",
    "(x1-1)^2 + (x2-2)^2 + x3^2 - 3",
    "5*x1^2 + 1/9*x2^2 + 2*x3^2 - 1",
    "1/9*x1^2 + 5*x2^2 + 5*x3^2 - 1",
    "5*x1^2 + 5*x2^2 + 1/9*x3^2 - 1",
    "5*(x1-1)^2 + 1/9*(x2-1)^2 + 2*x3^2 - 1",
    "1/9*(x1-1)^2 + 5*(x2-1)^2 + 5*x3^2 - 1",
    "5*(x1-1)^2 + 5*(x2-1)^2 + 1/9*x3^2 - 1",
    "5*(x1+1)^2 + 1/9*(x2-1)^2 + 2*x3^2 - 1",
    "1/9*(x1+1)^2 + 5*(x2-1)^2 + 5*x3^2 - 1",
    "5*(x1+1)^2 + 5*(x2-1)^2 + 1/9*x3^2 - 1",
    "5*(x1-1)^2 + 1/9*(x2+1)^2 + 2*x3^2 - 1",
    "1/9*(x1-1)^2 + 5*(x2+1)^2 + 5*x3^2 - 1",
    "5*(x1-1)^2 + 5*(x2+1)^2 + 1/9*x3^2 - 1",
    "5*(x1+1)^2 + 1/9*(x2+1)^2 + 2*x3^2 - 1",
    "1/9*(x1+1)^2 + 5*(x2+1)^2 + 5*x3^2 - 1",
    "5*(x1+1)^2 + 5*(x2+1)^2 + 1/9*x3^2 - 1",
    "6*(x1-1/2)^2 + 6*x2^2 + 1/6*x3^2 - 1",
    "4*x1^2 + 4*(x2-1/2)^2 + 1/6*x3^2 - 1",
    "5*(x1+2)^2 + 5*x2^2 + 1/6*x3^2 - 1",
    "1/6*(x1+2)^2 + 5*(x2-2)^2 + 5*x3^2 - 1",
    "5*(x1+2)^2 + 1/6*(x2-2)^2 + 5*x3^2 - 1",
)

_P1_QUAD5 = "x2 + x1^2 + 2*x1*x2 + 2*x1*x3 + x2^2 + 2*x2*x3 + x3^2"

QUADRIC_TRIPLES: Dict[str, Tuple[str, str, str]] = {
    "quad1": (
        "7216*x1^2 - 11022*x1*x2 - 12220*x1*x3 + 15624*x2^2 + 15168*x2*x3 + 11186*x3^2 - 1000",
        "4854*x1^2 - 3560*x1*x2 + 4468*x1*x3 + 658*x1 + 5040*x2^2 + 32*x2*x3 + 1914*x2"
        " + 10244*x3^2 + 3242*x3 - 536",
        "8877*x1^2 - 10488*x1*x2 + 9754*x1*x3 + 1280*x1 + 16219*x2^2 - 16282*x2*x3 - 808*x2"
        " + 10152*x3^2 - 1118*x3 - 796",
    ),
    "quad2": (
        "(x1-x2)^2 + x2^2 + x3^2 - 1",
        "(x1-x2-1)^2 + x2^2 + x3^2 - 1",
        "4*x2^2 + 4*x3^2 - 3",
    ),
    "quad3": (
        "27*x1^2 + 62*x2^2 + 249*x3^2 - 10",
        "88*x1^2 + 45*x2^2 + 67*x3^2 - 66*x1*x2 - 25*x1*x3 + 12*x2*x3 - 24*x1 + 2*x2 + 29*x3 - 5",
        "88*x1^2 + 45*x2^2 + 67*x3^2 - 66*x1*x2 + 25*x1*x3 - 12*x2*x3 - 24*x1 + 2*x2 - 29*x3 - 5",
    ),
    "quad4": (
        _P1_QUAD5,
        "x3^2 + 1 - x2",
        "2*x3^2 + 2 - 2*x2",
    ),
    "quad5": (
        _P1_QUAD5,
        "x3^2 - x2 + x1*x2 + x2^2 + x2*x3",
        "2*x3^2 - 2*x2 + 2*x1*x2 + 2*x2^2 + 2*x2*x3",
    ),
    "quad6": (
        "x3^2 + x1^2 - x2^2",
        "x3^2 + x1*x3 + x2*x3 - x3 + x1^2 - x2^2",
        "x3^2 + x1*x3 + x2*x3 + x3 + x1^2 - x2^2",
    ),
    "quad7": (
        "x2 - x3 + x1*x3 + 5*x2*x3 + 2*x3^2",
        "6*x2^2 - 5*x2*x3 - x3^2 + x1*x2 - x1*x3 + x3",
        "6*x2^2 - 5*x2*x3 - x3^2 + x1*x2 - x1*x3 + x3",
    ),
}

ARRANGEMENTS: Dict[str, Tuple[int, ...]] = {
    "ellipsoids3": tuple(range(1, 4)),
    "ellipsoids6": tuple(range(1, 7)),
    "ellipsoids7": tuple(range(1, 8)),
    "ellipsoids20": tuple(range(8, 28)),
}

CURVES: Dict[str, str] = {
    "circle": "x1^2 + x2^2 - 1",
    "cubic": "x2^2 - x1^3 + x1",
    "lemniscate": "(x1^2 + x2^2)^2 - 2*(x1^2 - x2^2)",
}

SURFACES: Dict[str, Tuple[str, ...]] = {
    "sphere": ("x1^2 + x2^2 + x3^2 - 1",),
    "two-spheres": ("x1^2 + x2^2 + x3^2 - 1", "(x1-3)^2 + x2^2 + x3^2 - 1"),
    "tangent-spheres": ("x1^2 + x2^2 + x3^2 - 1", "(x1-2)^2 + x2^2 + x3^2 - 1"),
}


@dataclass(frozen=True)
class CatalogEntry:
    """
    A named input

    ``command`` is the subcommand that reads it: "topology" (one curve), "intersect" (three
    quadrics), "cad" (one to three quadrics) or "betti" (objects with their relation).
    """
    name: str
    command: str
    description: str
    lines: Tuple[str, ...]

    @property
    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _build() -> Dict[str, CatalogEntry]:
    entries: Dict[str, CatalogEntry] = {}
    for name, curve in CURVES.items():
        entries[name] = CatalogEntry(name, "topology", f"plane curve {name}", (curve,))
    for name, polys in QUADRIC_TRIPLES.items():
        entries[name] = CatalogEntry(name, "intersect", f"three quadrics {name}", polys)
    for name, polys in SURFACES.items():
        entries[name] = CatalogEntry(name, "cad", f"{len(polys)} quadric(s)", polys)
    for index, poly in enumerate(ELLIPSOIDS, start=1):
        name = f"P{index}"
        entries[name] = CatalogEntry(name, "cad", f"ellipsoid P{index}", (poly,))
    for name, indices in ARRANGEMENTS.items():
        lines = tuple(f"{ELLIPSOIDS[i - 1]} =0" for i in indices)
        entries[name] = CatalogEntry(
            name, "betti", f"ellipsoids P{indices[0]}..P{indices[-1]}", lines
        )
    return entries


CATALOG: Dict[str, CatalogEntry] = _build()


def catalog_entry(name: str) -> CatalogEntry:
    """
    Raises:
        KeyError: unknown example name
    """
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown example '{name}'; known: {', '.join(CATALOG)}") from None


def catalog_names(command: Optional[str] = None) -> List[str]:
    return [name for name, entry in CATALOG.items() if command is None or entry.command == command]
