"""Knot Floer homology and tau invariants for knots in rational homology spheres."""

from __future__ import annotations

__version__ = "0.1.0"

from .chain import FilteredComplex, build_cfk, complex_from_diagram, dump, parse_dump
from .diagram import (
    HeegaardDiagram,
    from_json,
    load,
    save,
    simple_knot_diagram,
    to_json,
    trefoil_diagram,
    unknot_diagram,
    validate,
)
from .grading import compute_gradings
from .homology import class_tau, hfk_ranks, tau_report

__all__ = [
    "FilteredComplex",
    "HeegaardDiagram",
    "build_cfk",
    "class_tau",
    "complex_from_diagram",
    "compute_gradings",
    "dump",
    "from_json",
    "hfk_ranks",
    "load",
    "parse_dump",
    "save",
    "simple_knot_diagram",
    "tau_report",
    "to_json",
    "trefoil_diagram",
    "unknot_diagram",
    "validate",
]
