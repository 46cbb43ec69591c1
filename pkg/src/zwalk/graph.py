"""Minimum path graph construction and serialization.

The edge labels of the minimum path graph admitting a given end-to-end walk
are exactly the walk's Z-normal form, so building the graph from a normal
form is just laying the labels along a path.  Serializers emit byte-stable
DOT and JSON.
"""

import json
from dataclasses import dataclass
from typing import Mapping

from .core import LabeledString
from .detector import is_irreducible


@dataclass(frozen=True)
class PathGraph:
    """A simple undirected path: ``vertex_count`` vertices 0..n, edge ``i``
    connects ``i`` and ``i+1``."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]  # (from, to, label id)


def build_path_graph(normal_form: LabeledString, debug_validate: bool = False) -> PathGraph:
    """Lay the normal form's labels along a path of ``len+1`` vertices.

    The caller is expected to pass an irreducible string (the output of the
    reducer); ``debug_validate`` re-checks that."""
    if debug_validate and not is_irreducible(normal_form):
        raise ValueError("input is reducible; pass a Z-normal form")
    edges = tuple((i, i + 1, sym) for i, sym in enumerate(normal_form))
    return PathGraph(vertex_count=len(normal_form) + 1, edges=edges)


def _escape(name: str) -> str:
    return name.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: PathGraph, symbol_names: Mapping[int, str]) -> str:
    """Deterministic DOT text: node statements v0..vN, then one labelled
    edge line per edge in path order."""
    lines = ["graph {"]
    for v in range(g.vertex_count):
        lines.append(f"  v{v};")
    for u, v, sym in g.edges:
        if sym not in symbol_names:
            raise ValueError(f"no name for symbol id {sym}")
        lines.append(f'  v{u} -- v{v} [label="{_escape(symbol_names[sym])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: PathGraph, symbol_names: Mapping[int, str]) -> str:
    """Compact JSON with fixed key order:
    ``{"vertices":N,"edges":[{"from":..,"to":..,"label":..},...]}``"""
    edges = []
    for u, v, sym in g.edges:
        if sym not in symbol_names:
            raise ValueError(f"no name for symbol id {sym}")
        edges.append({"from": u, "to": v, "label": symbol_names[sym]})
    return json.dumps({"vertices": g.vertex_count, "edges": edges}, separators=(",", ":"))
