"""Annihilating-ideal graph AG(R), zero-divisor graph Gamma(R) and their invariants.

Conventions for degenerate graphs (reported in the ``conventions`` list of
every invariants block that relies on one):

* the empty graph is connected with zero components and its diameter is
  undefined (``None`` / JSON ``null``);
* a one-vertex graph has diameter 0 and its vertex is universal;
* ``K_2`` is both complete and a star.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from annideal import kernels
from annideal.ideals import annihilating_ideal_set
from annideal.ring import zero_divisors


class Graph:
    """Simple undirected graph over vertex positions ``0..v-1``.

    ``keys`` holds the ring object behind each vertex: lattice ideal ids for
    AG(R), ring elements for Gamma(R).
    """

    def __init__(self, kind, ring, keys, labels, adj, lattice=None):
        self.kind = kind
        self.ring = ring
        self.keys = list(keys)
        self.labels = list(labels)
        self.adj = adj
        self.adj.setflags(write=False)
        self.lattice = lattice
        self.neighbours = [np.flatnonzero(row).tolist() for row in adj]
        self._kadj = {}

    def __len__(self):
        return len(self.keys)

    def __repr__(self):
        return f"<{self.kind} graph of {self.ring.name}: {len(self)} vertices, {self.edge_count} edges>"

    @property
    def edge_count(self):
        return int(self.adj.sum()) // 2

    def edges(self):
        i, j = np.nonzero(np.triu(self.adj, 1))
        return list(zip(i.tolist(), j.tolist()))

    def kernel_adjacency(self, k):
        if k.NAME not in self._kadj:
            self._kadj[k.NAME] = k.prepare_adjacency(self.neighbours)
        return self._kadj[k.NAME]


def build_ag_graph(lattice):
    verts = annihilating_ideal_set(lattice)
    v = len(verts)
    adj = np.zeros((v, v), dtype=bool)
    for a in range(v):
        for b in range(a + 1, v):
            if lattice.product_is_zero(verts[a], verts[b]):
                adj[a, b] = adj[b, a] = True
    return Graph("AG", lattice.ring, verts, [lattice.label(i) for i in verts], adj, lattice=lattice)


def build_zero_divisor_graph(ring):
    verts = sorted(zero_divisors(ring) - {0})
    mul = np.asarray(ring.mul_table)
    adj = mul[np.ix_(verts, verts)] == 0
    np.fill_diagonal(adj, False)
    return Graph("Gamma", ring, verts, [ring.label(x) for x in verts], np.ascontiguousarray(adj))


def connectivity(graph, kernel=None):
    """``(is_connected, components)``; components are lists of vertex positions."""
    k = kernel or kernels.active
    labels = k.components(graph.kernel_adjacency(k))
    comps = {}
    for pos, c in enumerate(labels):
        comps.setdefault(c, []).append(pos)
    parts = [comps[c] for c in sorted(comps)]
    return len(parts) <= 1, parts


def diameter(graph, kernel=None):
    """Int, ``math.inf`` when disconnected, ``None`` for the empty graph."""
    if len(graph) == 0:
        return None
    k = kernel or kernels.active
    d, connected = k.diameter(graph.kernel_adjacency(k))
    return d if connected else math.inf


def girth(graph, kernel=None):
    k = kernel or kernels.active
    g = k.girth(graph.kernel_adjacency(k))
    return g if g else math.inf


@dataclass(frozen=True)
class Shape:
    is_complete: bool
    is_star: bool
    universal_vertices: tuple


def shape_classify(graph):
    v = len(graph)
    degrees = graph.adj.sum(axis=1)
    universal = tuple(int(i) for i in np.flatnonzero(degrees == v - 1)) if v else ()
    e = graph.edge_count
    is_complete = e == v * (v - 1) // 2
    is_star = v >= 1 and bool(universal) and e == v - 1
    return Shape(is_complete, is_star, universal)


@dataclass
class GraphInvariants:
    vertex_count: int
    edge_count: int
    is_connected: bool
    diameter: object
    girth: object
    is_complete: bool
    is_star: bool
    universal_vertices: list
    degree_sequence: list
    conventions: list = field(default_factory=list)

    def to_json(self):
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "is_connected": self.is_connected,
            "diameter": _num(self.diameter),
            "girth": _num(self.girth),
            "is_complete": self.is_complete,
            "is_star": self.is_star,
            "universal_vertices": list(self.universal_vertices),
            "degree_sequence": list(self.degree_sequence),
            "conventions": list(self.conventions),
        }


def _num(x):
    if x is None:
        return None
    if x == math.inf:
        return "inf"
    return int(x)


def graph_invariants(graph, kernel=None):
    v = len(graph)
    connected, _ = connectivity(graph, kernel)
    shape = shape_classify(graph)
    conventions = []
    if v == 0:
        conventions += ["empty graph counts as connected", "diameter of the empty graph is undefined"]
    elif v == 1:
        conventions += ["diameter of a one-vertex graph is 0", "the vertex of a one-vertex graph is universal"]
    elif v == 2 and shape.is_complete:
        conventions.append("K2 is reported as both complete and star")
    return GraphInvariants(
        vertex_count=v,
        edge_count=graph.edge_count,
        is_connected=connected,
        diameter=diameter(graph, kernel),
        girth=girth(graph, kernel),
        is_complete=shape.is_complete,
        is_star=shape.is_star,
        universal_vertices=list(shape.universal_vertices),
        degree_sequence=sorted(graph.adj.sum(axis=1).tolist(), reverse=True),
        conventions=conventions,
    )


def graph_to_json(graph, spec=None, invariants=None):
    lattice = graph.lattice
    vertices = []
    for pos, (key, label) in enumerate(zip(graph.keys, graph.labels)):
        if graph.kind == "AG":
            vertices.append({
                "id": pos,
                "label": label,
                "elements": list(lattice.ideals[key].elements),
                "is_prime": lattice.is_prime[key],
                "is_maximal": lattice.is_maximal[key],
                "is_minimal": lattice.is_minimal[key],
            })
        else:
            vertices.append({
                "id": pos, "label": label, "elements": [key],
                "is_prime": None, "is_maximal": None, "is_minimal": None,
            })
    inv = invariants or graph_invariants(graph)
    return {
        "ring": spec if spec is not None else graph.ring.name,
        "order": graph.ring.order,
        "graph": graph.kind,
        "vertices": vertices,
        "edges": [list(e) for e in graph.edges()],
        "invariants": inv.to_json(),
    }


def _dot_id(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(graph):
    name = "ag" if graph.kind == "AG" else "gamma"
    lines = [f"graph {name} {{"]
    for label in graph.labels:
        lines.append(f"  {_dot_id(label)};")
    for a, b in graph.edges():
        lines.append(f"  {_dot_id(graph.labels[a])} -- {_dot_id(graph.labels[b])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_json(obj):
    return json.dumps(obj, indent=2) + "\n"


def export_graph(graph, format="json", spec=None):
    """Serialise ``graph`` to bytes; output is stable for fixed input."""
    if format == "dot":
        return graph_to_dot(graph).encode()
    if format == "json":
        return dumps_json(graph_to_json(graph, spec=spec)).encode()
    raise ValueError(f"unknown graph format {format!r}")
