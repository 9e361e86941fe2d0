import json
import math

import networkx as nx
import numpy as np
import pytest

from annideal.graphs import (
    build_ag_graph, build_zero_divisor_graph, connectivity, diameter, export_graph, girth,
    graph_invariants, graph_to_json, shape_classify,
)
from annideal.ideals import enumerate_ideals
from conftest import KERNELS, corpus_entries, ring_of


def ag(spec, backend="auto"):
    return build_ag_graph(enumerate_ideals(ring_of(spec, backend)))


def gamma(spec):
    return build_zero_divisor_graph(ring_of(spec, "table"))


def _nx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(len(graph)))
    g.add_edges_from(graph.edges())
    return g


def test_z6():
    g = ag("Z6")
    assert g.labels == ["(3)", "(2)"]
    assert g.edges() == [(0, 1)]
    inv = graph_invariants(g)
    assert inv.is_complete and inv.is_star and inv.diameter == 1 and inv.girth == math.inf


def test_z2_x_z4_diameter():
    assert diameter(ag("Z2 x Z4")) == 3


def test_z2_cubed_girth():
    g = ag("Z2 x Z2 x Z2")
    assert len(g) == 6
    assert girth(g) == 3
    assert diameter(g) == 3


def test_field_is_empty():
    g = ag("Z7")
    inv = graph_invariants(g)
    assert inv.vertex_count == 0 and inv.is_connected and inv.diameter is None
    assert inv.to_json()["diameter"] is None
    assert inv.to_json()["girth"] == "inf"


def test_z4_single_vertex():
    inv = graph_invariants(ag("Z4"))
    assert inv.vertex_count == 1 and inv.diameter == 0 and inv.universal_vertices == [0]


def test_gamma_examples():
    g = gamma("Z8")
    assert g.keys == [2, 4, 6]
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    assert shape_classify(g).is_star and not shape_classify(g).is_complete
    g = gamma("Z2 x Z2")
    assert len(g) == 2 and shape_classify(g).is_complete
    g = gamma("Z2 x Z3")
    # (0,1),(0,2) adjacent to (1,0) only: K_{1,2}
    assert len(g) == 3 and g.edge_count == 2


def test_z8_and_z27_ag_are_k2():
    for spec in ("Z8", "Z27"):
        g = ag(spec)
        assert len(g) == 2 and g.edge_count == 1


def test_structure_on_corpus():
    for spec, backend in corpus_entries():
        for g in (ag(spec, backend), gamma(spec)):
            assert np.array_equal(g.adj, g.adj.T), spec
            assert not g.adj.diagonal().any(), spec
            ref = _nx(g)
            inv = graph_invariants(g)
            assert inv.edge_count == ref.number_of_edges()
            if len(g) == 0:
                continue
            assert inv.is_connected == nx.is_connected(ref)
            if inv.is_connected:
                assert inv.diameter == nx.diameter(ref), spec
            assert inv.girth == nx.girth(ref), spec
            for k in KERNELS:
                assert connectivity(g, k)[0] == inv.is_connected
                assert diameter(g, k) == inv.diameter
                assert girth(g, k) == inv.girth


def test_gamma_complete_implies_ag_complete():
    for spec, backend in corpus_entries():
        if graph_invariants(gamma(spec)).is_complete and len(gamma(spec)):
            assert graph_invariants(ag(spec, backend)).is_complete, spec


GOLDEN_DOT = '''graph ag {
  "(3)";
  "(2)";
  "(3)" -- "(2)";
}
'''


def test_dot_golden():
    assert export_graph(ag("Z6"), "dot") == GOLDEN_DOT.encode()
    assert export_graph(gamma("Z4"), "dot") == b'graph gamma {\n  "2";\n}\n'


def test_json_schema():
    doc = json.loads(export_graph(ag("Z6"), "json", spec="Z6"))
    assert doc["ring"] == "Z6" and doc["order"] == 6 and doc["graph"] == "AG"
    assert [v["elements"] for v in doc["vertices"]] == [[0, 3], [0, 2, 4]]
    assert [v["is_maximal"] for v in doc["vertices"]] == [True, True]
    assert doc["edges"] == [[0, 1]]
    assert doc["invariants"]["diameter"] == 1
    doc = graph_to_json(gamma("Z8"))
    assert doc["graph"] == "Gamma" and doc["vertices"][0]["is_prime"] is None


def test_export_is_stable():
    a = export_graph(ag("Z4[x]/(x^2, 2x)"), "json")
    b = export_graph(build_ag_graph(enumerate_ideals(ring_of("Z4[x]/(x^2, 2x)"))), "json")
    assert a == b
    with pytest.raises(ValueError):
        export_graph(ag("Z6"), "png")
