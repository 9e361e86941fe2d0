import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annideal import kernels
from annideal.ring import build_ring
from conftest import KERNELS


def _adj(n, edges):
    nb = [set() for _ in range(n)]
    for a, b in edges:
        if a != b:
            nb[a].add(b)
            nb[b].add(a)
    return [sorted(s) for s in nb]


def _nx(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((a, b) for a, b in edges if a != b)
    return g


graphs = st.integers(min_value=1, max_value=14).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                                              max_size=3 * n)))


def test_backend_selection():
    assert "python" in kernels.available()
    assert kernels.get("python").NAME == "python"
    assert kernels.BACKEND == kernels.active.NAME
    with pytest.raises(ValueError):
        kernels.get("fortran")


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_graph_kernels_match_networkx(g):
    n, edges = g
    ref = _nx(n, edges)
    connected = nx.is_connected(ref)
    want_diam = nx.diameter(ref) if connected else -1
    want_girth = nx.girth(ref)
    want_girth = 0 if want_girth == float("inf") else want_girth
    ncomp = nx.number_connected_components(ref)
    for k in KERNELS:
        adj = k.prepare_adjacency(_adj(n, edges))
        assert k.diameter(adj) == (want_diam, connected)
        assert k.girth(adj) == want_girth
        labels = list(k.components(adj))
        assert len(set(labels)) == ncomp
        for a, b in ref.edges():
            assert labels[a] == labels[b]


@pytest.mark.parametrize("n, edges, d, g", [
    (3, [(0, 1), (1, 2), (2, 0)], 1, 3),
    (4, [(0, 1), (1, 2), (2, 3), (3, 0)], 2, 4),
    (4, [(0, 1), (0, 2), (0, 3)], 2, 0),
    (2, [], -1, 0),
    (1, [], 0, 0),
])
def test_small_graphs(kernel, n, edges, d, g):
    adj = kernel.prepare_adjacency(_adj(n, edges))
    assert kernel.diameter(adj)[0] == d
    assert kernel.girth(adj) == g


def test_petersen_girth(kernel):
    p = nx.petersen_graph()
    adj = kernel.prepare_adjacency(_adj(10, p.edges()))
    assert kernel.girth(adj) == 5
    assert kernel.diameter(adj) == (2, True)


def _subgroup_oracle(add, gens):
    s = {0} | set(gens)
    while True:
        new = {int(add[a][b]) for a in s for b in s} | s
        if new == s:
            return sorted(s)
        s = new


@pytest.mark.parametrize("spec", ["Z12", "Z2 x Z4", "Z3 x Z3", "Z4[x]/(x^2, 2x)"])
def test_span_kernels_agree(spec):
    r = build_ring(spec, backend="table")
    add, mul = r.add_table, r.mul_table
    m = r.order
    for k in KERNELS:
        kadd, kmul = k.prepare_table(add), k.prepare_table(mul)
        for a in range(m):
            for b in range(m):
                gens = [a, b]
                assert list(k.additive_span(kadd, (0,), gens)) == _subgroup_oracle(add, gens)
                left = _subgroup_oracle(add, [a])
                right = _subgroup_oracle(add, [b])
                prods = {int(mul[x][y]) for x in left for y in right}
                assert list(k.product_span(kadd, kmul, left, right)) == _subgroup_oracle(add, prods)
                assert bool(k.products_zero(kmul, left, right)) == (prods == {0})
            ann = [x for x in range(m) if mul[x][a] == 0]
            assert list(k.annihilator(kmul, [a])) == ann


@pytest.mark.parametrize("spec", ["Z12", "Z2 x Z4", "Z2 x Z2 x Z2", "Z9"])
def test_is_prime_kernel(spec):
    r = build_ring(spec, backend="table")
    mul = r.mul_table
    m = r.order
    # test every additive subgroup generated by one element
    for a in range(m):
        elems = _subgroup_oracle(r.add_table, [a])
        inside = set(elems)
        want = all(mul[x][y] not in inside for x in range(m) for y in range(m)
                   if x not in inside and y not in inside)
        for k in KERNELS:
            assert bool(k.is_prime(k.prepare_table(mul), elems)) == want


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=40), st.lists(st.integers(0, 39), max_size=4))
def test_span_backends_agree_random(n, gens):
    r = build_ring(f"Z{n}", backend="table")
    gens = [g % n for g in gens]
    outs = []
    for k in KERNELS:
        outs.append(list(k.additive_span(k.prepare_table(r.add_table), (0,), gens)))
    g = np.gcd.reduce([n] + gens)
    assert outs[0] == list(range(0, n, int(g)))
    assert all(o == outs[0] for o in outs)
