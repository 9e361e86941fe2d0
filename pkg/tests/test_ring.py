import itertools

import numpy as np
import pytest

from annideal.ring import (
    AxiomError, CapExceeded, TableRing, ZnRing, axiom_violations, build_ring, element_arith,
    idempotents, is_domain, is_field, is_reduced, nilpotents, quotient_ring, units, zero_divisors,
)
from conftest import corpus_entries, ring_of
from oracles import TupleRing, zn_units, zn_zero_divisors


def test_zn_arith():
    r = build_ring("Z6")
    assert element_arith(r, "add", 4, 5) == 3
    assert element_arith(r, "mul", 4, 5) == 2
    assert element_arith(r, "neg", 4) == 2


def test_arith_errors():
    r = build_ring("Z6")
    with pytest.raises(IndexError):
        element_arith(r, "add", 6, 1)
    with pytest.raises(ValueError):
        element_arith(r, "mul", 1)
    with pytest.raises(ValueError):
        element_arith(r, "div", 1, 2)


def test_product_encoding():
    r = build_ring("Z2 x Z4")
    assert r.order == 8
    # (1,3) -> 1*4 + 3 = 7, (1,2) -> 6
    assert r.label(7) == "(1,3)"
    assert r.mul(7, 6) == 6
    assert r.add(7, 7) == 2


def test_identity_and_zero():
    for spec in ["Z2 x Z3", "Z4[x]/(x^2, 2x)", "Z2[x]/(x^2+x+1)"]:
        r = ring_of(spec)
        assert all(r.add(0, a) == a for a in range(r.order))
        assert all(r.mul(r.identity, a) == a for a in range(r.order))


def test_order_cap():
    with pytest.raises(CapExceeded):
        build_ring("Z64 x Z128", order_cap=4096)
    r = build_ring("Z5000")
    assert r.mul(4999, 4999) == 1
    with pytest.raises(CapExceeded):
        r.mul_table


def test_bad_table_rejected():
    add = np.array([[0, 1], [1, 0]])
    mul = np.array([[0, 0], [0, 0]])
    with pytest.raises(AxiomError):
        TableRing(add, mul, ["0", "1"])
    mul = np.array([[0, 0], [0, 1]])
    bad_add = np.array([[0, 1], [1, 1]])
    assert axiom_violations(bad_add, mul)


def _loop_axioms(r):
    m = r.order
    for a, b, c in itertools.product(range(m), repeat=3):
        assert r.add(r.add(a, b), c) == r.add(a, r.add(b, c))
        assert r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))
        assert r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
    for a, b in itertools.product(range(m), repeat=2):
        assert r.add(a, b) == r.add(b, a)
        assert r.mul(a, b) == r.mul(b, a)
    assert all(r.add(a, r.neg(a)) == 0 for a in range(m))


@pytest.mark.parametrize("spec", ["Z12", "Z2 x Z2 x Z2", "Z2 x Z9", "Z4[x]/(x^2, 2x)",
                                  "Z2[x]/(x^2+x+1)", "Z3[x]/(x^2)", "Z2[x]/(x^3)"])
def test_axioms_by_loops(spec):
    _loop_axioms(build_ring(spec))


def test_axioms_on_corpus():
    for spec, backend in corpus_entries():
        r = ring_of(spec, backend)
        assert axiom_violations(r.add_table, r.mul_table) == [], spec


@pytest.mark.parametrize("n", range(2, 65))
def test_zn_matches_table(n):
    a, b = build_ring(f"Z{n}"), build_ring(f"Z{n}", backend="table")
    assert np.array_equal(a.add_table, b.add_table)
    assert np.array_equal(a.mul_table, b.mul_table)
    assert zero_divisors(a) == zero_divisors(b) == zn_zero_divisors(n)
    assert units(a) == units(b) == zn_units(n)
    assert idempotents(a) == idempotents(b)
    assert is_reduced(a) == is_reduced(b)


@pytest.mark.parametrize("moduli", [(2, 4), (3, 3), (2, 2, 2), (4, 6), (2, 3, 4), (8, 2)])
def test_product_against_tuples(moduli):
    r = build_ring(" x ".join(f"Z{n}" for n in moduli))
    t = TupleRing(moduli)
    idx = {e: i for i, e in enumerate(t.elements)}
    for a, b in itertools.product(t.elements, repeat=2):
        assert r.add(idx[a], idx[b]) == idx[t.add(a, b)]
        assert r.mul(idx[a], idx[b]) == idx[t.mul(a, b)]
    zd = {idx[a] for a in t.elements if any(t.mul(a, b) == t.zero for b in t.elements if b != t.zero)}
    assert zero_divisors(r) == zd | {0}
    ids = {idx[e] for e in t.elements if t.mul(e, e) == e}
    assert idempotents(r) == ids


def test_units_and_zero_divisors_partition():
    for spec, backend in corpus_entries():
        r = ring_of(spec, backend)
        z, u = zero_divisors(r), units(r)
        assert not z & u and len(z) + len(u) == r.order, spec


def test_poly_cosets():
    # Z4[x]/(x^2, 2x) has cosets a + b x with a in Z4, b in Z2
    r = build_ring("Z4[x]/(x^2, 2x)")
    assert r.order == 8
    assert nilpotents(r) == zero_divisors(r)
    assert len(zero_divisors(r)) == 4
    assert r.labels == ["0", "1", "2", "3", "x", "x+1", "x+2", "x+3"]
    # (a + b x)(c + d x) = ac + (ad + bc) x with b, d taken mod 2
    for i, j in itertools.product(range(8), repeat=2):
        a, b = i % 4, i // 4
        c, d = j % 4, j // 4
        want = (a * c) % 4 + 4 * ((a * d + b * c) % 2)
        assert r.mul(i, j) == want
        assert r.add(i, j) == (a + c) % 4 + 4 * ((b + d) % 2)


def test_f4():
    r = build_ring("Z2[x]/(x^2+x+1)")
    assert r.order == 4 and is_field(r) and is_domain(r)


def test_quotients():
    z8 = build_ring("Z8", backend="table")
    q = quotient_ring(z8, [0, 4])
    z4 = build_ring("Z4", backend="table")
    assert np.array_equal(q.add_table, z4.add_table)
    assert np.array_equal(q.mul_table, z4.mul_table)
    assert is_field(quotient_ring(build_ring("Z6", backend="table"), [0, 2, 4]))
    with pytest.raises(ValueError):
        quotient_ring(z8, [0, 3])
    with pytest.raises(ValueError):
        quotient_ring(z8, list(range(8)))


def test_classifiers():
    assert is_field(ZnRing(7)) and not is_field(ZnRing(8))
    assert is_reduced(ZnRing(30)) and not is_reduced(ZnRing(12))
    assert is_reduced(build_ring("Z2 x Z3")) and not is_reduced(build_ring("Z2[x]/(x^2)"))
