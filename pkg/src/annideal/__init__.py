"""Annihilating-ideal graphs and zero-divisor graphs of finite commutative rings."""

from annideal.checks import CATALOG, CheckResult, RingContext, run_check
from annideal.corpus import CorpusSpec, ExplicitList, ProductFamily, ZnRange, crosscheck_zn, run_corpus, table_corpus
from annideal.graphs import (
    build_ag_graph,
    build_zero_divisor_graph,
    connectivity,
    diameter,
    export_graph,
    girth,
    graph_invariants,
    shape_classify,
)
from annideal.ideals import (
    Ideal,
    annihilating_ideal_set,
    annihilator,
    classify_ideal,
    detect_field_product,
    enumerate_ideals,
    ideal_closure,
    ideal_product,
    ideal_sum_intersect,
    nilpotency_index,
    ring_classification,
    socle_and_radical,
)
from annideal.ring import (
    CapExceeded,
    FiniteRing,
    build_ring,
    element_arith,
    idempotents,
    is_reduced,
    quotient_ring,
    units,
    zero_divisors,
)
from annideal.ringspec import RingSpecError, parse_ring_spec

__version__ = "0.1.0"
