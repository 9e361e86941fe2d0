"""Ring corpora, corpus-wide check runs and the Z_n backend cross-check."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from annideal.checks import FAIL, NA, PASS, RingContext, resolve_checks, run_check_ctx
from annideal.graphs import build_ag_graph, graph_invariants
from annideal.ideals import DEFAULT_IDEAL_CAP, enumerate_ideals
from annideal.ring import DEFAULT_ORDER_CAP, ZnRing

EXTRA_TABLE_RINGS = ("Z2[x]/(x^2)", "Z2[x]/(x^2+x+1)", "Z4[x]/(x^2, 2x)")


@dataclass(frozen=True)
class ZnRange:
    min: int
    max: int
    backend: str = "divisor"

    def __post_init__(self):
        if self.min < 2 or self.max < self.min:
            raise ValueError(f"empty or invalid Z_n range {self.min}..{self.max}")
        if self.backend not in ("divisor", "table"):
            raise ValueError(f"unknown backend {self.backend!r}")

    def entries(self):
        ring_backend = "auto" if self.backend == "divisor" else "table"
        return [(f"Z{n}", ring_backend) for n in range(self.min, self.max + 1)]


@dataclass(frozen=True)
class ProductFamily:
    """Products of at least two prime-power rings Z_{p^k}, factors nondecreasing."""

    order_cap: int
    factors: tuple = ()

    def __post_init__(self):
        if self.order_cap < 4:
            raise ValueError("product family order cap must be at least 4")

    def prime_powers(self):
        if self.factors:
            return sorted(set(self.factors))
        half = self.order_cap // 2
        return [q for q in range(2, half + 1) if _is_prime_power(q)]

    def entries(self):
        qs = self.prime_powers()
        out = []

        def extend(prefix, start, order):
            if len(prefix) >= 2:
                out.append(tuple(prefix))
            for i in range(start, len(qs)):
                if order * qs[i] > self.order_cap:
                    break
                extend(prefix + [qs[i]], i, order * qs[i])

        extend([], 0, 1)
        out.sort(key=lambda t: (math.prod(t), t))
        return [(" x ".join(f"Z{q}" for q in t), "auto") for t in out]


@dataclass(frozen=True)
class ExplicitList:
    specs: tuple
    backend: str = "auto"

    def entries(self):
        return [(s, self.backend) for s in self.specs]


@dataclass(frozen=True)
class CorpusSpec:
    families: tuple
    order_cap: int = DEFAULT_ORDER_CAP
    ideal_cap: int = DEFAULT_IDEAL_CAP

    def __post_init__(self):
        if not self.families:
            raise ValueError("corpus has no families")
        if self.order_cap <= 0 or self.ideal_cap <= 0:
            raise ValueError("caps must be positive")

    def entries(self):
        seen = set()
        out = []
        for fam in self.families:
            for e in fam.entries():
                if e not in seen:
                    seen.add(e)
                    out.append(e)
        return out


def _is_prime_power(q):
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def table_corpus(max_order=64):
    """Z_n (n <= max_order, table backend), prime-power products, and small polynomial quotients."""
    return CorpusSpec((
        ZnRange(2, max_order, backend="table"),
        ProductFamily(max_order),
        ExplicitList(EXTRA_TABLE_RINGS),
    ))


@dataclass
class RingSummary:
    ring: str
    order: int
    vertex_count: int
    edge_count: int
    diameter: object
    girth: object
    is_complete: bool
    is_star: bool


@dataclass
class CorpusReport:
    rings: list = field(default_factory=list)
    results: list = field(default_factory=list)

    @property
    def counts(self):
        c = {PASS: 0, FAIL: 0, NA: 0}
        for r in self.results:
            c[r.verdict] += 1
        return c

    @property
    def failures(self):
        return [r for r in self.results if r.verdict == FAIL]

    @property
    def success(self):
        return not self.failures


def _run_entry(entry, check_ids, order_cap, ideal_cap):
    spec, backend = entry
    ctx = RingContext.from_spec(spec, backend=backend, order_cap=order_cap, ideal_cap=ideal_cap)
    inv = ctx.invariants
    summary = RingSummary(ctx.spec, ctx.ring.order, inv.vertex_count, inv.edge_count,
                          inv.diameter, inv.girth, inv.is_complete, inv.is_star)
    return summary, [run_check_ctx(ctx, c) for c in check_ids]


def run_corpus(corpus, checks="all", workers=1):
    """Run ``checks`` on every ring of ``corpus``; output order is corpus order then catalog order."""
    check_ids = resolve_checks(checks)
    entries = corpus.entries()
    args = (check_ids, corpus.order_cap, corpus.ideal_cap)
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outs = list(pool.map(_run_entry, entries, *[[a] * len(entries) for a in args],
                                 chunksize=max(1, len(entries) // (4 * workers))))
    else:
        outs = [_run_entry(e, *args) for e in entries]
    report = CorpusReport()
    for summary, results in outs:
        report.rings.append(summary)
        report.results.extend(results)
    return report


@dataclass
class CrosscheckReport:
    max_n: int
    total: int = 0
    agreed: int = 0
    discrepancy: str | None = None

    @property
    def success(self):
        return self.discrepancy is None and self.agreed == self.total


def _lattice_signature(lat):
    ids = list(lat.ids())
    sets = [tuple(lat.ideals[i].elements) for i in ids]
    sig = {
        "ideals": sets,
        "prime": list(lat.is_prime),
        "maximal": list(lat.is_maximal),
        "minimal": list(lat.is_minimal),
        "principal": [g is not None for g in lat.generator],
        "annihilator": [sets[lat.annihilator(i)] for i in ids],
    }
    for op in ("product", "sum", "intersect"):
        f = getattr(lat, op)
        sig[op] = [sets[f(i, j)] for i in ids for j in ids]
    return sig


def _graph_signature(lat, graph):
    verts = [tuple(lat.ideals[k].elements) for k in graph.keys]
    edges = sorted((verts[a], verts[b]) for a, b in graph.edges())
    return verts, edges, graph.labels, graph_invariants(graph).to_json()


def compare_zn_backends(n):
    """First difference between divisor and table backends for Z_n, or None."""
    ring = ZnRing(n)
    dlat = enumerate_ideals(ring, backend="divisor")
    elat = enumerate_ideals(ring.to_table(), backend="explicit")
    ds, es = _lattice_signature(dlat), _lattice_signature(elat)
    for key in ds:
        if ds[key] != es[key]:
            return f"Z{n}: lattices differ in {key}"
    dg, eg = _graph_signature(dlat, build_ag_graph(dlat)), _graph_signature(elat, build_ag_graph(elat))
    for name, a, b in zip(("vertex sets", "edge sets", "labels", "invariants"), dg, eg):
        if a != b:
            return f"Z{n}: AG {name} differ: divisor={a} table={b}"
    return None


def crosscheck_zn(max_n):
    """Compare divisor and table backends on Z_n for 2 <= n <= max_n."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    rep = CrosscheckReport(max_n)
    for n in range(2, max_n + 1):
        rep.total += 1
        diff = compare_zn_backends(n)
        if diff is None:
            rep.agreed += 1
        elif rep.discrepancy is None:
            rep.discrepancy = diff
    return rep
