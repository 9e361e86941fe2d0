"""Decidable checks of the structure theorems for AG(R) on one finite ring.

Each check returns a :class:`CheckResult`. ``not-applicable`` means the
statement's hypothesis excludes the ring; ``pass`` always names the side
of the statement that was triggered, so a pass is never silent about why.

All AG-shape checks are not applicable to domains: a finite domain is a
field, AG(R) is empty, and no statement about an empty graph is decided
by a convention.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from functools import cached_property

from annideal.graphs import build_ag_graph, build_zero_divisor_graph, graph_invariants, shape_classify
from annideal.ideals import (
    DEFAULT_IDEAL_CAP,
    detect_field_product,
    enumerate_ideals,
    ring_classification,
    socle_and_radical,
)
from annideal.ring import DEFAULT_ORDER_CAP, build_ring, idempotents, is_reduced, units, zero_divisors

PASS = "pass"
FAIL = "fail"
NA = "not-applicable"


@dataclass(frozen=True)
class CheckResult:
    check: str
    ring: str
    verdict: str
    witness: str

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL, NA):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == FAIL and not self.witness:
            raise ValueError("a failing check needs a witness")

    def to_json(self):
        return asdict(self)


class RingContext:
    """A ring together with its lattice, AG(R) and cached derived data."""

    def __init__(self, ring, spec=None, lattice_backend="auto", ideal_cap=DEFAULT_IDEAL_CAP):
        self.ring = ring
        self.spec = spec if spec is not None else ring.name
        self.lattice = enumerate_ideals(ring, backend=lattice_backend, ideal_cap=ideal_cap)
        self.ag = build_ag_graph(self.lattice)

    @classmethod
    def from_spec(cls, text, backend="auto", order_cap=DEFAULT_ORDER_CAP, ideal_cap=DEFAULT_IDEAL_CAP):
        ring = build_ring(text, order_cap=order_cap, backend=backend)
        return cls(ring, spec=str(ring.spec), ideal_cap=ideal_cap)

    @cached_property
    def invariants(self):
        return graph_invariants(self.ag)

    @cached_property
    def shape(self):
        return shape_classify(self.ag)

    @cached_property
    def vertices(self):
        return list(self.ag.keys)

    @cached_property
    def nonzero_proper(self):
        return self.lattice.nonzero_proper()

    @cached_property
    def flags(self):
        return ring_classification(self.lattice)

    @cached_property
    def split(self):
        return detect_field_product(self.lattice)

    @cached_property
    def zero_divisors(self):
        return zero_divisors(self.ring)

    @cached_property
    def z_ideal(self):
        """Lattice id of Z(R) when Z(R) is an ideal, else None."""
        return self.lattice.find(sorted(self.zero_divisors))

    @cached_property
    def z_annihilator_witness(self):
        """Some x != 0 with Z(R) = Ann(x) as sets, or None."""
        z = self.z_ideal
        if z is None:
            return None
        for x in range(1, self.ring.order):
            if self.lattice.element_annihilator(x) == z:
                return x
        return None

    @cached_property
    def local_max(self):
        """The maximal ideal when R is local with nonzero maximal ideal, else None."""
        f = self.flags
        if f.is_local and f.local_maximal_ideal != self.lattice.zero:
            return f.local_maximal_ideal
        return None

    @cached_property
    def gamma(self):
        return build_zero_divisor_graph(self.ring)

    def is_domain(self):
        return self.flags.is_domain

    def fmt(self, i):
        """Ideal as ``label=[elements]`` so a witness can be replayed."""
        lat = self.lattice
        ideal = lat.ideals[i]
        if ideal.divisor is not None:
            n = lat.ring.n
            return f"{lat.label(i)}={ideal.divisor}Z_{n}"
        return f"{lat.label(i)}={list(ideal.elements)}"

    def fmt_set(self, ids):
        return "{" + ", ".join(self.fmt(i) for i in sorted(ids)) + "}"


@dataclass(frozen=True)
class Check:
    id: str
    statement: str
    func: object


CATALOG = {}


def _check(cid, statement):
    def deco(func):
        CATALOG[cid] = Check(cid, statement, func)
        return func
    return deco


def _iff(lhs, rhs, what_l, what_r):
    if lhs == rhs:
        side = "both hold" if lhs else "neither holds"
        return PASS, f"{what_l} <=> {what_r}: {side}"
    return FAIL, f"{what_l} is {lhs} but {what_r} is {rhs}"


@_check("conn_diam", "AG(R) is connected with diameter at most 3")
def _conn_diam(ctx):
    v = len(ctx.ag)
    if v == 0:
        return NA, "AG(R) has no vertices"
    inv = ctx.invariants
    if v == 1:
        return PASS, "single vertex: no pair of distinct vertices"
    if inv.is_connected and inv.diameter <= 3:
        return PASS, f"connected, diameter {inv.diameter}"
    return FAIL, f"connected={inv.is_connected}, diameter={inv.diameter}, vertices={ctx.fmt_set(ctx.vertices)}"


@_check("girth_bound", "if AG(R) contains a cycle its girth is at most 4")
def _girth_bound(ctx):
    g = ctx.invariants.girth
    if g == math.inf:
        return NA, "AG(R) is acyclic"
    if g <= 4:
        return PASS, f"girth {g}"
    return FAIL, f"girth {g} > 4, vertices={ctx.fmt_set(ctx.vertices)}"


@_check("vertex_all", "every nonzero proper ideal is a vertex of AG(R)")
def _vertex_all(ctx):
    verts = set(ctx.vertices)
    missing = [i for i in ctx.nonzero_proper if i not in verts]
    if missing:
        return FAIL, f"not vertices (zero annihilator): {ctx.fmt_set(missing)}"
    return PASS, f"all {len(ctx.nonzero_proper)} nonzero proper ideals are vertices"


@_check("vertex_count", "AG(R) has n >= 1 vertices iff R has exactly n nonzero proper ideals")
def _vertex_count(ctx):
    v, k = len(ctx.vertices), len(ctx.nonzero_proper)
    if v == 0 and k == 0:
        return NA, "no vertices and no nonzero proper ideals"
    if v == k:
        return PASS, f"{v} vertices, {k} nonzero proper ideals"
    return FAIL, f"{v} vertices but {k} nonzero proper ideals"


@_check("conj_card", "for a non-domain, |A(R)*| equals the number of nonzero proper ideals")
def _conj_card(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    v, k = len(ctx.vertices), len(ctx.nonzero_proper)
    if v == k:
        return PASS, f"|A(R)*| = {v} = |I(R)*|"
    return FAIL, f"|A(R)*| = {v}, |I(R)*| = {k}"


@_check("prime_exists", "for a non-domain, some vertex of AG(R) is a prime ideal")
def _prime_exists(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    primes = [i for i in ctx.vertices if ctx.lattice.is_prime[i]]
    if primes:
        return PASS, f"prime vertex {ctx.fmt(primes[0])}"
    return FAIL, f"no prime among vertices {ctx.fmt_set(ctx.vertices)}"


@_check("max_ann", "a maximal ideal that is a vertex equals Ann(x) for some x != 0")
def _max_ann(ctx):
    lat = ctx.lattice
    targets = [i for i in ctx.vertices if lat.is_maximal[i]]
    if not targets:
        return NA, "no maximal ideal is a vertex"
    found = []
    for p in targets:
        x = next((x for x in range(1, ctx.ring.order) if lat.element_annihilator(x) == p), None)
        if x is None:
            return FAIL, f"maximal vertex {ctx.fmt(p)} is not Ann(x) for any x != 0"
        found.append(f"{lat.label(p)}=Ann({ctx.ring.label(x)})")
    return PASS, "; ".join(found)


@_check("brauer_min", "for R not a field, each minimal ideal I and Ann(I) are vertices, "
                      "and I^2 = 0 or I = Re for an idempotent e")
def _brauer_min(ctx):
    lat = ctx.lattice
    if ctx.flags.is_field:
        return NA, "R is a field"
    verts = set(ctx.vertices)
    idem_ideals = {lat.principal(e): e for e in sorted(idempotents(ctx.ring), reverse=True)}
    notes = []
    for i in lat.minimal_ideals():
        ann = lat.annihilator(i)
        if i not in verts:
            return FAIL, f"minimal ideal {ctx.fmt(i)} is not a vertex"
        if ann not in verts:
            return FAIL, f"Ann({ctx.fmt(i)}) = {ctx.fmt(ann)} is not a vertex"
        if lat.product(i, i) == lat.zero:
            notes.append(f"{lat.label(i)}^2=0")
        elif i in idem_ideals:
            notes.append(f"{lat.label(i)}=R*{ctx.ring.label(idem_ideals[i])}")
        else:
            return FAIL, f"minimal ideal {ctx.fmt(i)} has nonzero square and no idempotent generator"
    return PASS, "; ".join(notes)


@_check("socle_max", "for a non-domain, some maximal ideal is a vertex iff soc(R) != 0")
def _socle_max(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    lat = ctx.lattice
    lhs = any(lat.is_maximal[i] for i in ctx.vertices)
    soc, _ = socle_and_radical(lat)
    verdict, text = _iff(lhs, soc != lat.zero, "Max(R) meets A(R)*", "soc(R) != 0")
    return verdict, f"{text}; soc(R) = {ctx.fmt(soc)}"


@_check("cyclic_vert", "every nonzero proper cyclic ideal is a vertex iff every element "
                       "is a unit or a zero-divisor")
def _cyclic_vert(ctx):
    lat = ctx.lattice
    verts = set(ctx.vertices)
    cyclic = {lat.principal(x) for x in range(ctx.ring.order)} - {lat.zero, lat.unit}
    lhs_bad = sorted(c for c in cyclic if c not in verts)
    u = units(ctx.ring)
    z = ctx.zero_divisors
    rhs_bad = [x for x in range(ctx.ring.order) if (x in u) == (x in z)]
    if lhs_bad or rhs_bad:
        parts = []
        if lhs_bad:
            parts.append(f"cyclic non-vertices {ctx.fmt_set(lhs_bad)}")
        if rhs_bad:
            parts.append(f"elements neither/both unit and zero-divisor {rhs_bad[:10]}")
        return FAIL, "; ".join(parts)
    return PASS, f"{len(cyclic)} cyclic ideals are vertices; units and zero-divisors partition R"


@_check("univ_vertex", "AG(R) has a universal vertex iff R = F x D (F a field, D a domain) "
                       "or Z(R) = Ann(x) for some x != 0")
def _univ_vertex(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    lhs = bool(ctx.shape.universal_vertices)
    x = ctx.z_annihilator_witness
    rhs = ctx.split is not None or x is not None
    verdict, text = _iff(lhs, rhs, "universal vertex", "field product or Z(R) annihilator ideal")
    extra = []
    if ctx.split is not None:
        extra.append(f"split by e={ctx.ring.label(ctx.split.idempotent)}")
    if x is not None:
        extra.append(f"Z(R)=Ann({ctx.ring.label(x)})")
    if lhs:
        extra.append("universal " + ", ".join(ctx.ag.labels[p] for p in ctx.shape.universal_vertices))
    return verdict, "; ".join([text] + extra)


@_check("reduced_star", "for reduced R: universal vertex iff star iff R = F1 x F2")
def _reduced_star(ctx):
    if not is_reduced(ctx.ring):
        return NA, "R is not reduced"
    if ctx.is_domain():
        return NA, "R is a domain"
    a = bool(ctx.shape.universal_vertices)
    b = ctx.shape.is_star
    c = ctx.split is not None
    if a == b == c:
        return PASS, f"universal={a}, star={b}, field product={c}"
    return FAIL, f"universal={a}, star={b}, field product={c}"


@_check("artinian_univ", "AG(R) has a universal vertex iff R = F1 x F2 or R is local "
                         "with nonzero maximal ideal")
def _artinian_univ(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    lhs = bool(ctx.shape.universal_vertices)
    split = ctx.split is not None
    local = ctx.local_max is not None
    verdict, text = _iff(lhs, split or local, "universal vertex", "F1 x F2 or local with M != 0")
    return verdict, f"{text} (field product={split}, local={local})"


@_check("star_m4", "if AG(R) is a star then R = F1 x F2 or R is local with M^4 = 0")
def _star_m4(ctx):
    if not ctx.shape.is_star:
        return NA, "AG(R) is not a star"
    if ctx.split is not None:
        return PASS, "star; field product"
    m = ctx.local_max
    if m is not None and ctx.lattice.power(m, 4) == ctx.lattice.zero:
        return PASS, f"star; local with M^4 = 0, M = {ctx.fmt(m)}"
    return FAIL, f"star but neither field product nor local with M^4 = 0; vertices={ctx.fmt_set(ctx.vertices)}"


def star_cases(ctx):
    """Which of the three local star cases hold, with a note on case (ii) vacuity."""
    lat = ctx.lattice
    m = ctx.local_max
    if m is None:
        return set(), ""
    zero = lat.zero
    m2 = lat.product(m, m)
    m3 = lat.product(m2, m)
    m4 = lat.product(m3, m)
    nzp = ctx.nonzero_proper
    cases = set()
    note = ""
    if m2 == zero and nzp == [m]:
        cases.add("i")
    if m3 == zero and m2 != zero and lat.minimal_ideals() == [m2]:
        pairs = [(a, b) for a, b in itertools.combinations(nzp, 2) if a != m2 and b != m2]
        if all(lat.product(a, b) == m2 for a, b in pairs):
            cases.add("ii")
            if not pairs:
                note = "case (ii) pair condition vacuous: no two distinct nonzero proper ideals avoid M^2"
    if m4 == zero and m3 != zero and set(ctx.vertices) == {m, m2, m3}:
        cases.add("iii")
    return cases, note


@_check("star_cases", "AG(R) is a star iff R = F1 x F2 or R is local with M != 0 and exactly "
                      "one of: (i) M^2 = 0 and M is the only nonzero proper ideal; (ii) M^3 = 0, "
                      "M^2 the only minimal ideal, and I1*I2 = M^2 for distinct nonzero proper "
                      "I1, I2 != M^2; (iii) M^3 != 0 = M^4 and A(R)* = {M, M^2, M^3}")
def _star_cases(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    lhs = ctx.shape.is_star
    cases, note = star_cases(ctx)
    split = ctx.split is not None
    rhs = split or len(cases) == 1
    verdict, text = _iff(lhs, rhs, "star", "field product or exactly one local case")
    detail = [text]
    if split:
        detail.append("field product")
    if cases:
        detail.append("matched case " + ",".join(f"({c})" for c in sorted(cases)))
    if "iii" in cases:
        detail.append(f"A(R)* = {ctx.fmt_set(ctx.vertices)}")
    if note:
        detail.append(note)
    return verdict, "; ".join(detail)


def complete_types(ctx):
    lat = ctx.lattice
    types = []
    if ctx.split is not None:
        types.append(1)
    z = ctx.z_ideal
    if z is not None:
        z2 = lat.product(z, z)
        if z2 == lat.zero:
            types.append(2)
        if (ctx.flags.is_local and z2 != lat.zero and z2 != z
                and sorted(ctx.nonzero_proper) == sorted({z, z2})):
            types.append(3)
    return types


@_check("complete_cases", "AG(R) is complete iff R = F1 x F2, or Z(R) is an ideal with "
                          "Z(R)^2 = 0, or R is local with exactly two nonzero proper ideals "
                          "Z(R) and Z(R)^2")
def _complete_cases(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    lhs = ctx.shape.is_complete
    types = complete_types(ctx)
    verdict, text = _iff(lhs, bool(types), "complete", "one of the three ring types")
    if types:
        text += "; type " + ",".join(f"({t})" for t in types)
    return verdict, text


@_check("gamma_vs_ag", "if Gamma(R) is complete then AG(R) is complete (converse may fail)")
def _gamma_vs_ag(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    g_complete = shape_classify(ctx.gamma).is_complete
    a_complete = ctx.shape.is_complete
    if g_complete and not a_complete:
        return FAIL, f"Gamma(R) complete on {ctx.gamma.labels} but AG(R) is not complete"
    if g_complete:
        return PASS, "Gamma(R) and AG(R) both complete"
    if a_complete:
        return PASS, f"AG(R) complete while Gamma(R) is not (converse gap), Gamma edges={ctx.gamma.edge_count}"
    return PASS, "neither graph is complete"


@_check("small_graphs", "AG(R) has 1, 2, 3 vertices iff respectively: one nonzero proper ideal; "
                        "R = F1 x F2 or local with exactly Z(R), Z(R)^2; local with exactly "
                        "Z(R), Z(R)^2, Z(R)^3")
def _small_graphs(ctx):
    lat = ctx.lattice
    v = len(ctx.vertices)
    nzp = sorted(ctx.nonzero_proper)
    z = ctx.z_ideal
    local = ctx.flags.is_local
    a = len(nzp) == 1
    b = ctx.split is not None
    c = False
    if local and z is not None:
        z2 = lat.product(z, z)
        z3 = lat.product(z2, z)
        two = {z, z2}
        three = {z, z2, z3}
        b = b or (len(two) == 2 and lat.zero not in two and nzp == sorted(two))
        c = len(three) == 3 and lat.zero not in three and nzp == sorted(three)
    checks = [(1, a, "one nonzero proper ideal"), (2, b, "F1 x F2 or local Z(R), Z(R)^2"),
              (3, c, "local Z(R), Z(R)^2, Z(R)^3")]
    bad = [f"|V|={n} is {v == n} but '{name}' is {s}" for n, s, name in checks if (v == n) != s]
    if bad:
        return FAIL, "; ".join(bad) + f"; nonzero proper ideals={ctx.fmt_set(nzp)}"
    hit = [name for n, s, name in checks if s]
    return PASS, f"|V|={v}" + (f"; matched {hit[0]}" if hit else "; none of the small cases")


@_check("prime_verts", "for a non-domain the following agree: A(R)* within Max(R); "
                       "A(R)* = Max(R); A(R)* = Spec(R); A(R)* within Spec(R); "
                       "R = F1 x F2 or R has one nonzero proper ideal")
def _prime_verts(ctx):
    if ctx.is_domain():
        return NA, "R is a domain"
    lat = ctx.lattice
    a = set(ctx.vertices)
    mx = set(lat.maximal_ideals())
    sp = set(lat.prime_ideals())
    vals = [a <= mx, a == mx, a == sp, a <= sp,
            ctx.split is not None or len(ctx.nonzero_proper) == 1]
    text = "A*<=Max={}, A*=Max={}, A*=Spec={}, A*<=Spec={}, split-or-one-ideal={}".format(*vals)
    if len(set(vals)) == 1:
        if vals[0]:
            text += f"; A(R)* = Spec(R) = Max(R) = {ctx.fmt_set(a)}"
        return PASS, text
    return FAIL, f"{text}; A(R)*={ctx.fmt_set(a)}, Spec={ctx.fmt_set(sp)}, Max={ctx.fmt_set(mx)}"


CHECK_IDS = tuple(CATALOG)


def resolve_checks(names):
    """Turn ``"all"`` or an iterable of ids into catalog-ordered ids."""
    if names is None or names == "all" or names == ["all"]:
        return CHECK_IDS
    unknown = [n for n in names if n not in CATALOG]
    if unknown:
        raise KeyError(f"unknown check id(s): {', '.join(unknown)}")
    wanted = set(names)
    return tuple(c for c in CHECK_IDS if c in wanted)


def run_check_ctx(ctx, cid):
    verdict, witness = CATALOG[cid].func(ctx)
    return CheckResult(cid, ctx.spec, verdict, witness)


def run_check(ring, cid, lattice_backend="auto"):
    """Evaluate catalog check ``cid`` on ``ring`` (a FiniteRing, spec string or RingContext)."""
    if isinstance(ring, RingContext):
        ctx = ring
    elif isinstance(ring, str):
        ctx = RingContext.from_spec(ring)
    else:
        ctx = RingContext(ring, lattice_backend=lattice_backend)
    return run_check_ctx(ctx, cid)
