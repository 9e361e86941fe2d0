"""Finite commutative rings with identity.

Elements are indices ``0..m-1`` with ``0`` the ring zero. Two backends:

* :class:`ZnRing` computes residues modulo ``n`` directly and never needs
  tables (used for ``Zn`` specs, so corpora of ``Z_n`` scale past the
  table cap);
* :class:`TableRing` stores ``m x m`` addition and multiplication tables.
"""

from __future__ import annotations

import math
from functools import cached_property

import numpy as np

from annideal import kernels
from annideal.ringspec import Product, QuotientPoly, Zn, format_poly, is_monic_mod, parse_ring_spec

DEFAULT_ORDER_CAP = 4096
AXIOM_CHECK_CAP = 128


class CapExceeded(RuntimeError):
    """A configured resource cap (ring order, ideal count) was exceeded."""


class AxiomError(RuntimeError):
    """A built table failed the ring-axiom self check (internal bug)."""


class FiniteRing:
    order: int
    identity: int
    backend: str
    spec = None

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} order={self.order}>"

    @property
    def name(self):
        return str(self.spec) if self.spec is not None else f"ring of order {self.order}"

    def check_index(self, a):
        if not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range for ring of order {self.order}")

    def elements(self):
        return range(self.order)

    @cached_property
    def ktables(self):
        """Addition and multiplication tables in the active kernel's format."""
        k = kernels.active
        return k.prepare_table(self.add_table), k.prepare_table(self.mul_table)

    def kernel_tables(self, k):
        if k is kernels.active:
            return self.ktables
        return k.prepare_table(self.add_table), k.prepare_table(self.mul_table)


class ZnRing(FiniteRing):
    backend = "zn"

    def __init__(self, n, spec=None, order_cap=DEFAULT_ORDER_CAP):
        if n < 2:
            raise ValueError("modulus must be at least 2")
        self.n = n
        self.order = n
        self.identity = 1
        self.spec = spec if spec is not None else Zn(n)
        self.order_cap = order_cap

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def label(self, a):
        return str(a)

    def _tables_allowed(self):
        if self.n > self.order_cap:
            raise CapExceeded(f"Z{self.n}: order {self.n} exceeds order cap {self.order_cap}")

    @cached_property
    def add_table(self):
        self._tables_allowed()
        r = np.arange(self.n, dtype=np.int64)
        return ((r[:, None] + r[None, :]) % self.n).astype(np.int32)

    @cached_property
    def mul_table(self):
        self._tables_allowed()
        r = np.arange(self.n, dtype=np.int64)
        return ((r[:, None] * r[None, :]) % self.n).astype(np.int32)

    def to_table(self):
        self._tables_allowed()
        return TableRing(self.add_table, self.mul_table, [str(a) for a in range(self.n)], spec=self.spec)


class TableRing(FiniteRing):
    backend = "table"

    def __init__(self, add_table, mul_table, labels, spec=None, components=None, check=True):
        self.add_table = np.ascontiguousarray(add_table, dtype=np.int32)
        self.mul_table = np.ascontiguousarray(mul_table, dtype=np.int32)
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        self.order = len(self.add_table)
        self.labels = list(labels)
        self.spec = spec
        self.components = components
        m = self.order
        ident = [e for e in range(m) if np.array_equal(self.mul_table[e], np.arange(m))]
        if len(ident) != 1:
            raise AxiomError("multiplication has no identity element")
        self.identity = ident[0]
        zero_cols = np.argmax(self.add_table == 0, axis=1)
        self._neg = zero_cols.astype(np.int64).tolist()
        self._add = self.add_table.tolist()
        self._mul = self.mul_table.tolist()
        if check and m <= AXIOM_CHECK_CAP:
            problems = axiom_violations(self.add_table, self.mul_table)
            if problems:
                raise AxiomError(f"{self.name}: {problems[0]}")

    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def label(self, a):
        return self.labels[a]


def axiom_violations(add, mul):
    """Exhaustively test the commutative-ring-with-identity axioms on tables."""
    add = np.asarray(add)
    mul = np.asarray(mul)
    m = len(add)
    r = np.arange(m)
    out = []
    if not np.array_equal(add[0], r):
        out.append("0 is not the additive identity")
    for name, t in (("addition", add), ("multiplication", mul)):
        if not np.array_equal(t, t.T):
            out.append(f"{name} is not commutative")
        # (ab)c == a(bc) for all triples
        if not np.array_equal(t[t, :], t[:, t]):
            out.append(f"{name} is not associative")
    if not np.all((add == 0).sum(axis=1) == 1):
        out.append("additive inverses are missing or not unique")
    if not all(len(set(row)) == m for row in add.tolist()):
        out.append("addition is not a group operation")
    ident = [e for e in range(m) if np.array_equal(mul[e], r)]
    if len(ident) != 1:
        out.append("no multiplicative identity")
    # a(b+c) == ab + ac
    left = mul[:, add]
    right = add[mul[:, :, None], mul[:, None, :]]
    if not np.array_equal(left, right):
        out.append("distributivity fails")
    return out


def _product_ring(rings, spec, order_cap):
    sizes = [r.order for r in rings]
    m = math.prod(sizes)
    if m > order_cap:
        raise CapExceeded(f"{spec}: order {m} exceeds order cap {order_cap}")
    weights = [math.prod(sizes[i + 1:]) for i in range(len(sizes))]
    idx = np.arange(m)
    digits = [(idx // w) % s for w, s in zip(weights, sizes)]
    add = np.zeros((m, m), dtype=np.int64)
    mul = np.zeros((m, m), dtype=np.int64)
    for ring, d, w in zip(rings, digits, weights):
        add += ring.add_table[np.ix_(d, d)].astype(np.int64) * w
        mul += ring.mul_table[np.ix_(d, d)].astype(np.int64) * w
    labels = []
    for i in range(m):
        parts = [ring.label(int(d[i])) for ring, d in zip(rings, digits)]
        labels.append("(" + ",".join(parts) + ")")
    return TableRing(add, mul, labels, spec=spec, components=tuple(rings))


def _poly_mulmod(a, b, f, n):
    """(a*b) mod (monic f, n), coefficient lists of length deg f."""
    d = len(f) - 1
    prod = [0] * (2 * d - 1 if d else 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_reduce(prod, f, n)


def _poly_reduce(p, f, n):
    d = len(f) - 1
    p = [c % n for c in p]
    for k in range(len(p) - 1, d - 1, -1):
        c = p[k]
        if c:
            for j in range(d + 1):
                p[k - d + j] = (p[k - d + j] - c * f[j]) % n
    p = p[:d] + [0] * max(0, d - len(p))
    return p


def _poly_ring(spec, order_cap):
    n = spec.base.n
    monic = [tuple(c % n for c in r) for r in spec.relators if is_monic_mod(r, n)]
    monic = [tuple(c for c in r[: max(i for i, c in enumerate(r) if c) + 1]) for r in monic]
    f = min(monic, key=len)
    d = len(f) - 1
    m = n ** d
    if m > order_cap:
        raise CapExceeded(f"{spec}: intermediate order {m} exceeds order cap {order_cap}")
    weights = [n ** k for k in range(d)]

    def encode(p):
        return sum(c * w for c, w in zip(p, weights))

    polys = [[(i // w) % n for w in weights] for i in range(m)]
    add = np.empty((m, m), dtype=np.int64)
    mul = np.empty((m, m), dtype=np.int64)
    for i, a in enumerate(polys):
        for j in range(i, m):
            b = polys[j]
            s = encode([(x + y) % n for x, y in zip(a, b)])
            p = encode(_poly_mulmod(a, b, f, n))
            add[i, j] = add[j, i] = s
            mul[i, j] = mul[j, i] = p
    labels = [format_poly(p) for p in polys]
    base = TableRing(add, mul, labels, spec=spec)
    rest = [encode(_poly_reduce(list(r), f, n)) for r in spec.relators]
    gens = [g for g in rest if g]
    if not gens:
        return base
    from annideal.ideals import ideal_closure

    ideal = ideal_closure(base, gens)
    if len(ideal) == m:
        raise ValueError(f"{spec}: relators generate the unit ideal")
    q = quotient_ring(base, ideal)
    q.spec = spec
    return q


def build_ring(spec, order_cap=DEFAULT_ORDER_CAP, backend="auto"):
    """Build a :class:`FiniteRing` from a spec (AST or string).

    ``backend`` is ``"auto"`` (ZnRing for ``Zn`` specs, tables otherwise) or
    ``"table"`` to force table materialisation.
    """
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    if backend not in ("auto", "table", "zn"):
        raise ValueError(f"unknown ring backend {backend!r}")
    if isinstance(spec, Zn):
        ring = ZnRing(spec.n, spec=spec, order_cap=order_cap)
        return ring.to_table() if backend == "table" else ring
    if backend == "zn":
        raise ValueError(f"{spec}: only Zn specs have the zn backend")
    if isinstance(spec, Product):
        factors = [build_ring(f, order_cap=order_cap) for f in spec.factors]
        return _product_ring(factors, spec, order_cap)
    if isinstance(spec, QuotientPoly):
        return _poly_ring(spec, order_cap)
    raise TypeError(f"not a ring spec: {spec!r}")


def element_arith(ring, kind, a, b=None):
    ring.check_index(a)
    if kind == "neg":
        if b is not None:
            raise ValueError("neg takes one operand")
        return ring.neg(a)
    if b is None:
        raise ValueError(f"{kind} takes two operands")
    ring.check_index(b)
    if kind == "add":
        return ring.add(a, b)
    if kind == "mul":
        return ring.mul(a, b)
    raise ValueError(f"unknown operation {kind!r}")


def zero_divisors(ring):
    """Zero-divisors of ``ring``, including 0."""
    if isinstance(ring, ZnRing):
        return {x for x in range(ring.n) if math.gcd(x, ring.n) > 1}
    mul = ring.mul_table
    hits = (mul[:, 1:] == 0).any(axis=1)
    return set(np.flatnonzero(hits).tolist()) | {0}


def units(ring):
    if isinstance(ring, ZnRing):
        return {x for x in range(ring.n) if math.gcd(x, ring.n) == 1}
    return set(np.flatnonzero((ring.mul_table == ring.identity).any(axis=1)).tolist())


def idempotents(ring):
    if isinstance(ring, ZnRing):
        n = ring.n
        return {e for e in range(n) if e * e % n == e}
    return set(np.flatnonzero(ring.mul_table.diagonal() == np.arange(ring.order)).tolist())


def nilpotents(ring):
    out = set()
    for x in range(ring.order):
        p = x
        for _ in range(ring.order):
            if p == 0:
                out.add(x)
                break
            p = ring.mul(p, x)
    return out


def is_reduced(ring):
    if isinstance(ring, ZnRing):
        n = ring.n
        return all(n % (p * p) for p in range(2, math.isqrt(n) + 1))
    return nilpotents(ring) == {0}


def is_field(ring):
    return ring.order >= 2 and len(units(ring)) == ring.order - 1


def is_domain(ring):
    return ring.order >= 2 and zero_divisors(ring) == {0}


def quotient_ring(ring, ideal):
    """Table ring on the cosets of ``ideal``; coset of 0 is index 0.

    Cosets are numbered by their smallest member, and labelled by it.
    """
    elems = sorted(getattr(ideal, "elements", ideal))
    m = ring.order
    if not elems or elems[0] != 0:
        raise ValueError("not an ideal: missing 0")
    if len(elems) == m:
        raise ValueError("quotient by the unit ideal is not allowed")
    add = np.asarray(ring.add_table)
    mul = np.asarray(ring.mul_table)
    members = np.zeros(m, dtype=bool)
    members[elems] = True
    if not members[add[np.ix_(elems, elems)]].all():
        raise ValueError("not an ideal: not closed under addition")
    if not members[mul[:, elems]].all():
        raise ValueError("not an ideal: not closed under multiplication by ring elements")
    reps = add[:, elems].min(axis=1)
    uniq = np.unique(reps)
    coset_of = np.empty(m, dtype=np.int64)
    coset_of[uniq] = np.arange(len(uniq))
    coset_of = coset_of[reps]
    qadd = coset_of[add[np.ix_(uniq, uniq)]]
    qmul = coset_of[mul[np.ix_(uniq, uniq)]]
    labels = [ring.label(int(r)) for r in uniq]
    return TableRing(qadd, qmul, labels)
