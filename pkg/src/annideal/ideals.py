"""Ideals of finite rings and the complete ideal lattice.

Two lattice backends share one interface (ideal ids are positions in the
canonical list, ordered by cardinality then element list):

* :class:`ExplicitLattice` works on table rings. Ideals are found as sums of
  principal ideals, since every ideal of a finite ring is the sum of the
  principal ideals of its elements.
* :class:`DivisorLattice` works on :class:`~annideal.ring.ZnRing` without
  tables; ideal ``dZ_n`` is keyed by the divisor ``d`` of ``n``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from annideal import kernels
from annideal.ring import CapExceeded, ZnRing, idempotents, zero_divisors

DEFAULT_IDEAL_CAP = 100_000


class Ideal:
    """A set of ring elements, stored sorted. ``divisor`` is set for ideals of Z_n."""

    __slots__ = ("elements", "divisor")

    def __init__(self, elements, divisor=None):
        self.elements = elements
        self.divisor = divisor

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def as_tuple(self):
        return tuple(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return len(self) == len(other) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        if self.divisor is not None:
            return f"Ideal(divisor={self.divisor})"
        return f"Ideal({list(self.elements)})"


def _zn_ideal(n, d):
    d = math.gcd(d, n) or n
    return Ideal(range(0, n, d), divisor=d)


def _as_elements(ideal):
    return ideal.elements if isinstance(ideal, Ideal) else sorted(ideal)


def ideal_closure(ring, gens):
    """Smallest ideal of ``ring`` containing ``gens``."""
    gens = list(gens)
    for g in gens:
        ring.check_index(g)
    if isinstance(ring, ZnRing):
        return _zn_ideal(ring.n, math.gcd(ring.n, *gens) if gens else ring.n)
    if not gens:
        return Ideal((0,))
    k = kernels.active
    add, _ = ring.ktables
    seeds = sorted(set(ring.mul_table[gens].ravel().tolist()))
    return Ideal(tuple(k.additive_span(add, (0,), seeds)))


def principal_ideal(ring, x):
    if isinstance(ring, ZnRing):
        return _zn_ideal(ring.n, x)
    return Ideal(tuple(np.unique(ring.mul_table[x]).tolist()))


def ideal_product(ring, I, J):
    if isinstance(ring, ZnRing) and I.divisor is not None and J.divisor is not None:
        return _zn_ideal(ring.n, I.divisor * J.divisor)
    k = kernels.active
    add, mul = ring.ktables
    return Ideal(tuple(k.product_span(add, mul, list(_as_elements(I)), list(_as_elements(J)))))


def ideal_sum(ring, I, J):
    if isinstance(ring, ZnRing) and I.divisor is not None and J.divisor is not None:
        return _zn_ideal(ring.n, math.gcd(I.divisor, J.divisor))
    k = kernels.active
    add, _ = ring.ktables
    return Ideal(tuple(k.additive_span(add, list(_as_elements(I)), list(_as_elements(J)))))


def ideal_intersect(ring, I, J):
    if isinstance(ring, ZnRing) and I.divisor is not None and J.divisor is not None:
        return _zn_ideal(ring.n, math.lcm(I.divisor, J.divisor))
    return Ideal(tuple(sorted(set(_as_elements(I)) & set(_as_elements(J)))))


def ideal_sum_intersect(ring, kind, I, J):
    if kind == "sum":
        return ideal_sum(ring, I, J)
    if kind == "intersect":
        return ideal_intersect(ring, I, J)
    raise ValueError(f"unknown kind {kind!r}")


def annihilator(ring, I):
    """Ann(I) = {r : rI = 0}."""
    if isinstance(ring, ZnRing) and I.divisor is not None:
        return _zn_ideal(ring.n, ring.n // I.divisor)
    k = kernels.active
    _, mul = ring.ktables
    return Ideal(tuple(k.annihilator(mul, list(_as_elements(I)))))


def element_annihilator(ring, x):
    """Ann(x) = {r : rx = 0}."""
    ring.check_index(x)
    if isinstance(ring, ZnRing):
        return _zn_ideal(ring.n, ring.n // math.gcd(x, ring.n))
    return Ideal(tuple(np.flatnonzero(ring.mul_table[x] == 0).tolist()))


def is_ideal(ring, subset):
    """Direct test of the ideal axioms on an arbitrary subset (slow path)."""
    s = set(subset)
    if 0 not in s:
        return False
    for a in s:
        if ring.neg(a) not in s:
            return False
        for b in s:
            if ring.add(a, b) not in s:
                return False
        for r in range(ring.order):
            if ring.mul(r, a) not in s:
                return False
    return True


def brute_force_ideals(ring):
    """All ideals by testing every subset containing 0; exponential, for tests only."""
    m = ring.order
    rest = list(range(1, m))
    found = []
    for bits in range(1 << (m - 1)):
        subset = [0] + [rest[i] for i in range(m - 1) if bits >> i & 1]
        if is_ideal(ring, subset):
            found.append(tuple(subset))
    found.sort(key=lambda t: (len(t), t))
    return found


class IdealFlags(NamedTuple):
    is_prime: bool
    is_maximal: bool
    is_minimal: bool
    is_principal: bool


class RingFlags(NamedTuple):
    is_field: bool
    is_domain: bool
    is_local: bool
    local_maximal_ideal: int | None


class FieldSplit(NamedTuple):
    idempotent: int
    ideal: int
    complement: int


class IdealLattice:
    """Shared queries; subclasses fill the tables in ``__init__``."""

    backend = None
    ring = None
    ideals: list
    zero: int
    unit: int
    is_prime: list
    is_maximal: list
    is_minimal: list
    generator: list

    def __len__(self):
        return len(self.ideals)

    def __getitem__(self, i):
        return self.ideals[i]

    def ids(self):
        return range(len(self.ideals))

    def nonzero_proper(self):
        return [i for i in self.ids() if i != self.zero and i != self.unit]

    def maximal_ideals(self):
        return [i for i in self.ids() if self.is_maximal[i]]

    def minimal_ideals(self):
        return [i for i in self.ids() if self.is_minimal[i]]

    def prime_ideals(self):
        return [i for i in self.ids() if self.is_prime[i]]

    def find(self, elements):
        """Id of the ideal with exactly these elements, or None."""
        raise NotImplementedError

    def power(self, i, k):
        p = i
        for _ in range(k - 1):
            p = self.product(p, i)
        return p

    def label(self, i):
        return ideal_label(self.ring, self.ideals[i].elements)


class ExplicitLattice(IdealLattice):
    backend = "explicit"

    def __init__(self, ring, ideal_cap=DEFAULT_IDEAL_CAP, kernel=None):
        self.ring = ring
        self.k = kernel or kernels.active
        self._add, self._mul = ring.kernel_tables(self.k)
        m = ring.order
        mul_np = np.asarray(ring.mul_table)

        principal = {}
        for x in range(m):
            key = tuple(np.unique(mul_np[x]).tolist())
            principal.setdefault(key, x)
        seeds = sorted(principal, key=lambda t: (len(t), t))
        seed_masks = [_mask(t) for t in seeds]

        found = {_mask((0,)): (0,)}
        for t, mk in zip(seeds, seed_masks):
            found[mk] = t
        if len(found) > ideal_cap:
            raise CapExceeded(f"{ring.name}: more than {ideal_cap} ideals (ideal cap)")
        queue = list(found.values())
        while queue:
            cur = queue.pop()
            cmask = _mask(cur)
            for t, mk in zip(seeds, seed_masks):
                if mk | cmask == cmask:
                    continue
                s = tuple(self.k.additive_span(self._add, cur, t))
                smask = _mask(s)
                if smask not in found:
                    found[smask] = s
                    queue.append(s)
                    if len(found) > ideal_cap:
                        raise CapExceeded(f"{ring.name}: more than {ideal_cap} ideals (ideal cap)")

        ordered = sorted(found.values(), key=lambda t: (len(t), t))
        self.ideals = [Ideal(t) for t in ordered]
        self.masks = [_mask(t) for t in ordered]
        self._index = {mk: i for i, mk in enumerate(self.masks)}
        self.zero = 0
        self.unit = len(ordered) - 1
        self.generator = [principal.get(t) for t in ordered]
        self._products = {}
        self._ann = [None] * len(ordered)

        n = len(ordered)
        full = self.masks[self.unit]
        self.is_maximal = [False] * n
        self.is_minimal = [False] * n
        for i in range(n):
            mi = self.masks[i]
            if i != self.unit:
                self.is_maximal[i] = not any(
                    (mi | mj) == mj and mj != mi and mj != full for mj in self.masks
                )
            if i != self.zero:
                self.is_minimal[i] = not any(
                    (mi | mj) == mi and mj != mi and mj != self.masks[self.zero] for mj in self.masks
                )
        self.is_prime = [
            i != self.unit and self.k.is_prime(self._mul, list(self.ideals[i].elements))
            for i in range(n)
        ]

    def find(self, elements):
        return self._index.get(_mask(elements))

    def _id(self, elements):
        i = self.find(elements)
        if i is None:
            raise AssertionError("computed set is not in the ideal lattice")
        return i

    def contains(self, i, j):
        """Ideal ``i`` is a subset of ideal ``j``."""
        return self.masks[i] | self.masks[j] == self.masks[j]

    def product(self, i, j):
        key = (i, j) if i <= j else (j, i)
        r = self._products.get(key)
        if r is None:
            a, b = self.ideals[i].elements, self.ideals[j].elements
            if self.k.products_zero(self._mul, a, b):
                r = self.zero
            else:
                r = self._id(self.k.product_span(self._add, self._mul, a, b))
            self._products[key] = r
        return r

    def product_is_zero(self, i, j):
        return self.contains(i, self.annihilator(j))

    def sum(self, i, j):
        if self.contains(i, j):
            return j
        if self.contains(j, i):
            return i
        return self._id(self.k.additive_span(self._add, self.ideals[i].elements, self.ideals[j].elements))

    def intersect(self, i, j):
        return self._index[self.masks[i] & self.masks[j]]

    def annihilator(self, i):
        a = self._ann[i]
        if a is None:
            a = self._ann[i] = self._id(self.k.annihilator(self._mul, list(self.ideals[i].elements)))
        return a

    def element_annihilator(self, x):
        return self._id(np.flatnonzero(np.asarray(self.ring.mul_table[x]) == 0).tolist())

    def principal(self, x):
        return self._id(np.unique(np.asarray(self.ring.mul_table[x])).tolist())


def _mask(elements):
    mk = 0
    for e in elements:
        mk |= 1 << e
    return mk


def _divisors(n):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _is_prime_number(p):
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


class DivisorLattice(IdealLattice):
    backend = "divisor"

    def __init__(self, ring):
        if not isinstance(ring, ZnRing):
            raise TypeError("divisor lattice needs a ZnRing")
        self.ring = ring
        n = self.n = ring.n
        # cardinality n/d ascending
        self.divisors = sorted(_divisors(n), reverse=True)
        self.ideals = [_zn_ideal(n, d) for d in self.divisors]
        self._index = {d: i for i, d in enumerate(self.divisors)}
        self.zero = 0
        self.unit = len(self.divisors) - 1
        self.is_prime = [_is_prime_number(d) for d in self.divisors]
        self.is_maximal = list(self.is_prime)
        self.is_minimal = [d != n and _is_prime_number(n // d) for d in self.divisors]
        self.generator = [d % n for d in self.divisors]

    def of(self, d):
        return self._index[math.gcd(d, self.n) or self.n]

    def find(self, elements):
        elements = list(elements)
        if not elements or elements[0] != 0:
            return None
        d = elements[1] if len(elements) > 1 else self.n
        i = self._index.get(d)
        if i is None or len(elements) != self.n // d or tuple(elements) != tuple(range(0, self.n, d)):
            return None
        return i

    def contains(self, i, j):
        return self.divisors[i] % self.divisors[j] == 0

    def product(self, i, j):
        return self.of(self.divisors[i] * self.divisors[j])

    def product_is_zero(self, i, j):
        return self.divisors[i] * self.divisors[j] % self.n == 0

    def sum(self, i, j):
        return self.of(math.gcd(self.divisors[i], self.divisors[j]))

    def intersect(self, i, j):
        return self.of(math.lcm(self.divisors[i], self.divisors[j]))

    def annihilator(self, i):
        return self.of(self.n // self.divisors[i])

    def element_annihilator(self, x):
        return self.of(self.n // math.gcd(x, self.n))

    def principal(self, x):
        return self.of(x)

    def label(self, i):
        d = self.divisors[i]
        if d == 1:
            return self.ring.name
        return "(0)" if d == self.n else f"({d})"


def enumerate_ideals(ring, backend="auto", ideal_cap=DEFAULT_IDEAL_CAP, kernel=None):
    """Complete ideal lattice of ``ring``.

    ``backend``: ``"auto"`` picks the divisor lattice for :class:`ZnRing`
    and the explicit lattice otherwise; ``"explicit"`` materialises tables.
    """
    if backend == "auto":
        backend = "divisor" if isinstance(ring, ZnRing) else "explicit"
    if backend == "divisor":
        return DivisorLattice(ring)
    if backend == "explicit":
        return ExplicitLattice(ring, ideal_cap=ideal_cap, kernel=kernel)
    raise ValueError(f"unknown lattice backend {backend!r}")


def annihilating_ideal_set(lattice):
    """Ids of nonzero ideals with nonzero annihilator: the vertices of AG(R)."""
    return [
        i for i in lattice.ids()
        if i != lattice.zero and lattice.annihilator(i) != lattice.zero
    ]


def classify_ideal(lattice, i):
    return IdealFlags(
        lattice.is_prime[i], lattice.is_maximal[i], lattice.is_minimal[i],
        lattice.generator[i] is not None,
    )


def socle_and_radical(lattice):
    soc = lattice.zero
    for i in lattice.minimal_ideals():
        soc = lattice.sum(soc, i)
    jac = lattice.unit
    for i in lattice.maximal_ideals():
        jac = lattice.intersect(jac, i)
    return soc, jac


def nilpotency_index(lattice, i):
    """Least k with I^k = 0, or None when the powers stall at a nonzero ideal."""
    p, k = i, 1
    while p != lattice.zero:
        nxt = lattice.product(p, i)
        if nxt == p:
            return None
        p, k = nxt, k + 1
    return k


def ring_classification(lattice):
    maximal = lattice.maximal_ideals()
    is_field = len(lattice) == 2
    is_domain = zero_divisors(lattice.ring) == {0}
    if is_field != is_domain:
        raise AssertionError(f"{lattice.ring.name}: finite domain that is not a field")
    is_local = len(maximal) == 1
    return RingFlags(is_field, is_domain, is_local, maximal[0] if is_local else None)


def _idempotents_sorted(ring):
    if isinstance(ring, ZnRing) and ring.n > 10**6:
        raise CapExceeded(f"{ring.name}: idempotent scan too large")
    return sorted(idempotents(ring))


def detect_field_product(lattice):
    """Nontrivial idempotent e with Re and R(1-e) both minimal ideals, else None.

    Both summands minimal means each is a field, so R is a product of two
    fields. The smallest such e is returned.
    """
    ring = lattice.ring
    one = ring.identity
    for e in _idempotents_sorted(ring):
        if e in (0, one):
            continue
        f = ring.add(one, ring.neg(e))
        a, b = lattice.principal(e), lattice.principal(f)
        if lattice.is_minimal[a] and lattice.is_minimal[b]:
            return FieldSplit(e, a, b)
    return None


def _component_digits(ring, elements):
    sizes = [c.order for c in ring.components]
    weights = [math.prod(sizes[i + 1:]) for i in range(len(sizes))]
    return [sorted({(e // w) % s for e in elements}) for w, s in zip(weights, sizes)]


def ideal_label(ring, elements):
    """Canonical generator string: ``(0)``, ``(2)``, ``(x, 2)``, ``Z2x(0)`` ..."""
    elements = list(elements)
    if len(elements) == ring.order:
        return ring.name
    if elements == [0]:
        return "(0)"
    comps = getattr(ring, "components", None)
    if comps:
        parts = _component_digits(ring, elements)
        return "x".join(ideal_label(c, p) for c, p in zip(comps, parts))
    if isinstance(ring, ZnRing):
        return f"({elements[1]})"
    gens = []
    span = {0}
    for x in elements:
        if x not in span:
            gens.append(x)
            span = set(ideal_closure(ring, gens).elements)
            if len(span) == len(elements):
                break
    return "(" + ", ".join(ring.label(g) for g in gens) + ")"
