"""Brute-force reference computations that do not use the package's tables.

Rings are modelled directly: a product of Z_{n_i} is a list of residue
tuples with componentwise arithmetic.
"""

import itertools
from collections import deque


class TupleRing:
    def __init__(self, moduli):
        self.moduli = tuple(moduli)
        self.elements = list(itertools.product(*[range(n) for n in moduli]))

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def mul(self, a, b):
        return tuple((x * y) % n for x, y, n in zip(a, b, self.moduli))

    @property
    def zero(self):
        return tuple(0 for _ in self.moduli)

    @property
    def one(self):
        return tuple(1 % n for n in self.moduli)


def closure(ring, gens):
    """Ideal generated by gens: repeatedly add sums and ring multiples."""
    s = {ring.zero} | set(gens)
    changed = True
    while changed:
        changed = False
        cur = list(s)
        for a in cur:
            for r in ring.elements:
                p = ring.mul(r, a)
                if p not in s:
                    s.add(p)
                    changed = True
            for b in cur:
                q = ring.add(a, b)
                if q not in s:
                    s.add(q)
                    changed = True
    return frozenset(s)


def all_ideals(ring):
    """Every ideal, as the closure of every subset of size <= 2 (enough for these rings)."""
    found = {closure(ring, [])}
    for a in ring.elements:
        found.add(closure(ring, [a]))
    for a, b in itertools.combinations(ring.elements, 2):
        found.add(closure(ring, [a, b]))
    return found


def ideal_product(ring, I, J):
    return closure(ring, [ring.mul(a, b) for a in I for b in J])


def annihilating_graph(ring):
    """AG(R) by definition: vertices nonzero I with some nonzero J, IJ = 0."""
    zero = frozenset([ring.zero])
    ideals = all_ideals(ring)
    nonzero = [I for I in ideals if I != zero]
    verts = [I for I in nonzero if any(ideal_product(ring, I, J) == zero for J in nonzero)]
    edges = set()
    for I, J in itertools.combinations(verts, 2):
        if ideal_product(ring, I, J) == zero:
            edges.add(frozenset([I, J]))
    return verts, edges


def bfs_dist(adj, s):
    dist = {s: 0}
    q = deque([s])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def zn_zero_divisors(n):
    return {x for x in range(n) if any(x * y % n == 0 for y in range(1, n))} | {0}


def zn_units(n):
    return {x for x in range(n) if any(x * y % n == 1 for y in range(n))}
