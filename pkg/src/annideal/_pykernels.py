"""Pure-Python kernels.

Same signatures as the compiled ``_ckernels`` module. Tables are nested
lists (``add[a][b]``), adjacency is a list of neighbour lists.
"""

from collections import deque

NAME = "python"


def prepare_table(arr):
    return arr.tolist()


def prepare_adjacency(neighbours):
    return [list(nb) for nb in neighbours]


def additive_span(add, base, gens):
    """Sorted additive subgroup generated by the subgroup ``base`` and ``gens``."""
    members = set(base)
    members.add(0)
    for g in gens:
        if g in members:
            continue
        coset = list(members)
        t = g
        while t not in members:
            row = add[t]
            members.update([row[h] for h in coset])
            t = add[t][g]
    return sorted(members)


def product_span(add, mul, left, right):
    prods = set()
    for a in left:
        row = mul[a]
        prods.update([row[b] for b in right])
    prods.discard(0)
    return additive_span(add, (0,), sorted(prods))


def products_zero(mul, left, right):
    for a in left:
        row = mul[a]
        for b in right:
            if row[b]:
                return False
    return True


def annihilator(mul, elems):
    out = []
    for r, row in enumerate(mul):
        for e in elems:
            if row[e]:
                break
        else:
            out.append(r)
    return out


def is_prime(mul, elems):
    """Complement of ``elems`` is multiplicatively closed (properness not checked)."""
    inside = set(elems)
    outside = [a for a in range(len(mul)) if a not in inside]
    for i, a in enumerate(outside):
        row = mul[a]
        for b in outside[i:]:
            if row[b] in inside:
                return False
    return True


def _bfs(adj, root, dist):
    for i in range(len(dist)):
        dist[i] = -1
    dist[root] = 0
    queue = deque([root])
    far = 0
    seen = 1
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                far = du
                seen += 1
                queue.append(w)
    return far, seen


def diameter(adj):
    """Return ``(diameter, connected)``; diameter is -1 when disconnected."""
    n = len(adj)
    dist = [-1] * n
    best = 0
    for root in range(n):
        far, seen = _bfs(adj, root, dist)
        if seen < n:
            return -1, False
        if far > best:
            best = far
    return best, True


def girth(adj):
    """Length of a shortest cycle, or 0 for a forest."""
    n = len(adj)
    best = 0
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best and 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cyc = dist[u] + dist[w] + 1
                    if not best or cyc < best:
                        best = cyc
        if best == 3:
            break
    return best


def components(adj):
    n = len(adj)
    label = [-1] * n
    count = 0
    for root in range(n):
        if label[root] >= 0:
            continue
        label[root] = count
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if label[w] < 0:
                    label[w] = count
                    queue.append(w)
        count += 1
    return label
