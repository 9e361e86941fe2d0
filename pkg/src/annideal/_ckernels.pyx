# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; drop-in replacement for ``_pykernels``.

Tables are C-contiguous int32 arrays, adjacency is a CSR pair
``(indptr, indices)`` of int32 arrays.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

NAME = "cython"

ctypedef cnp.int32_t i32


def prepare_table(arr):
    return np.ascontiguousarray(arr, dtype=np.int32)


def prepare_adjacency(neighbours):
    indptr = np.zeros(len(neighbours) + 1, dtype=np.int32)
    flat = []
    for i, nb in enumerate(neighbours):
        flat.extend(nb)
        indptr[i + 1] = len(flat)
    return indptr, np.asarray(flat, dtype=np.int32)


cdef list _flags_to_sorted(cnp.uint8_t[::1] flags):
    cdef Py_ssize_t i
    return [i for i in range(flags.shape[0]) if flags[i]]


def additive_span(const i32[:, ::1] add, base, gens):
    cdef Py_ssize_t m = add.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] flag_arr = np.zeros(m, dtype=np.uint8)
    cdef cnp.uint8_t[::1] flags = flag_arr
    cdef cnp.ndarray[i32, ndim=1] buf_arr = np.empty(m, dtype=np.int32)
    cdef i32[::1] buf = buf_arr
    cdef Py_ssize_t size = 0, coset_size, j
    cdef i32 g, t, h, s
    flags[0] = 1
    buf[size] = 0
    size += 1
    for h in base:
        if not flags[h]:
            flags[h] = 1
            buf[size] = h
            size += 1
    for g in gens:
        if flags[g]:
            continue
        coset_size = size
        t = g
        while not flags[t]:
            for j in range(coset_size):
                s = add[t, buf[j]]
                if not flags[s]:
                    flags[s] = 1
                    buf[size] = s
                    size += 1
            t = add[t, g]
    return _flags_to_sorted(flags)


def product_span(const i32[:, ::1] add, const i32[:, ::1] mul, left, right):
    cdef Py_ssize_t m = mul.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] seen = np.zeros(m, dtype=np.uint8)
    cdef i32[::1] lv = np.asarray(left, dtype=np.int32)
    cdef i32[::1] rv = np.asarray(right, dtype=np.int32)
    cdef Py_ssize_t i, j
    for i in range(lv.shape[0]):
        for j in range(rv.shape[0]):
            seen[mul[lv[i], rv[j]]] = 1
    seen[0] = 0
    return additive_span(add, (0,), np.flatnonzero(seen).tolist())


def products_zero(const i32[:, ::1] mul, left, right):
    cdef i32[::1] lv = np.asarray(left, dtype=np.int32)
    cdef i32[::1] rv = np.asarray(right, dtype=np.int32)
    cdef Py_ssize_t i, j
    for i in range(lv.shape[0]):
        for j in range(rv.shape[0]):
            if mul[lv[i], rv[j]]:
                return False
    return True


def annihilator(const i32[:, ::1] mul, elems):
    cdef Py_ssize_t m = mul.shape[0], r, j
    cdef i32[::1] ev = np.asarray(elems, dtype=np.int32)
    cdef bint ok
    out = []
    for r in range(m):
        ok = True
        for j in range(ev.shape[0]):
            if mul[r, ev[j]]:
                ok = False
                break
        if ok:
            out.append(r)
    return out


def is_prime(const i32[:, ::1] mul, elems):
    cdef Py_ssize_t m = mul.shape[0], i, j, k = 0
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] inside_arr = np.zeros(m, dtype=np.uint8)
    cdef cnp.uint8_t[::1] inside = inside_arr
    cdef cnp.ndarray[i32, ndim=1] out_arr = np.empty(m, dtype=np.int32)
    cdef i32[::1] outside = out_arr
    for e in elems:
        inside[e] = 1
    for i in range(m):
        if not inside[i]:
            outside[k] = i
            k += 1
    for i in range(k):
        for j in range(i, k):
            if inside[mul[outside[i], outside[j]]]:
                return False
    return True


cdef Py_ssize_t _bfs(const i32[::1] indptr, const i32[::1] indices, Py_ssize_t root,
                     i32[::1] dist, i32[::1] queue, Py_ssize_t *far):
    cdef Py_ssize_t n = dist.shape[0], head = 0, tail = 0, i, u, w
    for i in range(n):
        dist[i] = -1
    dist[root] = 0
    queue[tail] = root
    tail += 1
    far[0] = 0
    while head < tail:
        u = queue[head]
        head += 1
        for i in range(indptr[u], indptr[u + 1]):
            w = indices[i]
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                far[0] = dist[w]
                queue[tail] = w
                tail += 1
    return tail


def diameter(adj):
    cdef const i32[::1] indptr = adj[0]
    cdef const i32[::1] indices = adj[1]
    cdef Py_ssize_t n = indptr.shape[0] - 1, root, seen, far = 0, best = 0
    cdef i32[::1] dist = np.empty(max(n, 1), dtype=np.int32)
    cdef i32[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    for root in range(n):
        seen = _bfs(indptr, indices, root, dist[:n], queue, &far)
        if seen < n:
            return -1, False
        if far > best:
            best = far
    return best, True


def girth(adj):
    cdef const i32[::1] indptr = adj[0]
    cdef const i32[::1] indices = adj[1]
    cdef Py_ssize_t n = indptr.shape[0] - 1, root, head, tail, i, u, w, cyc, best = 0
    cdef i32[::1] dist = np.empty(max(n, 1), dtype=np.int32)
    cdef i32[::1] parent = np.empty(max(n, 1), dtype=np.int32)
    cdef i32[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    for root in range(n):
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        head = 0
        tail = 1
        queue[0] = root
        while head < tail:
            u = queue[head]
            head += 1
            if best and 2 * dist[u] >= best:
                break
            for i in range(indptr[u], indptr[u + 1]):
                w = indices[i]
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    cyc = dist[u] + dist[w] + 1
                    if not best or cyc < best:
                        best = cyc
        if best == 3:
            break
    return best


def components(adj):
    cdef const i32[::1] indptr = adj[0]
    cdef const i32[::1] indices = adj[1]
    cdef Py_ssize_t n = indptr.shape[0] - 1, root, head, tail, i, u, w
    cdef i32 count = 0
    cdef cnp.ndarray[i32, ndim=1] label_arr = np.full(n, -1, dtype=np.int32)
    cdef i32[::1] label = label_arr
    cdef i32[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    for root in range(n):
        if label[root] >= 0:
            continue
        label[root] = count
        head = 0
        tail = 1
        queue[0] = root
        while head < tail:
            u = queue[head]
            head += 1
            for i in range(indptr[u], indptr[u + 1]):
                w = indices[i]
                if label[w] < 0:
                    label[w] = count
                    queue[tail] = w
                    tail += 1
        count += 1
    return label_arr.tolist()
