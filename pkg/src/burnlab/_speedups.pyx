# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled CSR kernels; signature-identical twin of `_pykernels`.

The adjacency handle here is a pair of contiguous numpy arrays
(indptr int64, indices int32); traversal state lives in flat scratch
arrays so the hot loops never touch Python objects.
"""

import numpy as np


def prepare(indptr, indices):
    """Backend-specific adjacency handle; here: typed contiguous arrays."""
    return (np.ascontiguousarray(indptr, dtype=np.int64),
            np.ascontiguousarray(indices, dtype=np.int32))


def bfs(adj, n, source):
    """Hop distances from source as an int32 array; -1 = unreachable."""
    cdef const long long[::1] ptr = adj[0]
    cdef const int[::1] idx = adj[1]
    cdef int nn = n
    dist_arr = np.full(nn, -1, dtype=np.int32)
    cdef int[::1] dist = dist_arr
    queue_arr = np.empty(nn, dtype=np.int32)
    cdef int[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, i
    cdef int v, w, d
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        d = dist[v] + 1
        for i in range(ptr[v], ptr[v + 1]):
            w = idx[i]
            if dist[w] < 0:
                dist[w] = d
                queue[tail] = w
                tail += 1
    return dist_arr


def ball_mark(adj, n, source, radius, marked, visited, epoch, through_marked):
    """Mark every vertex within `radius` hops of `source`; return how many
    flipped from unmarked to marked.

    through_marked=True measures true graph distance (already-marked
    vertices still conduct the traversal; `visited`/`epoch` deduplicate).
    through_marked=False restricts the traversal to currently-unmarked
    vertices, i.e. distance within the unmarked subgraph.
    """
    cdef const long long[::1] ptr = adj[0]
    cdef const int[::1] idx = adj[1]
    cdef unsigned char[::1] mk = marked
    cdef int[::1] vis = visited
    cdef int nn = n, src = source, rad = radius, ep = epoch
    cdef bint through = through_marked
    queue_arr = np.empty(nn, dtype=np.int32)
    cdef int[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, lvl_end, i
    cdef int v, w, d = 0
    cdef long newly = 0
    if through:
        vis[src] = ep
        if not mk[src]:
            mk[src] = 1
            newly += 1
        queue[tail] = src
        tail += 1
        while head < tail and d < rad:
            d += 1
            lvl_end = tail
            while head < lvl_end:
                v = queue[head]
                head += 1
                for i in range(ptr[v], ptr[v + 1]):
                    w = idx[i]
                    if vis[w] != ep:
                        vis[w] = ep
                        if not mk[w]:
                            mk[w] = 1
                            newly += 1
                        queue[tail] = w
                        tail += 1
    else:
        if mk[src]:
            return 0
        mk[src] = 1
        newly = 1
        queue[tail] = src
        tail += 1
        while head < tail and d < rad:
            d += 1
            lvl_end = tail
            while head < lvl_end:
                v = queue[head]
                head += 1
                for i in range(ptr[v], ptr[v + 1]):
                    w = idx[i]
                    if not mk[w]:
                        mk[w] = 1
                        newly += 1
                        queue[tail] = w
                        tail += 1
    return newly


def spread(adj, frontier, burned_at, round_no):
    """One burning round: fire moves from `frontier` (vertices that caught
    fire last round) to unburned neighbors, stamping them with `round_no`.
    Returns (new frontier, newly burned count)."""
    cdef const long long[::1] ptr = adj[0]
    cdef const int[::1] idx = adj[1]
    cdef int[::1] burned = burned_at
    cdef int rnd = round_no
    cdef Py_ssize_t i
    cdef int v, w
    nxt = []
    for v_obj in frontier:
        v = v_obj
        for i in range(ptr[v], ptr[v + 1]):
            w = idx[i]
            if burned[w] < 0:
                burned[w] = rnd
                nxt.append(w)
    return nxt, len(nxt)


def peel_rounds(out_adj, in_adj, n, removed, inf_round):
    """Round labels of the leaf-peeling process on the surviving subset.

    A surviving vertex with in-degree exactly 1 and out-degree 0 (both
    within the subset) is removed in round 1; labels propagate upward
    (label = 1 + max over surviving out-neighbors).  Vertices that never
    qualify (roots, junctions, members of directed cycles) get `inf_round`;
    vertices with removed[v] == 1 get 0.
    """
    cdef const long long[::1] optr = out_adj[0]
    cdef const int[::1] oidx = out_adj[1]
    cdef const long long[::1] iptr = in_adj[0]
    cdef const int[::1] iidx = in_adj[1]
    cdef const unsigned char[::1] dead = removed
    cdef int nn = n, inf = inf_round
    rnd_arr = np.zeros(nn, dtype=np.int32)
    cdef int[::1] rnd = rnd_arr
    pend_arr = np.zeros(nn, dtype=np.int32)
    cdef int[::1] pend = pend_arr
    indeg_arr = np.zeros(nn, dtype=np.int32)
    cdef int[::1] indeg = indeg_arr
    maxchild_arr = np.zeros(nn, dtype=np.int32)
    cdef int[::1] maxchild = maxchild_arr
    stack_arr = np.empty(nn, dtype=np.int32)
    cdef int[::1] stack = stack_arr
    cdef Py_ssize_t top = 0, i
    cdef int v, p, c, d, r
    for v in range(nn):
        if dead[v]:
            continue
        rnd[v] = inf
        c = 0
        for i in range(optr[v], optr[v + 1]):
            if not dead[oidx[i]]:
                c += 1
        pend[v] = c
        d = 0
        for i in range(iptr[v], iptr[v + 1]):
            if not dead[iidx[i]]:
                d += 1
        indeg[v] = d
        if c == 0:
            stack[top] = v
            top += 1
    while top > 0:
        top -= 1
        v = stack[top]
        if indeg[v] == 1 and maxchild[v] < inf:
            rnd[v] = maxchild[v] + 1
        r = rnd[v]
        for i in range(iptr[v], iptr[v + 1]):
            p = iidx[i]
            if not dead[p]:
                if r > maxchild[p]:
                    maxchild[p] = r
                pend[p] -= 1
                if pend[p] == 0:
                    stack[top] = p
                    top += 1
    return rnd_arr
