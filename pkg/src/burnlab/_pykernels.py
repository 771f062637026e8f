"""Pure-Python CSR kernels.

Fallback twin of the compiled `_speedups` extension: identical signatures,
list-based internals.  `prepare` converts CSR numpy arrays to plain lists
once per graph so the traversal loops stay free of numpy scalar boxing.
"""

from __future__ import annotations

import numpy as np


def prepare(indptr, indices):
    """Backend-specific adjacency handle; here: (indptr, indices) as lists."""
    return (np.asarray(indptr).tolist(), np.asarray(indices).tolist())


def bfs(adj, n, source):
    """Hop distances from source as an int32 array; -1 = unreachable."""
    ptr, idx = adj
    dist = [-1] * n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for i in range(ptr[v], ptr[v + 1]):
                w = idx[i]
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return np.array(dist, dtype=np.int32)


def ball_mark(adj, n, source, radius, marked, visited, epoch, through_marked):
    """Mark every vertex within `radius` hops of `source`; return how many
    flipped from unmarked to marked.

    through_marked=True measures true graph distance (already-marked
    vertices still conduct the traversal; `visited`/`epoch` deduplicate).
    through_marked=False restricts the traversal to currently-unmarked
    vertices, i.e. distance within the unmarked subgraph, and needs no
    epoch scratch.
    """
    ptr, idx = adj
    newly = 0
    if through_marked:
        visited[source] = epoch
        if not marked[source]:
            marked[source] = 1
            newly += 1
        frontier = [source]
        d = 0
        while frontier and d < radius:
            d += 1
            nxt = []
            for v in frontier:
                for i in range(ptr[v], ptr[v + 1]):
                    w = idx[i]
                    if visited[w] != epoch:
                        visited[w] = epoch
                        if not marked[w]:
                            marked[w] = 1
                            newly += 1
                        nxt.append(w)
            frontier = nxt
    else:
        if marked[source]:
            return 0
        marked[source] = 1
        newly = 1
        frontier = [source]
        d = 0
        while frontier and d < radius:
            d += 1
            nxt = []
            for v in frontier:
                for i in range(ptr[v], ptr[v + 1]):
                    w = idx[i]
                    if not marked[w]:
                        marked[w] = 1
                        newly += 1
                        nxt.append(w)
            frontier = nxt
    return newly


def spread(adj, frontier, burned_at, round_no):
    """One burning round: fire moves from `frontier` (vertices that caught
    fire last round) to unburned neighbors, stamping them with `round_no`.
    Returns (new frontier, newly burned count)."""
    ptr, idx = adj
    nxt = []
    for v in frontier:
        for i in range(ptr[v], ptr[v + 1]):
            w = idx[i]
            if burned_at[w] < 0:
                burned_at[w] = round_no
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
    optr, oidx = out_adj
    iptr, iidx = in_adj
    dead = removed.tolist() if not isinstance(removed, list) else removed
    rnd = [0] * n
    pend = [0] * n
    indeg = [0] * n
    maxchild = [0] * n
    stack = []
    for v in range(n):
        if dead[v]:
            continue
        rnd[v] = inf_round
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
            stack.append(v)
    while stack:
        v = stack.pop()
        if indeg[v] == 1 and maxchild[v] < inf_round:
            rnd[v] = maxchild[v] + 1
        # else: stays inf_round (never peeled)
        r = rnd[v]
        for i in range(iptr[v], iptr[v + 1]):
            p = iidx[i]
            if not dead[p]:
                if r > maxchild[p]:
                    maxchild[p] = r
                pend[p] -= 1
                if pend[p] == 0:
                    stack.append(p)
    return np.array(rnd, dtype=np.int32)
