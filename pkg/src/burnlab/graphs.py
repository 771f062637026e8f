"""Graph containers and structural queries.

Two immutable containers back everything else: `UndirectedGraph` (simple,
CSR adjacency) and `DirectedTree` (an arc list whose underlying graph is
expected to be a tree; membership is checked by `classify_ditree`, not the
constructor, so invalid inputs can be classified rather than rejected at
construction).

Distances are hop counts; unreachable is reported as -1, never a large
sentinel number.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import GraphFormatError
from . import kernels


def _build_csr(n: int, pairs: Sequence[Tuple[int, int]]) -> Tuple[np.ndarray, np.ndarray]:
    """CSR arrays (indptr, indices) from (src, dst) pairs, neighbors sorted."""
    deg = np.zeros(n + 1, dtype=np.int64)
    for a, _ in pairs:
        deg[a + 1] += 1
    indptr = np.cumsum(deg).astype(np.int64)
    indices = np.empty(len(pairs), dtype=np.int32)
    cursor = indptr[:-1].copy()
    for a, b in pairs:
        indices[cursor[a]] = b
        cursor[a] += 1
    for v in range(n):
        lo, hi = indptr[v], indptr[v + 1]
        indices[lo:hi] = np.sort(indices[lo:hi])
    return indptr, indices


def _check_vertex_ids(n: int, pairs: Iterable[Tuple[int, int]]) -> None:
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex id out of range 0..{n - 1}: ({a}, {b})")
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}")


class UndirectedGraph:
    """Simple undirected graph with 0-based contiguous vertex ids.

    Immutable after construction; algorithms keep per-run overlay state
    (marks, burn rounds) in their own arrays instead of mutating the graph.
    """

    __slots__ = ("n", "m", "edges", "indptr", "indices", "_bicon", "_adj_handle")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]]):
        if n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        canon = []
        for a, b in edges:
            canon.append((min(a, b), max(a, b)))
        _check_vertex_ids(n, canon)
        canon.sort()
        for i in range(1, len(canon)):
            if canon[i] == canon[i - 1]:
                raise GraphFormatError(f"duplicate edge {canon[i]}")
        self.n = n
        self.m = len(canon)
        self.edges: Tuple[Tuple[int, int], ...] = tuple(canon)
        both = [(a, b) for a, b in canon] + [(b, a) for a, b in canon]
        self.indptr, self.indices = _build_csr(n, both)
        self._bicon = None
        self._adj_handle = None

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def adj(self):
        """Kernel-backend adjacency handle (cached)."""
        if self._adj_handle is None:
            self._adj_handle = kernels.prepare(self.indptr, self.indices)
        return self._adj_handle

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"


class DirectedTree:
    """Directed graph stored as out/in CSR, intended to hold oriented trees.

    The constructor only enforces basic sanity (ids in range, no self-loops,
    no repeated arcs); whether the arc set actually forms a polytree or an
    arborescence is the job of `classify_ditree`, which must be able to
    label bad inputs as invalid.
    """

    __slots__ = ("n", "m", "arcs", "out_indptr", "out_indices", "in_indptr",
                 "in_indices", "_cls", "_out_handle", "_in_handle",
                 "_parent", "_depth")

    def __init__(self, n: int, arcs: Iterable[Tuple[int, int]]):
        if n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        arcs = sorted(tuple(a) for a in arcs)
        _check_vertex_ids(n, arcs)
        for i in range(1, len(arcs)):
            if arcs[i] == arcs[i - 1]:
                raise GraphFormatError(f"duplicate arc {arcs[i]}")
        self.n = n
        self.m = len(arcs)
        self.arcs: Tuple[Tuple[int, int], ...] = tuple(arcs)
        self.out_indptr, self.out_indices = _build_csr(n, arcs)
        self.in_indptr, self.in_indices = _build_csr(n, [(b, a) for a, b in arcs])
        self._cls = None
        self._out_handle = None
        self._in_handle = None
        self._parent = None
        self._depth = None

    def out_neighbors(self, v: int) -> np.ndarray:
        return self.out_indices[self.out_indptr[v]:self.out_indptr[v + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        return self.in_indices[self.in_indptr[v]:self.in_indptr[v + 1]]

    def out_degree(self, v: int) -> int:
        return int(self.out_indptr[v + 1] - self.out_indptr[v])

    def in_degree(self, v: int) -> int:
        return int(self.in_indptr[v + 1] - self.in_indptr[v])

    @property
    def roots(self) -> List[int]:
        return [v for v in range(self.n) if self.in_degree(v) == 0]

    def out_adj(self):
        if self._out_handle is None:
            self._out_handle = kernels.prepare(self.out_indptr, self.out_indices)
        return self._out_handle

    def in_adj(self):
        if self._in_handle is None:
            self._in_handle = kernels.prepare(self.in_indptr, self.in_indices)
        return self._in_handle

    def parents(self) -> np.ndarray:
        """Parent array (-1 for roots); only meaningful on polytrees where
        in-degree <= 1, i.e. arborescences."""
        if self._parent is None:
            parent = np.full(self.n, -1, dtype=np.int32)
            for a, b in self.arcs:
                parent[b] = a
            self._parent = parent
        return self._parent

    def __repr__(self) -> str:
        return f"DirectedTree(n={self.n}, m={self.m})"


# ---- traversal ----------------------------------------------------------

def bfs_distances(g, source: int) -> np.ndarray:
    """Hop distances from `source`; directed graphs follow out-arcs.
    Unreachable vertices get -1."""
    if isinstance(g, DirectedTree):
        return kernels.bfs(g.out_adj(), g.n, source)
    return kernels.bfs(g.adj(), g.n, source)


def farthest_from(g, source: int) -> Tuple[int, int]:
    """(vertex, distance) of the farthest reachable vertex; ties break to
    the smallest id."""
    dist = bfs_distances(g, source)
    v = int(np.argmax(dist))  # argmax returns the first (= smallest id) max
    return v, int(dist[v])


def is_connected(g: UndirectedGraph) -> bool:
    return bool((bfs_distances(g, 0) >= 0).all())


# ---- articulation points and cactus recognition -------------------------

def _biconnect(g: UndirectedGraph):
    """Iterative DFS computing articulation flags and, per biconnected
    component, its (vertex count, edge count). Cached on the graph."""
    if g._bicon is not None:
        return g._bicon
    n = g.n
    indptr, indices = g.indptr, g.indices
    disc = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    cursor = indptr[:-1].astype(np.int64).copy()
    art = np.zeros(n, dtype=bool)
    comp_shapes: List[Tuple[int, int]] = []
    edge_stack: List[Tuple[int, int]] = []
    timer = 0

    def pop_component(u: int, v: int) -> None:
        comp = []
        while True:
            e = edge_stack.pop()
            comp.append(e)
            if e == (u, v):
                break
        verts = set()
        for a, b in comp:
            verts.add(a)
            verts.add(b)
        comp_shapes.append((len(verts), len(comp)))

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [root]
        while stack:
            v = stack[-1]
            if cursor[v] < indptr[v + 1]:
                w = int(indices[cursor[v]])
                cursor[v] += 1
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append(w)
                elif w != parent[v] and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    pop_component(u, v)
                    if parent[u] == -1:
                        root_children += 1
                    else:
                        art[u] = True
        if root_children >= 2:
            art[root] = True
    g._bicon = (art, comp_shapes)
    return g._bicon


def articulation_points(g: UndirectedGraph) -> List[int]:
    """Sorted cut vertices of g."""
    art, _ = _biconnect(g)
    return [v for v in range(g.n) if art[v]]


def is_cactus(g: UndirectedGraph) -> bool:
    """True iff g is connected and every edge lies on at most one simple
    cycle — equivalently, every biconnected component is a single edge or a
    single cycle."""
    if not is_connected(g):
        return False
    _, comp_shapes = _biconnect(g)
    for nv, ne in comp_shapes:
        if ne != 1 and ne != nv:
            return False
    return True


# ---- directed-tree classification and ancestors -------------------------

def classify_ditree(t: DirectedTree) -> str:
    """'arborescence' | 'polytree' | 'invalid'.

    Invalid when the underlying undirected graph has a cycle (including the
    two-arc a<->b case) or is disconnected.  An arborescence is reported as
    'arborescence', never as the weaker 'polytree'.
    """
    if t._cls is not None:
        return t._cls
    und = {(min(a, b), max(a, b)) for a, b in t.arcs}
    cls = "invalid"
    if len(und) == t.m and t.m == t.n - 1:
        g = UndirectedGraph(t.n, und) if t.n > 1 else UndirectedGraph(1, [])
        if is_connected(g):
            max_in = max((t.in_degree(v) for v in range(t.n)), default=0)
            cls = "arborescence" if max_in <= 1 else "polytree"
    t._cls = cls
    return cls


def lca(t: DirectedTree, u: int, v: int) -> Optional[int]:
    """Lowest common ancestor: the deepest vertex from which both u and v
    are reachable along arcs, or None.

    In a polytree the common ancestors of two vertices form a directed
    chain (two incomparable ones would close an undirected cycle), so the
    lowest is simply the common ancestor closest to u.
    """
    du = _ancestor_distances(t, u)
    dv = _ancestor_distances(t, v)
    best = None
    best_d = None
    for a, d in du.items():
        if a in dv and (best_d is None or d < best_d):
            best, best_d = a, d
    return best


def _ancestor_distances(t: DirectedTree, v: int) -> dict:
    """{ancestor: distance(ancestor -> v)} including v itself, via reverse
    BFS over in-arcs."""
    out = {v: 0}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for p in t.in_neighbors(x):
                p = int(p)
                if p not in out:
                    out[p] = out[x] + 1
                    nxt.append(p)
        frontier = nxt
    return out


# ---- text serialization --------------------------------------------------

def graph_to_text(g) -> str:
    """Serialize to the interchange format: header ``u|d n m`` then one
    ``a b`` line per edge/arc, 0-indexed, in canonical sorted order."""
    if isinstance(g, DirectedTree):
        head = f"d {g.n} {g.m}"
        lines = [f"{a} {b}" for a, b in g.arcs]
    else:
        head = f"u {g.n} {g.m}"
        lines = [f"{a} {b}" for a, b in g.edges]
    return "\n".join([head] + lines) + "\n"


def graph_from_text(text: str):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty graph text")
    head = lines[0].split()
    if len(head) != 3 or head[0] not in ("u", "d"):
        raise GraphFormatError(f"bad header: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise GraphFormatError(f"bad header counts: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, file has {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {ln!r}") from exc
    if head[0] == "d":
        return DirectedTree(n, pairs)
    return UndirectedGraph(n, pairs)


def save_graph(g, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(graph_to_text(g))


def load_graph(path):
    with open(path, "r", encoding="ascii") as fh:
        return graph_from_text(fh.read())
