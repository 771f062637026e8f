"""2.75-approximation for burning connected cacti.

Per guessed burning number b, the procedure roots the graph at a cut
vertex and repeatedly looks at the farthest still-unmarked vertex f.  If
the shortest path from f toward the root passes through a cut vertex at
distance in [ceil(0.25b), ceil(1.75b)] from f, that cut vertex becomes a
large-radius center (marking its ceil(1.75b)-ball, at most ceil(0.25b)
such picks); otherwise f itself becomes a center with a (2b-2)-ball, at
most ceil(0.75b) picks.  Running out of both budgets certifies the guess
too small.  The driver walks b upward and assembles the first successful
center sets into a schedule of at most ceil(2.75b) rounds.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

from . import kernels
from .engine import (BadGuess, BurningSchedule, CenterGroup, CenterSets,
                     assemble, ceil_range)
from .errors import GraphClassError
from .graphs import (UndirectedGraph, articulation_points, bfs_distances,
                     is_cactus)
from .oracles import cycle_formula


def articulation_on_path(g: UndirectedGraph, f: int, r: int, b: int,
                         dist_r: Optional[np.ndarray] = None,
                         exclude=()) -> Optional[int]:
    """Deepest cut vertex on the shortest f->r path whose distance from f
    lies in [ceil(0.25b), ceil(1.75b)], or None.

    The path walks the BFS distance gradient toward r, breaking ties to
    the smallest neighbor id, so the result is deterministic.  Vertices
    in `exclude` never qualify (the guess procedure passes the centers it
    has already committed, since a schedule cannot ignite one twice).
    """
    if f == r:
        return None
    if dist_r is None:
        dist_r = bfs_distances(g, r)
    art, _ = _art_flags(g)
    lo = ceil_range(b, "0.25")
    hi = ceil_range(b, "1.75")
    best = None
    cur = f
    steps = 0
    while cur != r and steps < hi:
        want = int(dist_r[cur]) - 1
        nxt = -1
        for w in g.neighbors(cur):
            w = int(w)
            if dist_r[w] == want and (nxt == -1 or w < nxt):
                nxt = w
        cur = nxt
        steps += 1
        if steps >= lo and art[cur] and cur not in exclude:
            best = cur  # keep the farthest qualifying cut vertex
    return best


def _art_flags(g: UndirectedGraph):
    from .graphs import _biconnect

    return _biconnect(g)


def _ball_set(g: UndirectedGraph, center: int, radius: int,
              skip: np.ndarray) -> set:
    """{v unmarked: d(center, v) <= radius} with true graph distances."""
    dist = bfs_distances(g, center)
    hit = (dist >= 0) & (dist <= radius) & (skip == 0)
    return set(int(v) for v in np.flatnonzero(hit))


def burn_guess_cactus(g: UndirectedGraph, b: int, root: Optional[int] = None,
                      verify_inclusion: bool = False):
    """One guess: CenterSets on success, BadGuess on exhausted budgets.

    Requires at least one articulation point (single cycles and other
    2-connected cacti are handled by the driver).  With
    `verify_inclusion`, every cut-vertex pick asserts that the (2b-2)-ball
    of f is contained in the ceil(1.75b)-ball of the chosen cut vertex,
    restricted to currently-unmarked vertices.
    """
    arts = articulation_points(g)
    if not arts:
        raise GraphClassError("guess procedure needs an articulation point")
    n = g.n
    r = arts[0] if root is None else root
    dist_r = bfs_distances(g, r)
    # vertices by falling distance from the root; ties to smaller id
    order = np.lexsort((np.arange(n), -dist_r))
    marked = np.zeros(n, dtype=np.uint8)
    visited = np.zeros(n, dtype=np.int32)
    adj = g.adj()

    budget_cut = ceil_range(b, "0.25")
    budget_far = ceil_range(b, "0.75")
    radius_cut = ceil_range(b, "1.75")
    radius_far = max(2 * b - 2, 0)
    cut_centers: List[int] = []
    far_centers: List[int] = []
    chosen: set = set()
    remaining = n
    ptr = 0
    epoch = 0
    while remaining > 0:
        if len(cut_centers) + len(far_centers) >= b:
            # A (b+1)-th pick would give b+1 focus vertices pairwise more
            # than 2b-2 apart, so b rounds cannot cover them; same verdict
            # as running dry.  Also keeps every success assemblable within
            # ceil(2.75b) rounds.
            tag = "both_exhausted" if budget_cut == 0 else "budget2_exhausted"
            return BadGuess(tag)
        while marked[order[ptr]]:
            ptr += 1
        f = int(order[ptr])
        v_k = (articulation_on_path(g, f, r, b, dist_r, exclude=chosen)
               if f != r else None)
        epoch += 1
        if v_k is not None and budget_cut > 0:
            if verify_inclusion:
                far_ball = _ball_set(g, f, radius_far, marked)
                cut_ball = _ball_set(g, v_k, radius_cut, marked)
                stray = far_ball - cut_ball
                if stray:
                    raise AssertionError(
                        f"ball inclusion violated at b={b}: f={f} v_k={v_k} "
                        f"stray={sorted(stray)[:5]}")
            budget_cut -= 1
            cut_centers.append(v_k)
            chosen.add(v_k)
            remaining -= kernels.ball_mark(adj, n, v_k, radius_cut, marked,
                                           visited, epoch, True)
        elif budget_far > 0:
            budget_far -= 1
            far_centers.append(f)
            chosen.add(f)
            remaining -= kernels.ball_mark(adj, n, f, radius_far, marked,
                                           visited, epoch, True)
        else:
            tag = "both_exhausted" if budget_cut == 0 else "budget2_exhausted"
            return BadGuess(tag)
    return CenterSets((
        CenterGroup("cut", tuple(cut_centers), radius_cut),
        CenterGroup("far", tuple(far_centers), radius_far),
    ))


def _cycle_order(g: UndirectedGraph) -> List[int]:
    """Vertices of a cycle graph in traversal order starting at 0."""
    order = [0]
    prev = -1
    cur = 0
    for _ in range(g.n - 1):
        nbrs = [int(w) for w in g.neighbors(cur) if w != prev]
        nxt = min(nbrs)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _burn_cycle(g: UndirectedGraph) -> Tuple[BurningSchedule, int]:
    """Optimal burning of a bare cycle: ceil(sqrt(n)) sources placed as
    consecutive arcs of sizes 2r+1 around the ring."""
    n = g.n
    b = cycle_formula(n)
    order = _cycle_order(g)
    groups = []
    pos = 0
    for i in range(b):
        if pos >= n:
            break
        radius = b - 1 - i
        center = order[(pos + radius) % n]
        groups.append(CenterGroup(f"arc{i}", (center,), radius))
        pos += 2 * radius + 1
    return assemble(g, CenterSets(tuple(groups)), b), b


def approx_cactus(g: UndirectedGraph,
                  verify_inclusion: bool = False) -> Tuple[BurningSchedule, int]:
    """(schedule, b_star): schedule of length <= ceil(2.75 * b_star).

    b_star is the first guess the procedure accepts; every smaller guess
    ended in a budget-exhaustion certificate, so b_star never exceeds the
    true burning number.
    """
    if not isinstance(g, UndirectedGraph) or not is_cactus(g):
        raise GraphClassError("input is not a connected cactus")
    n = g.n
    if not articulation_points(g):
        # 2-connected or trivial: single vertex, single edge, or one cycle
        if n == 1:
            return BurningSchedule((0,)), 1
        if n == 2:
            return BurningSchedule((0, 1)), 2
        return _burn_cycle(g)
    for b in range(1, n + 1):
        outcome = burn_guess_cactus(g, b, verify_inclusion=verify_inclusion)
        if isinstance(outcome, BadGuess):
            continue
        length = ceil_range(b, "2.75")
        return assemble(g, outcome, length), b
    raise GraphClassError("no guess succeeded")  # unreachable on valid input
