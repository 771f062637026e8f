"""Reference procedures the approximation drivers are judged against.

`exact_burning_number` is an exhaustive iterative-deepening search over
schedule lengths L = 1, 2, ...; within one L it enumerates sources
position by position over bitmask state.  Candidates that add no new
coverage stay admissible: a schedule must always place exactly L
sources, and some graphs (the 5-vertex star at L=2, say) only burn when
a late source rides along purely to pad the length that grants earlier
sources their radius.  Pruning is limited to bounds that cannot lose a
witness: future-union coverage, an optimistic per-position coverage
budget, and spacing deadlines.

`baseline_3approx` is the simpler guess-and-mark scheme whose centers are
pairwise farther than 2b-2 apart, giving schedules of length <= 3b.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from . import kernels
from .engine import BadGuess, BurningSchedule, CenterGroup, CenterSets, assemble
from .errors import GraphClassError, OracleBudgetError
from .graphs import DirectedTree, UndirectedGraph, bfs_distances, is_connected

DEFAULT_SIZE_CAP = 14
DEFAULT_EXPANSION_CAP = 5_000_000


def _oracle_size_cap() -> int:
    raw = os.environ.get("BURNLAB_ORACLE_CAP", "").strip()
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise OracleBudgetError(f"bad BURNLAB_ORACLE_CAP value {raw!r}") from exc
    return DEFAULT_SIZE_CAP


@dataclass(frozen=True)
class ExactResult:
    b: int
    witness: BurningSchedule


def exact_burning_number(g, size_cap: Optional[int] = None,
                         expansion_cap: int = DEFAULT_EXPANSION_CAP) -> ExactResult:
    """Exact burning number with a validating witness schedule.

    Exhaustive over lengths, so no length-(b-1) schedule exists.  Refuses
    graphs above the size cap (default 14, overridable via the
    BURNLAB_ORACLE_CAP environment variable or the `size_cap` argument);
    raises OracleBudgetError when the node-expansion budget runs out.
    """
    n = g.n
    cap = size_cap if size_cap is not None else _oracle_size_cap()
    if n > cap:
        raise OracleBudgetError(
            f"graph has {n} vertices, exact oracle capped at {cap} "
            "(raise BURNLAB_ORACLE_CAP to override)")
    if isinstance(g, UndirectedGraph) and not is_connected(g):
        raise GraphClassError("exact oracle requires a connected graph")

    # distance matrix and per-radius ball bitmasks
    dist = [bfs_distances(g, v).tolist() for v in range(n)]
    full = (1 << n) - 1
    ball = [[0] * n for _ in range(n)]  # ball[v][r]
    for v in range(n):
        for u in range(n):
            d = dist[v][u]
            if d >= 0:
                for r in range(d, n):
                    ball[v][r] |= 1 << u
    any_ball = [0] * n      # union over sources of ball[.][r]
    best_gain = [0] * n     # max ball size at radius r
    for r in range(n):
        acc = 0
        big = 0
        for v in range(n):
            acc |= ball[v][r]
            size = bin(ball[v][r]).count("1")
            if size > big:
                big = size
        any_ball[r] = acc
        best_gain[r] = big

    expansions = 0

    def search(L: int) -> Optional[List[int]]:
        nonlocal expansions
        radii = [L - 1 - i for i in range(L)]
        # remaining_gain[i] = sum of best-case coverage of positions i..L-1
        remaining_gain = [0] * (L + 1)
        for i in range(L - 1, -1, -1):
            remaining_gain[i] = remaining_gain[i + 1] + best_gain[radii[i]]
        picks: List[int] = []

        def step(i: int, covered: int, used: int, deadline: List[int]) -> bool:
            nonlocal expansions
            if i == L:
                return covered == full
            expansions += 1
            if expansions > expansion_cap:
                raise OracleBudgetError(
                    f"exact search exceeded {expansion_cap} node expansions")
            r = radii[i]
            if covered | any_ball[r] != full:
                return False
            if bin(full & ~covered).count("1") > remaining_gain[i]:
                return False
            candidates = []
            for v in range(n):
                if used >> v & 1 or deadline[v] < i:
                    continue
                gain = ball[v][r] & ~covered
                # gain 0 stays in: length-padding sources are sometimes
                # mandatory (see module docstring); they sort last.
                candidates.append((-bin(gain).count("1"), v))
            candidates.sort()
            for _, v in candidates:
                nd = deadline
                changed = False
                for w in range(n):
                    d = dist[v][w]
                    if d >= 0 and i + d < nd[w]:
                        if not changed:
                            nd = deadline.copy()
                            changed = True
                        nd[w] = i + d
                picks.append(v)
                if step(i + 1, covered | ball[v][r], used | 1 << v, nd):
                    return True
                picks.pop()
            return False

        if step(0, 0, 0, [n + 1] * n):
            return picks
        return None

    for L in range(1, n + 1):
        found = search(L)
        if found is not None:
            return ExactResult(b=L, witness=BurningSchedule(tuple(found)))
    raise OracleBudgetError(f"no valid schedule up to length {n}")  # unreachable


def cycle_formula(n: int) -> int:
    """Burning number of the n-cycle (and n-path): ceil(sqrt(n))."""
    if n < 1:
        raise ValueError("n must be positive")
    s = math.isqrt(n)
    return s if s * s == n else s + 1


# ---- prior 3-approximation ----------------------------------------------

def baseline_guess(g: UndirectedGraph, b: int):
    """One guess of the simple scheme: repeatedly take the smallest-id
    unmarked vertex as a center and mark its (2b-2)-ball; more than b
    centers certifies the guess wrong (the centers are pairwise more than
    2b-2 apart)."""
    n = g.n
    radius = max(2 * b - 2, 0)
    marked = np.zeros(n, dtype=np.uint8)
    visited = np.zeros(n, dtype=np.int32)
    adj = g.adj()
    centers: List[int] = []
    remaining = n
    cursor = 0
    epoch = 0
    while remaining > 0:
        while marked[cursor]:
            cursor += 1
        if len(centers) == b:
            return BadGuess("center_overflow")
        epoch += 1
        newly = kernels.ball_mark(adj, n, cursor, radius, marked, visited, epoch, True)
        remaining -= newly
        centers.append(cursor)
    return CenterSets((CenterGroup("centers", tuple(centers), radius),))


def baseline_3approx(g: UndirectedGraph):
    """(schedule, b_star) for the guess-and-mark baseline; schedule length
    is at most 3*b_star - 2."""
    if not isinstance(g, UndirectedGraph) or not is_connected(g):
        raise GraphClassError("baseline needs a connected undirected graph")
    for b in range(1, g.n + 1):
        outcome = baseline_guess(g, b)
        if isinstance(outcome, BadGuess):
            continue
        radius = max(2 * b - 2, 0)
        length = radius + outcome.center_count()
        return assemble(g, outcome, length), b
    raise GraphClassError("no guess succeeded")  # unreachable on valid input
