"""Burning approximations for directed trees.

Fire spreads along out-arcs only.  The common engine is *cutting*: one
round deletes every vertex whose out-degree is 0 and in-degree is 1, so
k rounds shave the deepest k levels off every chain (`b_cutting`).

Three drivers build on it:

* `approx_polytree` — guesses b, extracts sink centers from the
  (b-1)-cut tree sweep by sweep, and burns each with radius b.  At most
  b chain centers plus b junction centers may appear, giving schedules
  within 3x the optimum (2x when the input is an arborescence, which
  never produces junction centers).
* `approx_arborescence` — single-rooted refinement: centers from
  destructive cutting (`centers_singlerooted`) are pairwise merged at
  close common ancestors (`merge_and_burn`) against a shrinking pool of
  burning ranges {0..ceil(1.905b)}, giving schedules within
  ceil(1.905 b) + 1 rounds.
* `s_certificate` — a diagnostic count over the middle thirds of the
  unmerged center paths; never used for control flow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import kernels
from .engine import (BadGuess, BurningSchedule, CenterGroup, CenterSets,
                     RangeBudget, assemble, ceil_range)
from .errors import GraphClassError
from .graphs import DirectedTree, classify_ditree


def _alive_degree(indptr: np.ndarray, indices: np.ndarray,
                  alive: np.ndarray) -> np.ndarray:
    """Per-vertex count of alive CSR neighbors; dead rows report 0."""
    n = indptr.shape[0] - 1
    deg = np.zeros(n, dtype=np.int64)
    if indices.shape[0] == 0:
        return deg
    # reduceat over only the nonempty rows: their starts are strictly
    # increasing, and empty rows between or after them contribute nothing.
    nonempty = indptr[:-1] < indptr[1:]
    contrib = alive[indices].astype(np.int64)
    deg[nonempty] = np.add.reduceat(contrib, indptr[:-1][nonempty])
    deg[alive == 0] = 0
    return deg


@dataclass
class CutTree:
    """A surviving-vertex mask over a fixed directed tree."""

    tree: DirectedTree
    alive: np.ndarray  # uint8, 1 = surviving

    @classmethod
    def full(cls, t: DirectedTree) -> "CutTree":
        return cls(t, np.ones(t.n, dtype=np.uint8))

    def __len__(self) -> int:
        return int(self.alive.sum())

    def survivors(self) -> List[int]:
        return [int(v) for v in np.flatnonzero(self.alive)]

    def out_degrees(self) -> np.ndarray:
        t = self.tree
        return _alive_degree(t.out_indptr, t.out_indices, self.alive)

    def in_degrees(self) -> np.ndarray:
        t = self.tree
        return _alive_degree(t.in_indptr, t.in_indices, self.alive)


def b_cutting(x: Union[DirectedTree, CutTree], k: int) -> CutTree:
    """Apply k cutting rounds; k <= 0 is the identity.

    A round simultaneously deletes every surviving vertex with current
    out-degree 0 and in-degree 1.  Rounds compose: cutting a rounds then
    c rounds equals cutting a+c rounds in one call.
    """
    ct = CutTree.full(x) if isinstance(x, DirectedTree) else x
    if k <= 0:
        return CutTree(ct.tree, ct.alive.copy())
    t = ct.tree
    removed = (ct.alive == 0).astype(np.uint8)
    rounds = kernels.peel_rounds(t.out_adj(), t.in_adj(), t.n, removed,
                                 t.n + 1)
    # at most n rounds ever peel anything, so clamp k: vertices labelled
    # n+1 (never peel) must survive arbitrarily large k
    alive = ((ct.alive != 0) & (rounds > min(k, t.n))).astype(np.uint8)
    return CutTree(t, alive)


def _require(t: DirectedTree, wanted: Tuple[str, ...], what: str) -> str:
    kind = classify_ditree(t)
    if kind not in wanted:
        raise GraphClassError(f"{what} needs a {' or '.join(wanted)}, "
                              f"got {kind}")
    return kind


def centers_multirooted(t: DirectedTree, b: int):
    """One guess for a polytree: CenterSets on success, else BadGuess.

    Each sweep cuts b-1 rounds off the working tree, then walks the cut
    tree's sinks in ascending id.  A sink with at most one surviving
    in-arc is a chain center, otherwise a junction center; either way
    its out-ball of radius b (within the working tree) is deleted before
    the next sink is looked at, and sinks swallowed by an earlier ball
    are skipped.  More than b centers of one kind certify the guess
    short.
    """
    _require(t, ("arborescence", "polytree"), "center extraction")
    n = t.n
    work = CutTree.full(t)
    chain: List[int] = []
    junction: List[int] = []
    visited = np.zeros(n, dtype=np.int32)
    out_handle = t.out_adj()
    sweeps = 0
    while len(work) > 0:
        sweeps += 1
        if sweeps > 2 * b + 2:  # each sweep grows a center list
            raise AssertionError("center sweep failed to terminate")
        cut = b_cutting(work, b - 1)
        in_deg = cut.in_degrees()
        sinks = np.flatnonzero((cut.alive != 0) & (cut.out_degrees() == 0))
        removed = (work.alive == 0).astype(np.uint8)
        for v in sinks:
            v = int(v)
            if removed[v]:
                continue
            if in_deg[v] <= 1:
                chain.append(v)
                if len(chain) > b:
                    return BadGuess("chain_centers_overflow")
            else:
                junction.append(v)
                if len(junction) > b:
                    return BadGuess("junction_centers_overflow")
            kernels.ball_mark(out_handle, n, v, b, removed, visited, 0, False)
        work = CutTree(t, (removed == 0).astype(np.uint8))
    return CenterSets((
        CenterGroup("junction", tuple(junction), b),
        CenterGroup("chain", tuple(chain), b),
    ))


def approx_polytree(t: DirectedTree) -> Tuple[BurningSchedule, int]:
    """Burn a polytree within 3x the optimal number of rounds.

    Linear search over guesses; the first successful guess b yields a
    schedule of at most (number of centers) + b <= 3b rounds.  On
    arborescences the junction list stays empty, so the bound tightens
    to 2b.
    """
    _require(t, ("arborescence", "polytree"), "polytree burning")
    for b in range(1, t.n + 1):
        outcome = centers_multirooted(t, b)
        if isinstance(outcome, BadGuess):
            continue
        length = outcome.center_count() + b
        return assemble(t, outcome, length), b
    raise GraphClassError("no guess succeeded")  # unreachable on valid input


def centers_singlerooted(t: DirectedTree, b: int,
                         abort_above: Optional[int] = None) -> List[int]:
    """Arborescence center list via destructive cutting.

    Repeatedly: cut b-1 rounds off the working tree (deletions are
    permanent), then collect and delete every sink with at most one
    in-arc, ascending.  Every collected center rooted a subtree of
    height <= b-1 at collection time; the subtrees partition the
    vertices.  With `abort_above` the scan stops early once the list
    exceeds that many centers (the caller is about to reject anyway).
    """
    _require(t, ("arborescence",), "single-rooted center extraction")
    work = CutTree.full(t)
    out: List[int] = []
    while len(work) > 0:
        work = b_cutting(work, b - 1)
        sinks = np.flatnonzero((work.alive != 0) & (work.out_degrees() == 0)
                               & (work.in_degrees() <= 1))
        out.extend(int(v) for v in sinks)
        if abort_above is not None and len(out) > abort_above:
            return out
        alive = work.alive.copy()
        alive[sinks] = 0
        work = CutTree(t, alive)
    return out


def lca_length(t: DirectedTree, u: int, v: int) -> Union[int, float]:
    """Covering radius from the lowest common ancestor of u and v.

    Returns max(d(a,u), d(a,v)) for the deepest common ancestor a, or
    infinity if the two vertices share no ancestor.
    """
    parents = t.parents()
    up_u = {}
    x, d = u, 0
    while x != -1:
        up_u[x] = d
        x = int(parents[x])
        d += 1
    x, d = v, 0
    while x != -1:
        if x in up_u:
            return max(up_u[x], d)
        x = int(parents[x])
        d += 1
    return math.inf


def merge_and_burn(t: DirectedTree, b: int, centers: Sequence[int],
                   pairs: Optional[List[Tuple[int, int, int]]] = None):
    """Pair up close centers at their common ancestors, then price the rest.

    Works against a pool of burning ranges {0..ceil(1.905b)}.  Scanning
    centers in emission order, the first still-standing partner whose
    common ancestor covers both within ceil(0.81b) hops merges with the
    current center: the pair leaves the list, the ancestor joins the
    merged group, and the smallest pool range >= ceil(1.81b) is spent.
    An ancestor that is itself a standing center, or already burns for
    an earlier group, disqualifies the pair.  A center with no such
    partner takes the smallest range >= b; an empty pool there rejects
    the guess.

    When `pairs` is a list, every merge appends (u, v, ancestor) to it,
    which lets callers audit the covering radii of the merged group.
    """
    _require(t, ("arborescence",), "merging")
    budget = RangeBudget(ceil_range(b, "1.905"))
    near = ceil_range(b, "0.81")
    merge_radius = ceil_range(b, "1.81")
    order = [int(c) for c in centers]
    standing = [True] * len(order)
    merged: List[int] = []
    solo: List[int] = []
    taken = set(order)  # vertices still owed a burning range
    for i, u in enumerate(order):
        if not standing[i]:
            continue
        partner = None
        if budget.peek_min_at_least(merge_radius) is not None:
            for j in range(i + 1, len(order)):
                if not standing[j]:
                    continue
                v = order[j]
                if lca_length(t, u, v) > near:
                    continue
                a = _lca_vertex(t, u, v)
                if a in taken and a not in (u, v):
                    continue  # ancestor already spoken for
                partner = j
                break
        if partner is not None:
            v = order[partner]
            standing[i] = standing[partner] = False
            taken.discard(u)
            taken.discard(v)
            a = _lca_vertex(t, u, v)
            taken.add(a)
            merged.append(a)
            if pairs is not None:
                pairs.append((u, v, a))
            budget.take_min_at_least(merge_radius)
        else:
            if budget.take_min_at_least(b) is None:
                return BadGuess("budget_exhausted")
            standing[i] = False
            solo.append(u)
    return CenterSets((
        CenterGroup("merged", tuple(merged), merge_radius),
        CenterGroup("solo", tuple(solo), b),
    ))


def _lca_vertex(t: DirectedTree, u: int, v: int) -> int:
    parents = t.parents()
    seen = set()
    x = u
    while x != -1:
        seen.add(x)
        x = int(parents[x])
    x = v
    while x != -1:
        if x in seen:
            return x
        x = int(parents[x])
    raise GraphClassError(f"vertices {u} and {v} share no ancestor")


def burn_guess_arborescence(t: DirectedTree, b: int):
    """One guess for an arborescence: CenterSets or BadGuess."""
    centers = centers_singlerooted(t, b, abort_above=b)
    if len(centers) > b:
        return BadGuess("centers_overflow")
    return merge_and_burn(t, b, centers)


def approx_arborescence(t: DirectedTree) -> Tuple[BurningSchedule, int]:
    """Burn an arborescence within ceil(1.905 b(T)) + 1 rounds."""
    _require(t, ("arborescence",), "arborescence burning")
    for b in range(1, t.n + 1):
        outcome = burn_guess_arborescence(t, b)
        if isinstance(outcome, BadGuess):
            continue
        length = ceil_range(b, "1.905") + 1
        return assemble(t, outcome, length), b
    raise GraphClassError("no guess succeeded")  # unreachable on valid input


@dataclass(frozen=True)
class SCertificate:
    """Middle-subpath count against its closed-form ceiling."""

    b: int
    s_b: int
    s_size: int


def _heights(t: DirectedTree) -> np.ndarray:
    removed = np.zeros(t.n, dtype=np.uint8)
    rounds = kernels.peel_rounds(t.out_adj(), t.in_adj(), t.n, removed,
                                 t.n + 1)
    # With in-degree <= 1 everywhere, no vertex survives peeling, and
    # the deletion round is exactly 1 + subtree height.
    return rounds - 1


def s_certificate(t: DirectedTree, b: int,
                  unmerged_centers: Sequence[int]) -> SCertificate:
    """Diagnostic count of center-path middles (never drives control flow).

    Each unmerged center contributes its longest descending path, at
    most b vertices (the last subtree may run short); ceil(0.19b)
    vertices are stripped from both ends and the survivors pooled.  The
    pool size is reported next to b(b+1)/2, the largest it can reach
    when the guess is honest.
    """
    _require(t, ("arborescence",), "certificate")
    heights = _heights(t)
    strip = ceil_range(b, "0.19")
    pooled = set()
    for c in unmerged_centers:
        path = [int(c)]
        while len(path) < b:
            nxt = -1
            best = -1
            for w in t.out_neighbors(path[-1]):
                w = int(w)
                if heights[w] > best:
                    best = int(heights[w])
                    nxt = w
            if nxt < 0:
                break
            path.append(nxt)
        pooled.update(path[strip:len(path) - strip])
    return SCertificate(b=b, s_b=b * (b + 1) // 2, s_size=len(pooled))
