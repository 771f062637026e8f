"""Seeded random instances for the three supported graph classes.

All randomness flows through `SplitMix64`, a self-contained 64-bit
mix-function generator (state advances by the golden-ratio increment
0x9E3779B97F4A7C15; output is the two-round xor-shift-multiply finalizer
with constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).  The point is
not statistical strength but byte-identical fixtures for one seed on any
platform or runtime, which the benchmark determinism check relies on.

Construction recipes:

* trees — each new vertex attaches below a uniformly random earlier
  vertex, optionally restricted to vertices with spare out-degree;
* cacti — an attachment tree plus chords: an attempt walks up from a
  random vertex over not-yet-cycled tree edges and, after covering at
  least two, closes the walked path into a cycle (each tree edge joins
  at most one cycle, so blocks stay either bridges or simple cycles);
* polytrees — an attachment tree with every edge flipped by a coin,
  re-rooting one leaf if the coin happens to produce a single root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import GraphClassError
from .graphs import DirectedTree, UndirectedGraph, classify_ditree

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator; documented in the module docstring."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, bound: int) -> int:
        # Modulo bias is ~bound/2^64, far below anything observable here.
        return self.next_u64() % bound


KINDS = ("cactus", "polytree", "arborescence")

# Chord-attempt rate giving cactus edge densities around |E|/|V| = 1.08,
# the ballpark the benchmark tables aim for.
DEFAULT_CYCLE_FRACTION = 0.12


@dataclass(frozen=True)
class GenSpec:
    """One reproducible instance: class, size, seed and shape knobs."""

    kind: str
    n: int
    seed: int
    cycle_fraction: float = DEFAULT_CYCLE_FRACTION
    max_out_degree: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown graph class {self.kind!r}")
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if not 0.0 <= self.cycle_fraction <= 0.5:
            raise ValueError("cycle_fraction outside [0, 0.5]")
        if self.max_out_degree is not None and self.max_out_degree < 1:
            raise ValueError("max_out_degree must be at least 1")


def fixture_relpath(spec: GenSpec) -> str:
    """Canonical location under a fixtures root."""
    return f"{spec.kind}/n{spec.n}_s{spec.seed}.graph"


def _attachment_parents(n: int, rng: SplitMix64,
                        max_out: Optional[int]) -> List[int]:
    """parents[v] for v >= 1; vertex 0 is the root."""
    parents = [0] * n
    if max_out is None:
        for v in range(1, n):
            parents[v] = rng.randrange(v)
        return parents
    # Swap-remove pool of vertices that may still take children.
    open_slots = [0]
    used = [0] * n
    for v in range(1, n):
        if not open_slots:
            raise GraphClassError(
                f"max_out_degree={max_out} cannot host {n} vertices")
        i = rng.randrange(len(open_slots))
        p = open_slots[i]
        parents[v] = p
        used[p] += 1
        if used[p] >= max_out:
            open_slots[i] = open_slots[-1]
            open_slots.pop()
        open_slots.append(v)
    return parents


def random_arborescence(spec: GenSpec) -> DirectedTree:
    if spec.kind != "arborescence":
        raise ValueError(f"spec is for {spec.kind!r}")
    rng = SplitMix64(spec.seed)
    parents = _attachment_parents(spec.n, rng, spec.max_out_degree)
    arcs = [(parents[v], v) for v in range(1, spec.n)]
    return DirectedTree(spec.n, arcs)


def random_polytree(spec: GenSpec) -> DirectedTree:
    if spec.kind != "polytree":
        raise ValueError(f"spec is for {spec.kind!r}")
    rng = SplitMix64(spec.seed)
    parents = _attachment_parents(spec.n, rng, spec.max_out_degree)
    arcs = []
    for v in range(1, spec.n):
        p = parents[v]
        arcs.append((p, v) if rng.next_u64() & 1 else (v, p))
    t = DirectedTree(spec.n, arcs)
    if spec.n >= 3 and classify_ditree(t) == "arborescence":
        # Force a second root by reversing the arc into the highest leaf.
        # When that leaf hangs directly off the root the reversal merely
        # re-roots the tree, so the next-highest leaf flips too; either
        # way some vertex ends up with in-degree 2.
        root = t.roots[0]
        leaves = sorted((v for v in range(spec.n)
                         if t.out_degree(v) == 0 and t.in_degree(v) == 1),
                        reverse=True)
        turn = {leaves[0]}
        if int(t.in_neighbors(leaves[0])[0]) == root:
            turn.add(leaves[1])
        flipped = [(b, a) if b in turn else (a, b) for a, b in t.arcs]
        t = DirectedTree(spec.n, flipped)
    return t


def random_cactus(spec: GenSpec) -> UndirectedGraph:
    if spec.kind != "cactus":
        raise ValueError(f"spec is for {spec.kind!r}")
    n = spec.n
    rng = SplitMix64(spec.seed)
    if n == 1:
        return UndirectedGraph(1, [])
    parents = _attachment_parents(n, rng, spec.max_out_degree)
    edges: List[Tuple[int, int]] = [(parents[v], v) for v in range(1, n)]
    cycled = [False] * n  # cycled[v]: tree edge (parents[v], v) sits on a cycle
    attempts = int(spec.cycle_fraction * n)
    for _ in range(attempts):
        start = 1 + rng.randrange(n - 1)
        span = 2 + rng.randrange(3)
        v = start
        steps = 0
        while steps < span and v != 0 and not cycled[v]:
            v = parents[v]
            steps += 1
        if steps < 2:
            continue
        top, v = v, start
        for _ in range(steps):
            cycled[v] = True
            v = parents[v]
        edges.append((top, start))
    return UndirectedGraph(n, edges)


def generate(spec: GenSpec):
    """Build the instance a spec describes (used by the CLI and bench pool)."""
    if spec.kind == "cactus":
        return random_cactus(spec)
    if spec.kind == "arborescence":
        return random_arborescence(spec)
    return random_polytree(spec)
