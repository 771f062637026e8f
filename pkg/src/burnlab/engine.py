"""Burning schedules: simulation, validation, and assembly from center sets.

Process model
-------------
A schedule is an ordered list of distinct sources x_0..x_{L-1}.  In round
t (1-based), fire spreads from everything that caught fire in round t-1,
and x_{t-1} is ignited in the same step.  A source is legal if it was
still unburned at the end of the previous round; a vertex that catches
fire by spreading in the very round it is ignited is therefore fine
(equivalently: d(x_i, x_j) >= j - i for all i < j).  After L rounds the
burned set is exactly the union of the balls of radius L-1-i around the
x_i.

Fractional burning ranges (e.g. 1.75*b) always round up and are computed
with exact rational arithmetic; see `ceil_range`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from . import kernels
from .errors import AssemblyError, GraphFormatError, ScheduleError
from .graphs import DirectedTree


def ceil_range(b: int, k) -> int:
    """Ceiling of k*b computed exactly.

    `k` may be an int, a Fraction, or a decimal literal given as str or
    float; floats are interpreted via their repr, so 0.19 means exactly
    19/100 and ceil_range(11, 0.19) == 3.
    """
    if isinstance(k, float):
        k = Fraction(str(k))
    elif isinstance(k, str):
        k = Fraction(k)
    elif not isinstance(k, (int, Fraction)):
        raise TypeError(f"range factor must be int/Fraction/decimal, got {type(k)!r}")
    return math.ceil(b * k)


def _adjacency(g):
    if isinstance(g, DirectedTree):
        return g.out_adj()
    return g.adj()


# ---- schedule container --------------------------------------------------

@dataclass(frozen=True)
class BurningSchedule:
    """Ordered burning sources; length doubles as the number of rounds."""

    sources: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sources)

    def __iter__(self):
        return iter(self.sources)

    def to_line(self) -> str:
        return " ".join(str(v) for v in self.sources)

    @classmethod
    def from_line(cls, line: str) -> "BurningSchedule":
        try:
            return cls(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise GraphFormatError(f"bad schedule line: {line!r}") from exc


def save_schedule(s: BurningSchedule, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(s.to_line() + "\n")


def load_schedule(path) -> BurningSchedule:
    with open(path, "r", encoding="ascii") as fh:
        return BurningSchedule.from_line(fh.read())


# ---- center sets ---------------------------------------------------------

@dataclass(frozen=True)
class CenterGroup:
    label: str
    vertices: Tuple[int, ...]
    radius: int


@dataclass(frozen=True)
class CenterSets:
    """Groups of burning centers, each group with one required radius.

    Vertices must be pairwise distinct across the whole collection and
    radii non-negative; assembly grants each center at least its group
    radius.
    """

    groups: Tuple[CenterGroup, ...]

    def __post_init__(self):
        seen = set()
        for grp in self.groups:
            if grp.radius < 0:
                raise ValueError(f"group {grp.label!r} has negative radius")
            for v in grp.vertices:
                if v in seen:
                    raise ValueError(f"center {v} appears in more than one group")
                seen.add(v)

    def center_count(self) -> int:
        return sum(len(g.vertices) for g in self.groups)


@dataclass(frozen=True)
class BadGuess:
    """Failure certificate for one guessed burning number."""

    tag: str


class RangeBudget:
    """The pool of burning ranges {0..limit} available to a schedule of
    length limit+1; placements consume the minimum qualifying range."""

    def __init__(self, limit: int):
        if limit < 0:
            raise ValueError("negative range limit")
        self._avail: List[int] = list(range(limit + 1))

    def peek_min_at_least(self, r: int) -> Optional[int]:
        for x in self._avail:
            if x >= r:
                return x
        return None

    def take_min_at_least(self, r: int) -> Optional[int]:
        for i, x in enumerate(self._avail):
            if x >= r:
                del self._avail[i]
                return x
        return None

    def remaining(self) -> Tuple[int, ...]:
        return tuple(self._avail)


# ---- simulation ----------------------------------------------------------

@dataclass
class SimulationResult:
    burned_at: np.ndarray  # round each vertex caught fire; -1 = never
    rounds_to_cover: Optional[int]

    @property
    def burned(self) -> frozenset:
        return frozenset(int(v) for v in np.flatnonzero(self.burned_at >= 0))


def _check_sources(n: int, sources: Tuple[int, ...]) -> None:
    if not sources:
        raise ScheduleError("empty schedule")
    seen = set()
    for v in sources:
        if not (0 <= v < n):
            raise ScheduleError(f"source {v} out of range 0..{n - 1}")
        if v in seen:
            raise ScheduleError(f"duplicate source {v}")
        seen.add(v)


def simulate(g, schedule: BurningSchedule) -> SimulationResult:
    """Run the burning rounds of `schedule` on g (out-arcs if directed).

    Raises ScheduleError if a source was already burned before its round.
    """
    n = g.n
    sources = tuple(schedule.sources)
    _check_sources(n, sources)
    adj = _adjacency(g)
    burned_at = np.full(n, -1, dtype=np.int32)
    frontier: List[int] = []
    burned = 0
    cover: Optional[int] = None
    for t, src in enumerate(sources, start=1):
        frontier, newly = kernels.spread(adj, frontier, burned_at, t)
        burned += newly
        prev = int(burned_at[src])
        if prev == -1:
            burned_at[src] = t
            frontier.append(src)
            burned += 1
        elif prev < t:
            raise ScheduleError(
                f"source {src} at round {t} was already burned in round {prev}")
        # prev == t: caught fire by this round's spread, simultaneously legal
        if cover is None and burned == n:
            cover = t
    return SimulationResult(burned_at=burned_at, rounds_to_cover=cover)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def validate(g, schedule: BurningSchedule) -> Verdict:
    """Accept iff sources are distinct in-range vertices, each source was
    unburned when selected, and all vertices are burned within len(schedule)
    rounds.  The verdict carries the first violated rule."""
    try:
        sim = simulate(g, schedule)
    except ScheduleError as exc:
        return Verdict(False, str(exc))
    if sim.rounds_to_cover is None:
        v = int(np.flatnonzero(sim.burned_at < 0)[0])
        return Verdict(False, f"vertex {v} unburned after {len(schedule)} rounds")
    return Verdict(True)


# ---- assembly ------------------------------------------------------------

def assemble(g, centers: CenterSets, length: int) -> BurningSchedule:
    """Greedy schedule of at most `length` rounds from center groups.

    Groups are placed in non-increasing radius order (stable), centers at
    positions 0,1,2,.. so position i grants radius length-1-i; raises
    AssemblyError if some center cannot receive its required radius.
    Remaining rounds ignite the smallest-id currently-unburned vertex.  A
    planned center that is already burned when its position arrives is
    skipped in favor of a filler (an earlier larger-radius source covers
    its ball).  The schedule is cut as soon as the simulation covers the
    graph; if coverage lands exactly on a spreading round, the final source
    is the smallest-id vertex that caught fire in that round (legal under
    the simultaneous convention).  The result always passes `validate`.
    """
    n = g.n
    adj = _adjacency(g)
    ordered = sorted(centers.groups, key=lambda grp: -grp.radius)
    plan: List[int] = []
    for grp in ordered:
        for v in grp.vertices:
            if not (0 <= v < n):
                raise AssemblyError(f"center {v} out of range")
            pos = len(plan)
            granted = length - 1 - pos
            if granted < grp.radius:
                raise AssemblyError(
                    f"center {v} needs radius {grp.radius} but position {pos} "
                    f"of a length-{length} schedule grants {granted}")
            plan.append(v)

    burned_at = np.full(n, -1, dtype=np.int32)
    frontier: List[int] = []
    chosen: List[int] = []
    burned = 0
    filler = 0
    t = 0
    while True:
        t += 1
        if t > length:
            raise AssemblyError(
                f"planned centers failed to cover within {length} rounds")
        frontier, newly = kernels.spread(adj, frontier, burned_at, t)
        burned += newly
        if burned == n:
            # coverage arrived with this round's spread; still owe round t a
            # source — any vertex burned at exactly t is simultaneously legal
            if not frontier:
                raise AssemblyError("cover round produced no new fire")
            chosen.append(min(frontier))
            break
        src = None
        if t - 1 < len(plan):
            c = plan[t - 1]
            if burned_at[c] == -1:
                src = c
        if src is None:
            while filler < n and burned_at[filler] != -1:
                filler += 1
            src = filler
        burned_at[src] = t
        frontier.append(src)
        burned += 1
        chosen.append(src)
        if burned == n:
            break

    schedule = BurningSchedule(tuple(chosen))
    verdict = validate(g, schedule)
    if not verdict:
        raise AssemblyError(f"assembled schedule failed validation: {verdict.reason}")
    return schedule
