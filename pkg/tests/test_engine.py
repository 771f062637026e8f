"""Schedules, simulation semantics, budgets, center sets, and assembly."""

import pytest

from burnlab import (
    AssemblyError,
    BurningSchedule,
    CenterGroup,
    CenterSets,
    DirectedTree,
    GraphFormatError,
    RangeBudget,
    ScheduleError,
    UndirectedGraph,
    assemble,
    ceil_range,
    load_schedule,
    save_schedule,
    simulate,
    validate,
)


def path(n):
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return UndirectedGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# ---- ceil_range ----------------------------------------------------------

def test_ceil_range_is_exact_on_decimal_strings():
    # float(0.19) * 100 is 19.000000000000004; the ceiling must still be 19
    assert ceil_range(100, "0.19") == 19
    assert ceil_range(100, 0.19) == 19
    assert ceil_range(100, "1.81") == 181
    assert ceil_range(100, "0.81") == 81


def test_ceil_range_rounds_up():
    assert ceil_range(4, "2.75") == 11
    assert ceil_range(5, "2.75") == 14   # 13.75 up
    assert ceil_range(1, "1.905") == 2
    assert ceil_range(2, "1.905") == 4   # 3.81 up
    assert ceil_range(1, "0.25") == 1
    assert ceil_range(0, "2.75") == 0


def test_ceil_range_budget_identities():
    # the cactus schedule layout leans on these for every b
    for b in range(1, 200):
        assert ceil_range(b, "2.75") == ceil_range(b, "1.75") + b
        assert ceil_range(b, "1.75") - ceil_range(b, "0.75") == b


# ---- schedules -----------------------------------------------------------

def test_schedule_line_round_trip():
    s = BurningSchedule((3, 0, 7))
    assert len(s) == 3
    assert list(s) == [3, 0, 7]
    assert s.to_line() == "3 0 7"
    assert BurningSchedule.from_line("3 0 7") == s
    assert BurningSchedule.from_line("") == BurningSchedule(())


def test_schedule_bad_line_is_a_format_error():
    with pytest.raises(GraphFormatError):
        BurningSchedule.from_line("1 x 2")


def test_schedule_file_round_trip(tmp_path):
    p = tmp_path / "s.txt"
    s = BurningSchedule((2, 5, 1))
    save_schedule(s, p)
    assert load_schedule(p) == s


# ---- simulation ----------------------------------------------------------

def test_simulate_rounds_and_cover():
    g = path(4)
    res = simulate(g, BurningSchedule((1, 3)))
    assert res.burned_at.tolist() == [2, 1, 2, 2]
    assert res.rounds_to_cover == 2


def test_simulate_partial_burn():
    g = path(4)
    res = simulate(g, BurningSchedule((0,)))
    assert res.burned_at.tolist() == [1, -1, -1, -1]
    assert res.rounds_to_cover is None


def test_simulate_directed_spreads_out_arcs_only():
    t = DirectedTree(4, [(0, 1), (1, 2), (2, 3)])
    res = simulate(t, BurningSchedule((1,)))
    assert res.burned_at.tolist() == [-1, 1, -1, -1]
    res = simulate(t, BurningSchedule((1, 0)))
    # round 2: fire walks 1->2 while 0 is ignited; round 3 would reach 3
    assert res.burned_at.tolist() == [2, 1, 2, -1]


def test_source_may_catch_fire_in_its_own_round():
    # igniting a vertex the same round the fire reaches it is fine
    g = path(3)
    v = validate(g, BurningSchedule((1, 0)))
    assert v.ok and bool(v)
    res = simulate(g, BurningSchedule((1, 0)))
    assert res.burned_at.tolist() == [2, 1, 2]


def test_source_burned_in_an_earlier_round_is_rejected():
    g = path(3)
    with pytest.raises(ScheduleError):
        simulate(g, BurningSchedule((1, 0, 2)))
    v = validate(g, BurningSchedule((1, 0, 2)))
    assert not v.ok
    assert "already burned" in v.reason


def test_validate_reports_uncovered_vertex():
    v = validate(path(3), BurningSchedule((1,)))
    assert not v.ok
    assert v.reason == "vertex 0 unburned after 1 rounds"


def test_validate_rejects_bad_sources():
    g = path(3)
    assert not validate(g, BurningSchedule((0, 5))).ok
    assert not validate(g, BurningSchedule((1, 1, 0))).ok


def test_spread_then_ignite_covers_star_in_two_rounds():
    # one center round then one spreading round burns the whole star,
    # with the second source landing on an already-spreading leaf
    g = star(4)
    assert validate(g, BurningSchedule((0, 1))).ok


# ---- burning-range budgets ----------------------------------------------

def test_range_budget_hands_out_smallest_fit():
    rb = RangeBudget(4)
    assert rb.remaining() == (0, 1, 2, 3, 4)
    assert rb.peek_min_at_least(3) == 3
    assert rb.remaining() == (0, 1, 2, 3, 4)  # peek does not consume
    assert rb.take_min_at_least(3) == 3
    assert rb.take_min_at_least(3) == 4
    assert rb.take_min_at_least(3) is None
    assert rb.peek_min_at_least(5) is None
    assert rb.take_min_at_least(0) == 0
    assert rb.remaining() == (1, 2)


# ---- center sets ---------------------------------------------------------

def test_center_sets_reject_shared_vertices():
    with pytest.raises(ValueError):
        CenterSets((CenterGroup("a", (1, 2), 1), CenterGroup("b", (2,), 0)))


def test_center_sets_reject_negative_radius():
    with pytest.raises(ValueError):
        CenterSets((CenterGroup("a", (1,), -1),))


# ---- assembly ------------------------------------------------------------

def test_assemble_orders_groups_by_radius():
    g = path(7)
    centers = CenterSets((
        CenterGroup("small", (6,), 0),
        CenterGroup("big", (2,), 2),
    ))
    sched = assemble(g, centers, 3)
    assert list(sched)[0] == 2           # larger radius burns first
    assert validate(g, sched).ok
    assert len(sched) <= 3


def test_assemble_raises_when_a_radius_cannot_fit():
    g = path(7)
    centers = CenterSets((
        CenterGroup("a", (1,), 2),
        CenterGroup("b", (5,), 2),       # position 1 only grants radius 1
    ))
    with pytest.raises(AssemblyError):
        assemble(g, centers, 3)


def test_assemble_rejects_out_of_range_center():
    with pytest.raises(AssemblyError):
        assemble(path(3), CenterSets((CenterGroup("a", (9,), 0),)), 2)


def test_assemble_truncates_once_covered():
    g = path(3)
    sched = assemble(g, CenterSets((CenterGroup("a", (1,), 1),)), 3)
    assert len(sched) <= 2
    assert validate(g, sched).ok


def test_assemble_fills_spare_rounds_with_unburned_vertices():
    g = UndirectedGraph(5, [(0, 1), (1, 2), (3, 4)])  # two components
    sched = assemble(g, CenterSets((CenterGroup("a", (1,), 1),)), 3)
    assert list(sched) == [1, 3, 4]
    assert validate(g, sched).ok


def test_assemble_raises_when_fillers_cannot_finish():
    g = UndirectedGraph(5, [(0, 1), (1, 2), (3, 4)])
    with pytest.raises(AssemblyError):
        assemble(g, CenterSets((CenterGroup("a", (1,), 1),)), 2)


def test_assemble_skips_centers_already_burned():
    # the radius-2 source covers vertex 3 before its own position comes up
    g = path(5)
    centers = CenterSets((
        CenterGroup("big", (2,), 2),
        CenterGroup("late", (3,), 0),
    ))
    sched = assemble(g, centers, 3)
    assert validate(g, sched).ok
    assert len(sched) <= 3


def test_assemble_output_always_validates():
    # staggered radii on a longer path
    g = path(12)
    centers = CenterSets((
        CenterGroup("a", (2, 7), 2),
        CenterGroup("b", (11,), 0),
    ))
    sched = assemble(g, centers, 5)
    assert validate(g, sched).ok
