"""The 2.75-ratio cactus pipeline: window walk, guess procedure, driver."""

import pytest

from burnlab import (
    BadGuess,
    CenterSets,
    GenSpec,
    GraphClassError,
    UndirectedGraph,
    approx_cactus,
    articulation_on_path,
    articulation_points,
    burn_guess_cactus,
    ceil_range,
    cycle_formula,
    exact_burning_number,
    generate,
    validate,
)


def path(n):
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return UndirectedGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# ---- cut vertices along the root path ------------------------------------

def test_window_walk_keeps_the_deepest_hit():
    g = path(5)
    assert articulation_on_path(g, 4, 0, 2) == 1
    assert articulation_on_path(g, 0, 0, 2) is None


def test_window_walk_honours_exclusions():
    g = path(5)
    assert articulation_on_path(g, 4, 0, 2, exclude={1}) == 2
    assert articulation_on_path(g, 4, 0, 2, exclude={1, 2}) == 3
    assert articulation_on_path(g, 4, 0, 2, exclude={1, 2, 3}) is None


def test_window_walk_misses_too_close_cut_vertices():
    # with b=8 the window starts 2 hops out; the lone cut vertex sits 1 away
    g = UndirectedGraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert articulation_on_path(g, 3, 0, 8) is None


def test_window_walk_lower_bound_scales_with_b():
    g = path(9)
    # b=4: window [1, 7] -> deepest qualifying cut vertex on the 8->0 walk
    assert articulation_on_path(g, 8, 0, 4) == 1
    # b=8: window [2, 14], the walk still stops next to the root
    assert articulation_on_path(g, 8, 0, 8) == 1


# ---- one guess -----------------------------------------------------------

def test_guess_burns_a_star_with_one_cut_center():
    res = burn_guess_cactus(star(4), 1)
    assert isinstance(res, CenterSets)
    cut, far = res.groups
    assert cut.label == "cut" and cut.vertices == (0,) and cut.radius == 2
    assert far.vertices == ()


def test_guess_rejects_a_long_path_at_b1():
    res = burn_guess_cactus(path(10), 1)
    assert isinstance(res, BadGuess)
    assert res.tag in ("both_exhausted", "budget2_exhausted")


def test_guess_needs_a_cut_vertex():
    with pytest.raises(GraphClassError):
        burn_guess_cactus(cycle(5), 2)


def test_guess_never_rejects_at_or_above_the_true_number():
    for seed in range(30):
        g = generate(GenSpec("cactus", 5 + seed % 10, seed))
        if not articulation_points(g):
            continue
        b = exact_burning_number(g).b
        assert isinstance(burn_guess_cactus(g, b), CenterSets)
        assert isinstance(burn_guess_cactus(g, b + 1), CenterSets)


def test_guess_selection_count_stays_within_budget():
    for seed in range(30):
        g = generate(GenSpec("cactus", 6 + seed % 9, seed))
        if not articulation_points(g):
            continue
        for b in range(1, 6):
            res = burn_guess_cactus(g, b)
            if isinstance(res, CenterSets):
                cut, far = res.groups
                assert len(cut.vertices) + len(far.vertices) <= b
                assert len(cut.vertices) <= ceil_range(b, "0.25")
                assert len(far.vertices) <= ceil_range(b, "0.75")


# ---- full driver ---------------------------------------------------------

def test_driver_handles_the_trivial_sizes():
    sched, b_star = approx_cactus(UndirectedGraph(1, []))
    assert list(sched) == [0] and b_star == 1
    sched, b_star = approx_cactus(UndirectedGraph(2, [(0, 1)]))
    assert list(sched) == [0, 1] and b_star == 2


def test_driver_burns_bare_cycles_optimally():
    for n in range(3, 15):
        g = cycle(n)
        sched, b_star = approx_cactus(g)
        assert validate(g, sched).ok
        assert b_star == cycle_formula(n)
        assert len(sched) <= b_star


def test_driver_rejects_non_cacti():
    k4 = UndirectedGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(GraphClassError):
        approx_cactus(k4)
    with pytest.raises(GraphClassError):
        approx_cactus(UndirectedGraph(4, [(0, 1), (2, 3)]))


def test_driver_meets_the_ratio_on_random_cacti():
    for seed in range(40):
        g = generate(GenSpec("cactus", 4 + seed % 11, seed))
        sched, b_star = approx_cactus(g, verify_inclusion=True)
        assert validate(g, sched).ok
        b = exact_burning_number(g).b
        assert b_star <= b
        assert len(sched) <= ceil_range(b, "2.75")


def test_driver_is_deterministic():
    for seed in (3, 17):
        g = generate(GenSpec("cactus", 12, seed))
        first = approx_cactus(g)
        again = approx_cactus(g)
        assert list(first[0]) == list(again[0]) and first[1] == again[1]
