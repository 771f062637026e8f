"""Seeded random instances: reproducibility and class guarantees."""

import pytest

from burnlab import (
    DirectedTree,
    GenSpec,
    SplitMix64,
    UndirectedGraph,
    classify_ditree,
    generate,
    is_cactus,
    is_connected,
    random_arborescence,
    random_cactus,
    random_polytree,
)
from burnlab.generators import fixture_relpath
from burnlab.graphs import graph_to_text


# ---- the generator core --------------------------------------------------

def test_splitmix_matches_the_reference_stream():
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_splitmix_is_seeded_and_stateful():
    a, b = SplitMix64(42), SplitMix64(42)
    assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]
    assert SplitMix64(42).next_u64() != SplitMix64(43).next_u64()


def test_randrange_stays_in_bounds():
    rng = SplitMix64(7)
    for _ in range(200):
        assert 0 <= rng.randrange(13) < 13


# ---- spec validation -----------------------------------------------------

def test_spec_rejects_bad_fields():
    with pytest.raises(ValueError):
        GenSpec("torus", 5, 0)
    with pytest.raises(ValueError):
        GenSpec("cactus", 0, 0)
    with pytest.raises(ValueError):
        GenSpec("cactus", 5, 0, cycle_fraction=0.75)
    with pytest.raises(ValueError):
        GenSpec("arborescence", 5, 0, max_out_degree=0)


def test_spec_fixture_paths():
    assert fixture_relpath(GenSpec("cactus", 30, 4)) == "cactus/n30_s4.graph"


# ---- determinism ---------------------------------------------------------

def test_same_spec_same_bytes():
    for kind in ("cactus", "polytree", "arborescence"):
        for seed in (0, 9):
            spec = GenSpec(kind, 25, seed)
            assert graph_to_text(generate(spec)) == graph_to_text(generate(spec))


def test_different_seeds_differ():
    texts = {graph_to_text(generate(GenSpec("cactus", 20, s))) for s in range(6)}
    assert len(texts) == 6


# ---- class guarantees ----------------------------------------------------

def test_cacti_are_connected_cacti_with_bounded_density():
    for seed in range(25):
        n = 4 + seed % 12
        g = generate(GenSpec("cactus", n, seed))
        assert isinstance(g, UndirectedGraph)
        assert g.n == n
        assert is_connected(g) and is_cactus(g)
        assert n - 1 <= g.m <= (3 * (n - 1)) // 2


def test_cycle_fraction_zero_gives_trees():
    for seed in range(10):
        g = generate(GenSpec("cactus", 15, seed, cycle_fraction=0.0))
        assert g.m == g.n - 1


def test_arborescences_classify_as_such():
    for seed in range(25):
        n = 2 + seed % 13
        t = generate(GenSpec("arborescence", n, seed))
        assert isinstance(t, DirectedTree)
        assert t.m == n - 1
        assert classify_ditree(t) == "arborescence"


def test_polytrees_classify_as_such():
    for seed in range(25):
        n = 3 + seed % 12
        t = generate(GenSpec("polytree", n, seed))
        assert classify_ditree(t) == "polytree"
    # with two vertices every orientation is single-rooted
    assert classify_ditree(generate(GenSpec("polytree", 2, 0))) in (
        "arborescence", "polytree")


def test_max_out_degree_is_respected():
    for cap in (1, 2, 3):
        for seed in range(8):
            t = generate(GenSpec("arborescence", 20, seed, max_out_degree=cap))
            assert max(t.out_degree(v) for v in range(t.n)) <= cap
    #  cap 1 forces a single descending chain
    t = generate(GenSpec("arborescence", 10, 3, max_out_degree=1))
    assert sorted(t.out_degree(v) for v in range(t.n)) == [0] + [1] * 9


def test_dispatcher_matches_the_dedicated_builders():
    spec = GenSpec("cactus", 18, 5)
    assert graph_to_text(generate(spec)) == graph_to_text(random_cactus(spec))
    spec = GenSpec("polytree", 18, 5)
    assert graph_to_text(generate(spec)) == graph_to_text(random_polytree(spec))
    spec = GenSpec("arborescence", 18, 5)
    assert graph_to_text(generate(spec)) == graph_to_text(
        random_arborescence(spec))


def test_singleton_instances():
    assert generate(GenSpec("cactus", 1, 0)).n == 1
    assert generate(GenSpec("arborescence", 1, 0)).n == 1
