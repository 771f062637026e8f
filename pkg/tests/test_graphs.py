"""Graph containers, traversals, structure queries, and the text format."""

import numpy as np
import pytest

from burnlab import (
    DirectedTree,
    GraphFormatError,
    UndirectedGraph,
    articulation_points,
    bfs_distances,
    classify_ditree,
    is_cactus,
    is_connected,
    lca,
    load_graph,
    save_graph,
)
from burnlab.graphs import farthest_from, graph_from_text, graph_to_text


def path(n):
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def chain(n):
    return DirectedTree(n, [(i, i + 1) for i in range(n - 1)])


def test_undirected_basics():
    g = UndirectedGraph(4, [(2, 3), (0, 1), (1, 2)])
    assert g.n == 4 and g.m == 3
    assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]
    assert list(g.neighbors(1)) == [0, 2]
    assert g.edges == ((0, 1), (1, 2), (2, 3))


def test_directed_basics():
    t = DirectedTree(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert t.n == 5 and t.m == 4
    assert list(t.out_neighbors(2)) == [3, 4]
    assert list(t.in_neighbors(3)) == [2]
    assert t.out_degree(0) == 2 and t.in_degree(0) == 0
    assert t.roots == [0]
    par = t.parents()
    assert par[0] == -1 and par[3] == 2 and par[1] == 0


def test_bfs_distances_undirected():
    g = path(5)
    assert bfs_distances(g, 0).tolist() == [0, 1, 2, 3, 4]
    assert bfs_distances(g, 2).tolist() == [2, 1, 0, 1, 2]


def test_bfs_distances_follows_out_arcs_only():
    t = chain(4)
    assert bfs_distances(t, 2).tolist() == [-1, -1, 0, 1]
    assert bfs_distances(t, 0).tolist() == [0, 1, 2, 3]


def test_farthest_from():
    g = path(6)
    assert farthest_from(g, 0) == (5, 5)
    assert farthest_from(g, 3) == (0, 3)


def test_is_connected():
    assert is_connected(path(4))
    assert not is_connected(UndirectedGraph(4, [(0, 1), (2, 3)]))
    assert is_connected(UndirectedGraph(1, []))


def test_articulation_points():
    assert articulation_points(path(4)) == [1, 2]
    triangle = UndirectedGraph(3, [(0, 1), (1, 2), (2, 0)])
    assert articulation_points(triangle) == []
    star = UndirectedGraph(5, [(0, i) for i in range(1, 5)])
    assert articulation_points(star) == [0]
    bowtie = UndirectedGraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert articulation_points(bowtie) == [2]


def test_is_cactus():
    assert is_cactus(path(6))
    triangle_leaf = UndirectedGraph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert is_cactus(triangle_leaf)
    bowtie = UndirectedGraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert is_cactus(bowtie)
    k4 = UndirectedGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert not is_cactus(k4)
    shared_edge = UndirectedGraph(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)])
    assert not is_cactus(shared_edge)
    assert not is_cactus(UndirectedGraph(4, [(0, 1), (2, 3)]))  # disconnected


def test_classify_ditree():
    assert classify_ditree(chain(4)) == "arborescence"
    assert classify_ditree(DirectedTree(3, [(0, 2), (1, 2)])) == "polytree"
    # wrong edge count for a tree
    assert classify_ditree(DirectedTree(4, [(0, 1), (0, 2), (1, 3), (2, 3)])) == "invalid"
    assert classify_ditree(DirectedTree(2, [(0, 1), (1, 0)])) == "invalid"
    # two vertices, one arc: single root, every in-degree <= 1
    assert classify_ditree(DirectedTree(2, [(0, 1)])) == "arborescence"


def test_lca_arborescence():
    t = DirectedTree(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)])
    assert lca(t, 3, 4) == 1
    assert lca(t, 3, 6) == 0
    assert lca(t, 5, 6) == 5
    assert lca(t, 2, 2) == 2


def test_lca_polytree_without_common_ancestor():
    t = DirectedTree(3, [(0, 2), (1, 2)])
    assert lca(t, 0, 1) is None


def test_text_round_trip(tmp_path):
    g = UndirectedGraph(4, [(0, 1), (1, 2), (2, 3)])
    t = DirectedTree(3, [(0, 1), (0, 2)])
    assert graph_to_text(g) == "u 4 3\n0 1\n1 2\n2 3\n"
    assert graph_to_text(t) == "d 3 2\n0 1\n0 2\n"
    for original in (g, t):
        p = tmp_path / "g.graph"
        save_graph(original, p)
        back = load_graph(p)
        assert type(back) is type(original)
        assert graph_to_text(back) == graph_to_text(original)


def test_text_format_rejections():
    bad = [
        "x 3 2\n0 1\n1 2\n",        # unknown kind letter
        "u 3\n",                     # short header
        "u 3 2\n0 1\n",              # fewer edges than announced
        "u 3 2\n0 1\n1 9\n",         # vertex id out of range
        "u 3 2\n0 1\n1 two\n",       # non-numeric endpoint
    ]
    for text in bad:
        with pytest.raises(GraphFormatError):
            graph_from_text(text)


def test_neighbor_lists_are_sorted():
    g = UndirectedGraph(5, [(4, 0), (2, 0), (0, 3), (1, 0)])
    assert list(g.neighbors(0)) == [1, 2, 3, 4]
    t = DirectedTree(4, [(0, 3), (0, 1), (0, 2)])
    assert list(t.out_neighbors(0)) == [1, 2, 3]
