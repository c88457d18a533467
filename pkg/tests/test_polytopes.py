"""Tests for the tubing / plane-forest oracle."""

import math

import pytest

from wondermodels.lattice import GuardExceeded
from wondermodels.polytopes import (
    EULER_CW_RANGE,
    Graph,
    count_plane_trees,
    dynkin_graph,
    enumerate_tubes,
    euler_cw,
    fvector_tubings,
)


def path(m):
    return Graph.from_edges(range(1, m + 1), [(i, i + 1) for i in range(1, m)])


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph.from_edges([1, 2], [(1, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges([1, 2, 3], [(1, 2, 3)])


def test_neighbors_and_connectivity():
    g = dynkin_graph("D", 5)
    assert g.neighbors(3) == {2, 4, 5}
    assert g.is_connected_subset(frozenset({4, 3, 5}))
    assert not g.is_connected_subset(frozenset({4, 5}))


def test_dynkin_shapes():
    a = dynkin_graph("A", 5)
    assert a.nodes == (1, 2, 3, 4)
    assert len(a.edges) == 3
    b = dynkin_graph("B", 4)
    assert b.nodes == (1, 2, 3, 4)
    assert frozenset({3, 4}) in b.edges
    d = dynkin_graph("D", 4)
    assert d.neighbors(2) == {1, 3, 4}
    with pytest.raises(ValueError):
        dynkin_graph("A", 2)
    with pytest.raises(ValueError):
        dynkin_graph("D", 3)
    with pytest.raises(ValueError):
        dynkin_graph("E", 6)


def test_tubes_of_path3():
    # path 1-2-3: all connected proper subsets
    tubes = enumerate_tubes(path(3))
    assert tubes == [
        frozenset({1}), frozenset({2}), frozenset({3}),
        frozenset({1, 2}), frozenset({2, 3}),
    ]


def test_tube_guard():
    with pytest.raises(GuardExceeded):
        enumerate_tubes(path(13))


def test_fvector_singleton():
    assert fvector_tubings(path(1)) == [1]


def test_fvector_square():
    # path on 2 nodes: 2 singleton tubes, compatible pairs none (adjacent)
    assert fvector_tubings(path(2)) == [1, 2]


def test_fvector_pentagon():
    # the 2-dimensional associahedron
    assert fvector_tubings(path(3)) == [1, 5, 5]


def test_fvector_associahedron_3d():
    assert fvector_tubings(path(4)) == [1, 9, 21, 14]


@pytest.mark.parametrize("n,expected", [
    (4, [1, 10, 24, 16]),
    (5, [1, 16, 67, 102, 51]),
])
def test_fvector_typeD(n, expected):
    assert fvector_tubings(dynkin_graph("D", n)) == expected


def test_fvector_typeB_matches_path():
    for n in range(1, 6):
        assert fvector_tubings(dynkin_graph("B", n)) == fvector_tubings(path(n))


def test_disjoint_adjacent_tubes_incompatible():
    # {1} and {2} on a path are disjoint but adjacent: no tubing holds both
    g = path(2)
    tubes = enumerate_tubes(g)
    assert len(tubes) == 2
    # the f-vector already shows it: 2 vertices, no edge between them would
    # mean a 1-dimensional face count of 2, but entry 1 is the vertex count
    assert fvector_tubings(g) == [1, 2]


def test_count_plane_trees_small():
    assert count_plane_trees(2, 1) == 2
    assert count_plane_trees(3, 1) == 6
    assert count_plane_trees(3, 2) == 12
    assert count_plane_trees(4, 1) == 24
    # n=4, s=3 forces three pairs: 15 pairings, each ordered in 2^3 ways
    assert count_plane_trees(4, 3) == 15 * 8


def test_count_plane_trees_closed_form():
    # m!/s! C(m-s-1, s-1) with m = n+s-1
    for n in range(2, 7):
        for s in range(1, n):
            m = n + s - 1
            closed = math.factorial(m) // math.factorial(s) \
                * math.comb(m - s - 1, s - 1)
            assert count_plane_trees(n, s) == closed, (n, s)


def test_count_plane_trees_domain():
    with pytest.raises(ValueError):
        count_plane_trees(1, 1)
    with pytest.raises(ValueError):
        count_plane_trees(4, 4)
    with pytest.raises(ValueError):
        count_plane_trees(4, 0)


@pytest.mark.parametrize("family,n,expected", [
    ("A", 2, 1),
    ("A", 3, 0),
    ("A", 4, -3),
    ("A", 5, 0),
    ("A", 6, 45),
    ("A", 7, 0),
    ("B", 1, 1),
    ("B", 2, 0),
    ("B", 3, -6),
    ("B", 4, 0),
    ("B", 5, 240),
    ("D", 4, 0),
    ("D", 5, 180),
])
def test_euler_cw_values(family, n, expected):
    assert euler_cw(family, n) == expected


def test_euler_cw_range():
    for fam, (lo, hi) in EULER_CW_RANGE.items():
        with pytest.raises(ValueError):
            euler_cw(fam, lo - 1)
        with pytest.raises(ValueError):
            euler_cw(fam, hi + 1)
    with pytest.raises(ValueError):
        euler_cw("E", 6)
