"""Distances, eccentricity, radius, and center against naive references."""

import pytest
from hypothesis import given

from freeflood import InvalidZone, bfs_distances, build, eccentricity, radius_and_center, reduce

from conftest import floyd_warshall, reduced_graphs


def reduced_path(k):
    g = build([(i, i + 1) for i in range(k - 1)], [i % 2 for i in range(k)])
    return reduce(g)[0]


def reduced_cycle(k):
    edges = [(min(i, (i + 1) % k), max(i, (i + 1) % k)) for i in range(k)]
    g = build(edges, [i % 2 for i in range(k)])
    return reduce(g)[0]


def test_bfs_singleton():
    rg = reduce(build([], [0]))[0]
    assert bfs_distances(rg, 0) == (0,)


def test_bfs_path_from_end():
    assert bfs_distances(reduced_path(5), 0) == (0, 1, 2, 3, 4)


def test_bfs_four_cycle():
    assert bfs_distances(reduced_cycle(4), 0) == (0, 1, 2, 1)


def test_bfs_invalid_source():
    with pytest.raises(InvalidZone):
        bfs_distances(reduced_path(3), 3)


def test_eccentricity_path_end_and_middle():
    rg = reduced_path(5)
    assert eccentricity(rg, 0) == 4
    assert eccentricity(rg, 2) == 2


def test_eccentricity_grid_center():
    # 3x3 grid graph as zones; the middle cell reaches everything in 2
    edges = []
    for r in range(3):
        for c in range(3):
            v = r * 3 + c
            if c < 2:
                edges.append((v, v + 1))
            if r < 2:
                edges.append((v, v + 3))
    rg = reduce(build(edges, [(r + c) % 2 for r in range(3) for c in range(3)]))[0]
    assert eccentricity(rg, 4) == 2


def test_radius_star():
    g = build([(0, 1), (0, 2), (0, 3), (0, 4)], [0, 1, 1, 1, 1])
    met = radius_and_center(reduce(g)[0])
    assert met.radius == 1
    assert met.center == (0,)


def test_radius_path():
    met = radius_and_center(reduced_path(5))
    assert met.radius == 2
    assert met.center == (2,)


def test_radius_four_cycle():
    met = radius_and_center(reduced_cycle(4))
    assert met.eccentricity == (2, 2, 2, 2)
    assert met.radius == 2
    assert met.center == (0, 1, 2, 3)


def test_radius_singleton():
    met = radius_and_center(reduce(build([], [1]))[0])
    assert met.radius == 0
    assert met.center == (0,)


@given(reduced_graphs(max_vertices=14))
def test_distances_match_floyd_warshall(rg):
    reference = floyd_warshall(rg.adjacency)
    for s in range(rg.zone_count):
        assert list(bfs_distances(rg, s)) == reference[s]


@given(reduced_graphs(max_vertices=14))
def test_metrics_match_naive_all_pairs(rg):
    reference = floyd_warshall(rg.adjacency)
    eccs = [max(row) for row in reference]
    met = radius_and_center(rg)
    assert list(met.eccentricity) == eccs
    assert met.radius == min(eccs)
    assert met.center == tuple(z for z, e in enumerate(eccs) if e == min(eccs))
    assert met.center


@given(reduced_graphs(max_vertices=14))
def test_distance_axioms_and_eccentricity_spread(rg):
    n = rg.zone_count
    rows = [bfs_distances(rg, s) for s in range(n)]
    met = radius_and_center(rg)
    for a in range(n):
        assert rows[a][a] == 0
        assert met.radius <= met.eccentricity[a] <= 2 * met.radius
        for b in range(n):
            assert rows[a][b] == rows[b][a]
            for c in range(n):
                assert rows[a][c] <= rows[a][b] + rows[b][c]
