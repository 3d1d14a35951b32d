"""Shared strategies and naive reference implementations for the test suite.

The reference routines here deliberately use different algorithms than the
package (fixpoint merging for zones, Floyd-Warshall for distances) so that
agreement between the two is meaningful.
"""

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from freeflood import ColoredGraph, build, gen_random, gen_random_bipartite, reduce

settings.register_profile(
    "freeflood",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("freeflood")


@st.composite
def graph_parts(draw, max_vertices=12, color_count=2, max_extra=3):
    """(edges, colors) of a random connected graph: spanning tree plus extras."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    tree = set(edges)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in tree]
    if pool and max_extra:
        extra = draw(
            st.lists(st.sampled_from(pool), max_size=min(max_extra, len(pool)), unique=True)
        )
        edges.extend(extra)
    colors = draw(st.lists(st.integers(0, color_count - 1), min_size=n, max_size=n))
    return edges, colors


@st.composite
def colored_graphs(draw, max_vertices=12, color_count=2, max_extra=3):
    edges, colors = draw(graph_parts(max_vertices, color_count, max_extra))
    return build(edges, colors, color_count)


@st.composite
def reduced_graphs(draw, max_vertices=12, max_extra=3):
    g = draw(colored_graphs(max_vertices, 2, max_extra))
    return reduce(g)[0]


def naive_zone_sets(edge_list, colors):
    """Zones by fixpoint merging of same-colored adjacent vertex sets."""
    groups = [{v} for v in range(len(colors))]
    changed = True
    while changed:
        changed = False
        for u, v in edge_list:
            if colors[u] != colors[v]:
                continue
            gu = next(g for g in groups if u in g)
            gv = next(g for g in groups if v in g)
            if gu is not gv:
                gu |= gv
                groups.remove(gv)
                changed = True
    return sorted((frozenset(g) for g in groups), key=min)


def floyd_warshall(adjacency):
    """All-pairs distances by the cubic recurrence; independent of the BFS code."""
    n = len(adjacency)
    inf = float("inf")
    dist = [[inf] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
        for w in adjacency[v]:
            dist[v][w] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def zone_footprints(zm):
    """Original-vertex sets of each zone, indexed by zone id."""
    sets = [set() for _ in zm.representative_of]
    for v, z in enumerate(zm.zone_of):
        sets[z].add(v)
    return [frozenset(s) for s in sets]


def mixed_instance(rng: random.Random, max_vertices: int) -> ColoredGraph:
    """One seeded instance: random coloring or random bipartite, varied size."""
    n = rng.randint(2, max_vertices)
    if rng.random() < 0.5:
        slots = n * (n - 1) // 2 - (n - 1)
        return gen_random(n, min(rng.randint(0, 3), slots), 2, seed=rng.randrange(2**32))
    return gen_random_bipartite(n, rng.randint(0, n // 3), seed=rng.randrange(2**32))
