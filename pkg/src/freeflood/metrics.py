"""Shortest-path metrics of reduced graphs: distances, eccentricity, radius, center."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidZone
from .graphs import ReducedGraph


@dataclass(frozen=True)
class Metrics:
    """Per-zone eccentricities with the derived radius and center set."""

    eccentricity: tuple[int, ...]
    radius: int
    center: tuple[int, ...]


def _distances(adjacency, source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def bfs_distances(rg: ReducedGraph, source: int) -> tuple[int, ...]:
    """Unweighted shortest-path distances from `source` to every zone."""
    if not 0 <= source < rg.zone_count:
        raise InvalidZone(f"zone {source} outside [0, {rg.zone_count})")
    return tuple(_distances(rg.adjacency, source))


def eccentricity(rg: ReducedGraph, x: int) -> int:
    """Greatest distance from zone x to any other zone."""
    return max(bfs_distances(rg, x))


def radius_and_center(rg: ReducedGraph) -> Metrics:
    """One search per zone; the radius is the least eccentricity.

    Each source is independent, so the sweep could be parallelized without
    changing the result; no early exit is attempted.
    """
    adjacency = rg.adjacency
    eccs = [max(_distances(adjacency, s)) for s in range(rg.zone_count)]
    radius = min(eccs)
    center = tuple(z for z, e in enumerate(eccs) if e == radius)
    return Metrics(tuple(eccs), radius, center)
