"""Colored graphs, zone reduction, flooding moves, and neighborhood contraction.

A flooding move picks a zone (a maximal connected monochromatic vertex set)
and recolors it wholesale, possibly merging it with same-colored neighbor
zones.  The reduced graph, with one vertex per zone and a proper coloration,
is the solver's working representation: flooding a zone corresponds to
contracting that zone's reduced vertex together with all of its neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ColorOutOfRange,
    DisconnectedGraph,
    DuplicateEdge,
    EmptyGraph,
    ImproperColoring,
    InstanceTooLarge,
    InvalidVertex,
    InvalidZone,
    MalformedMove,
    NoOpMove,
    SelfLoop,
    SingletonGraph,
    TooManyColors,
)

Adjacency = tuple[tuple[int, ...], ...]

# Guard for the canonical-form search, which branches over symmetric vertices.
MAX_CANONICAL_VERTICES = 64


@dataclass(frozen=True)
class ColoredGraph:
    """Connected undirected graph with one color per vertex."""

    adjacency: Adjacency
    colors: tuple[int, ...]
    color_count: int

    @property
    def vertex_count(self) -> int:
        return len(self.colors)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2


@dataclass(frozen=True)
class ReducedGraph:
    """Zone graph of a colored graph; its coloration is always proper."""

    adjacency: Adjacency
    colors: tuple[int, ...]

    @property
    def zone_count(self) -> int:
        return len(self.colors)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2


@dataclass(frozen=True)
class ZoneMap:
    """Surjection from original vertices onto zone ids.

    Zones are numbered by their smallest member vertex, and that smallest
    vertex is kept as the zone's representative.
    """

    zone_of: tuple[int, ...]
    representative_of: tuple[int, ...]

    @property
    def zone_count(self) -> int:
        return len(self.representative_of)


@dataclass(frozen=True)
class FloodMove:
    """Recolor the whole zone containing `vertex` with `color`."""

    vertex: int
    color: int


@dataclass(frozen=True)
class ContractionTrace:
    """Renumbering record of one neighborhood contraction."""

    absorbed: tuple[int, ...]  # old zone ids folded into the contracted zone
    new_id: tuple[int, ...]    # old id -> new id; absorbed ids map to `merged`
    merged: int                # new id of the contracted zone


def _check_connected(adjacency: Sequence[Sequence[int]]) -> None:
    n = len(adjacency)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    if count != n:
        raise DisconnectedGraph(f"only {count} of {n} vertices reachable from vertex 0")


def build(
    edge_list: Iterable[tuple[int, int]],
    colors: Sequence[int],
    color_count: int | None = None,
) -> ColoredGraph:
    """Validate and assemble a ColoredGraph.

    The vertex count is len(colors); edge endpoints must fall in that range.
    `color_count` defaults to max(colors) + 1.
    """
    colors = tuple(int(c) for c in colors)
    n = len(colors)
    if n == 0:
        raise EmptyGraph("a graph needs at least one vertex")
    for v, c in enumerate(colors):
        if c < 0:
            raise ColorOutOfRange(f"vertex {v} has negative color {c}")
    if color_count is None:
        color_count = max(colors) + 1
    for v, c in enumerate(colors):
        if c >= color_count:
            raise ColorOutOfRange(f"vertex {v} has color {c}, color_count is {color_count}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} given twice")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    _check_connected(adj)
    return ColoredGraph(tuple(tuple(sorted(row)) for row in adj), colors, color_count)


def monochromatic_zones(
    adjacency: Sequence[Sequence[int]], colors: Sequence[int]
) -> tuple[list[int], list[list[int]]]:
    """Connected monochromatic components, numbered by smallest member vertex.

    Returns (zone_of, zones) where zones[z][0] is the smallest vertex of
    zone z.  Linear in vertices plus edges.
    """
    n = len(colors)
    zone_of = [-1] * n
    zones: list[list[int]] = []
    for v in range(n):
        if zone_of[v] >= 0:
            continue
        zid = len(zones)
        color = colors[v]
        members = [v]
        zone_of[v] = zid
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adjacency[u]:
                if zone_of[w] < 0 and colors[w] == color:
                    zone_of[w] = zid
                    members.append(w)
                    stack.append(w)
        zones.append(members)
    return zone_of, zones


def _validate_reduced(rg: ReducedGraph) -> None:
    for z, row in enumerate(rg.adjacency):
        for w in row:
            if rg.colors[w] == rg.colors[z]:
                raise ImproperColoring(f"adjacent zones {z} and {w} share color {rg.colors[z]}")
    _check_connected(rg.adjacency)


def reduce(g: ColoredGraph) -> tuple[ReducedGraph, ZoneMap]:
    """Contract every zone of g to a single vertex.

    The induced coloration is proper by construction; zone count and edge
    count never exceed the original graph's.  Linear in vertices plus edges.
    """
    zone_of, zones = monochromatic_zones(g.adjacency, g.colors)
    k = len(zones)
    zadj: list[list[int]] = [[] for _ in range(k)]
    seen: set[tuple[int, int]] = set()
    for u in range(g.vertex_count):
        zu = zone_of[u]
        for w in g.adjacency[u]:
            zw = zone_of[w]
            if zu < zw and (zu, zw) not in seen:
                seen.add((zu, zw))
                zadj[zu].append(zw)
                zadj[zw].append(zu)
    rg = ReducedGraph(
        tuple(tuple(sorted(row)) for row in zadj),
        tuple(g.colors[members[0]] for members in zones),
    )
    _validate_reduced(rg)
    zm = ZoneMap(tuple(zone_of), tuple(members[0] for members in zones))
    return rg, zm


def apply_flood(
    g: ColoredGraph, zm: ZoneMap, move: FloodMove, validate: bool = False
) -> tuple[ColoredGraph, ZoneMap]:
    """Flood the zone containing move.vertex with move.color.

    The zone map is updated incrementally, searching only the merged region;
    `validate=True` cross-checks the result against a full re-reduction.
    """
    n = g.vertex_count
    if not 0 <= move.vertex < n:
        raise MalformedMove(f"vertex {move.vertex} outside [0, {n})")
    if not 0 <= move.color < g.color_count:
        raise MalformedMove(f"color {move.color} outside [0, {g.color_count})")
    target = move.color
    if g.colors[move.vertex] == target:
        raise NoOpMove(f"zone of vertex {move.vertex} already has color {target}")
    zone = zm.zone_of[move.vertex]
    zone_of = zm.zone_of
    new_colors = list(g.colors)
    for u in range(n):
        if zone_of[u] == zone:
            new_colors[u] = target
    # The recolored zone may coalesce with same-colored neighbors; collect the
    # merged region by search from the move vertex.
    merged = {move.vertex}
    stack = [move.vertex]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in merged and new_colors[w] == target:
                merged.add(w)
                stack.append(w)
    swallowed = {zone_of[u] for u in merged}
    entries = [(rep, z) for z, rep in enumerate(zm.representative_of) if z not in swallowed]
    entries.append((min(merged), -1))
    entries.sort()
    remap: dict[int, int] = {}
    merged_id = -1
    for new_zid, (_, z) in enumerate(entries):
        if z == -1:
            merged_id = new_zid
        else:
            remap[z] = new_zid
    new_zone_of = tuple(
        merged_id if zone_of[u] in swallowed else remap[zone_of[u]] for u in range(n)
    )
    g2 = ColoredGraph(g.adjacency, tuple(new_colors), g.color_count)
    zm2 = ZoneMap(new_zone_of, tuple(rep for rep, _ in entries))
    if validate:
        _, zm_full = reduce(g2)
        if zm_full != zm2:
            raise AssertionError("incremental zone map diverged from full re-reduction")
    return g2, zm2


def contract_with_trace(rg: ReducedGraph, x: int) -> tuple[ReducedGraph, ContractionTrace]:
    """Neighborhood contraction: fold zone x and all its neighbors into x.

    The merged zone keeps x's slot in an order-preserving dense renumbering,
    adopts all second neighbors, and flips to the other palette color.  The
    returned trace records the renumbering for move reporting.
    """
    k = rg.zone_count
    if not 0 <= x < k:
        raise InvalidZone(f"zone {x} outside [0, {k})")
    if k < 2:
        raise SingletonGraph("contraction needs at least two zones")
    palette = set(rg.colors)
    if len(palette) > 2:
        raise TooManyColors("neighborhood contraction is defined for two-color instances")
    absorbed = set(rg.adjacency[x])
    new_id = [-1] * k
    survivors = [z for z in range(k) if z not in absorbed]
    for i, z in enumerate(survivors):
        new_id[z] = i
    merged = new_id[x]
    for z in absorbed:
        new_id[z] = merged
    adj_new: list[list[int]] = [[] for _ in survivors]
    second: set[int] = set()
    for y in rg.adjacency[x]:
        for w in rg.adjacency[y]:
            if w != x and w not in absorbed:
                second.add(new_id[w])
    adj_new[merged] = sorted(second)
    for s in survivors:
        if s == x:
            continue
        row = []
        touches_merged = False
        for w in rg.adjacency[s]:
            if w in absorbed:
                touches_merged = True
            else:
                row.append(new_id[w])
        if touches_merged:
            row.append(merged)
        adj_new[new_id[s]] = sorted(row)
    others = palette - {rg.colors[x]}
    if len(others) != 1:
        raise ImproperColoring("a proper coloration with two or more zones uses two colors")
    colors_new = [rg.colors[s] for s in survivors]
    colors_new[merged] = others.pop()
    rg2 = ReducedGraph(tuple(tuple(row) for row in adj_new), tuple(colors_new))
    _validate_reduced(rg2)
    trace = ContractionTrace(tuple(sorted(absorbed)), tuple(new_id), merged)
    return rg2, trace


def contract(rg: ReducedGraph, x: int) -> ReducedGraph:
    """Neighborhood contraction, discarding the renumbering trace."""
    return contract_with_trace(rg, x)[0]


def canonical_form(adjacency: Sequence[Sequence[int]], colors: Sequence[int]):
    """Canonical encoding of a vertex-colored graph.

    Two graphs get equal encodings iff a color-preserving isomorphism maps
    one onto the other.  Individualization-refinement search: branch over the
    first non-singleton cell, prune sibling branches that a discovered
    automorphism maps onto an explored one.  Meant for small graphs and
    guarded accordingly.
    """
    n = len(colors)
    if n > MAX_CANONICAL_VERTICES:
        raise InstanceTooLarge(f"{n} vertices exceeds the canonical-form guard")
    if n == 0:
        return (0, (), ())
    edges = [(u, w) for u, row in enumerate(adjacency) for w in row if u < w]

    def refine(cells: list[list[int]]) -> list[list[int]]:
        changed = True
        while changed:
            changed = False
            index = [0] * n
            for ci, cell in enumerate(cells):
                for v in cell:
                    index[v] = ci
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                buckets: dict[tuple[int, ...], list[int]] = {}
                for v in cell:
                    sig = tuple(sorted(index[w] for w in adjacency[v]))
                    buckets.setdefault(sig, []).append(v)
                if len(buckets) > 1:
                    changed = True
                for sig in sorted(buckets):
                    out.append(buckets[sig])
            cells = out
        return cells

    def encode(order: list[int]):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        relabeled = sorted(
            (pos[u], pos[w]) if pos[u] < pos[w] else (pos[w], pos[u]) for u, w in edges
        )
        return (tuple(colors[v] for v in order), tuple(relabeled))

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    initial = [by_color[c] for c in sorted(by_color)]

    best = None
    automorphisms: list[list[int]] = []
    seen_leaves: dict[tuple, list[int]] = {}

    def orbit(v: int, prefix: list[int]) -> set[int]:
        # Closure of v under the automorphisms that fix every vertex
        # individualized so far; sibling branches inside one orbit coincide.
        applicable = [a for a in automorphisms if all(a[p] == p for p in prefix)]
        reach = {v}
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for a in applicable:
                w = a[u]
                if w not in reach:
                    reach.add(w)
                    frontier.append(w)
        return reach

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal best
        cells = refine(cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            enc = encode(order)
            known = seen_leaves.get(enc)
            if known is None:
                if len(seen_leaves) < 512:
                    seen_leaves[enc] = order
            else:
                # Two labelings with one encoding compose to an automorphism.
                perm = [0] * n
                for position in range(n):
                    perm[known[position]] = order[position]
                if any(perm[v] != v for v in range(n)):
                    automorphisms.append(perm)
            if best is None or enc < best:
                best = enc
            return
        cell = cells[target]
        explored: set[int] = set()
        open_seen: set[frozenset[int]] = set()
        closed_seen: set[frozenset[int]] = set()
        for v in sorted(cell):
            # Twins (equal open or equal closed neighborhoods) swap by an
            # automorphism fixing everything else, so one branch covers the
            # whole twin class.
            open_key = frozenset(adjacency[v])
            closed_key = open_key | {v}
            if open_key in open_seen or closed_key in closed_seen:
                continue
            if explored and orbit(v, prefix) & explored:
                continue
            open_seen.add(open_key)
            closed_seen.add(closed_key)
            explored.add(v)
            rest = [u for u in cell if u != v]
            prefix.append(v)
            search(cells[:target] + [[v], rest] + cells[target + 1 :], prefix)
            prefix.pop()

    search(initial, [])
    return (n, best[0], best[1])
