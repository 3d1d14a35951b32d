"""Exact solver for two-color Free-Flood-It on connected graphs.

The optimal number of flooding moves equals the radius of the zone graph;
flooding one center zone repeatedly realizes it.  The package bundles the
solver, an exhaustive oracle with property checkers, instance file formats,
and a command-line interface.
"""

from .errors import (
    ColorOutOfRange,
    DisconnectedGraph,
    DuplicateEdge,
    EdgeCountMismatch,
    Empty,
    EmptyGraph,
    FloodError,
    ImproperColoring,
    InstanceTooLarge,
    InvalidCharacter,
    InvalidVertex,
    InvalidZone,
    MalformedMove,
    NoOpMove,
    ParseError,
    RaggedRows,
    SelfLoop,
    SingletonGraph,
    TooManyColors,
    TooManyEdges,
)
from .graphs import (
    ColoredGraph,
    ContractionTrace,
    FloodMove,
    ReducedGraph,
    ZoneMap,
    apply_flood,
    build,
    canonical_form,
    contract,
    contract_with_trace,
    monochromatic_zones,
    reduce,
)
from .instances import (
    GridSpec,
    emit_graph,
    emit_grid,
    emit_moves,
    gen_random,
    gen_random_bipartite,
    grid_graph,
    instance_digest,
    parse_graph,
    parse_grid,
    parse_grid_spec,
    parse_moves,
)
from .metrics import Metrics, bfs_distances, eccentricity, radius_and_center
from .oracle import (
    Counterexample,
    LemmaReport,
    StateSpace,
    StateSpaceReport,
    brute_force_min_moves,
    check_distance_bounds,
    check_far_witness,
    check_radius_bounds,
)
from .solver import Solution, Verdict, min_moves, solve, solve_reduced, verify_solution

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph",
    "ColorOutOfRange",
    "ContractionTrace",
    "Counterexample",
    "DisconnectedGraph",
    "DuplicateEdge",
    "EdgeCountMismatch",
    "Empty",
    "EmptyGraph",
    "FloodError",
    "FloodMove",
    "GridSpec",
    "ImproperColoring",
    "InstanceTooLarge",
    "InvalidCharacter",
    "InvalidVertex",
    "InvalidZone",
    "LemmaReport",
    "MalformedMove",
    "Metrics",
    "NoOpMove",
    "ParseError",
    "RaggedRows",
    "ReducedGraph",
    "SelfLoop",
    "SingletonGraph",
    "Solution",
    "StateSpace",
    "StateSpaceReport",
    "TooManyColors",
    "TooManyEdges",
    "Verdict",
    "ZoneMap",
    "apply_flood",
    "bfs_distances",
    "brute_force_min_moves",
    "build",
    "canonical_form",
    "check_distance_bounds",
    "check_far_witness",
    "check_radius_bounds",
    "contract",
    "contract_with_trace",
    "eccentricity",
    "emit_graph",
    "emit_grid",
    "emit_moves",
    "gen_random",
    "gen_random_bipartite",
    "grid_graph",
    "instance_digest",
    "min_moves",
    "monochromatic_zones",
    "parse_graph",
    "parse_grid",
    "parse_grid_spec",
    "parse_moves",
    "radius_and_center",
    "reduce",
    "solve",
    "solve_reduced",
    "verify_solution",
]
