"""Command-line interface: solve, inspect, simulate, verify, and benchmark.

Exit codes: 0 success, 2 usage, 3 file error, 4 parse error, 5 domain error,
6 verified feasible but suboptimal, 7 verified infeasible, 8 property check
found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .errors import FloodError, MalformedMove, NoOpMove, ParseError
from .graphs import apply_flood, reduce
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
    parse_grid_spec,
    parse_moves,
)
from .metrics import radius_and_center
from .oracle import brute_force_min_moves, check_distance_bounds, check_far_witness, check_radius_bounds
from .solver import Solution, Verdict, solve, verify_solution

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FILE = 3
EXIT_PARSE = 4
EXIT_DOMAIN = 5
EXIT_SUBOPTIMAL = 6
EXIT_INFEASIBLE = 7
EXIT_COUNTEREXAMPLE = 8


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_instance(path: str, input_format: str):
    """Load an instance file; returns (graph, grid spec or None)."""
    text = _read_text(path)
    fmt = input_format
    if fmt == "auto":
        fmt = "grid"
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                fmt = "graph" if len(line.split()) > 1 else "grid"
                break
    if fmt == "grid":
        spec = parse_grid_spec(text)
        return grid_graph(spec), spec
    return parse_graph(text), None


def _add_instance_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("instance", help="instance file, or - for stdin")
    sub.add_argument(
        "--input-format",
        choices=("auto", "grid", "graph"),
        default="auto",
        help="instance file format (default: sniffed from the first line)",
    )


def _add_format_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=("plain", "machine"),
        default="plain",
        help="plain lines or one JSON document",
    )


def _cmd_solve(args: argparse.Namespace) -> int:
    g, _ = _load_instance(args.instance, args.input_format)
    start = time.perf_counter()
    solution = solve(g, validate=args.validate)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.moves_out:
        with open(args.moves_out, "w", encoding="utf-8") as handle:
            handle.write(emit_moves(solution.moves))
    if args.format == "machine":
        doc = {
            "command": "solve",
            "digest": instance_digest(g),
            "n": g.vertex_count,
            "m": g.edge_count,
            "optimum": solution.claimed_optimum,
            "center_vertex": solution.center_zone_representative,
            "moves": [[m.vertex, m.color] for m in solution.moves],
            "timings": {"solve_ms": elapsed_ms},
        }
        print(json.dumps(doc))
    else:
        print(f"optimum {solution.claimed_optimum}")
        for move in solution.moves:
            print(f"move {move.vertex} {move.color}")
    return EXIT_OK


def _cmd_radius(args: argparse.Namespace) -> int:
    g, _ = _load_instance(args.instance, args.input_format)
    rg, _ = reduce(g)
    met = radius_and_center(rg)
    if args.format == "machine":
        doc = {
            "command": "radius",
            "digest": instance_digest(g),
            "zones": rg.zone_count,
            "radius": met.radius,
            "center": list(met.center),
            "eccentricity": list(met.eccentricity),
        }
        print(json.dumps(doc))
    else:
        print(f"zones {rg.zone_count}")
        print(f"radius {met.radius}")
        print("center " + " ".join(str(z) for z in met.center))
        for z, e in enumerate(met.eccentricity):
            print(f"eccentricity {z} {e}")
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace) -> int:
    g, _ = _load_instance(args.instance, args.input_format)
    rg, _ = reduce(g)
    sys.stdout.write(emit_graph(rg))
    return EXIT_OK


def _render_grid(spec: GridSpec, colors) -> str:
    rows = []
    for r in range(spec.rows):
        rows.append("".join(str(colors[r * spec.cols + c]) for c in range(spec.cols)))
    return "\n".join(rows)


def _cmd_simulate(args: argparse.Namespace) -> int:
    g, spec = _load_instance(args.instance, args.input_format)
    moves = parse_moves(_read_text(args.moves))
    cur, zm = g, reduce(g)[1]
    for step, move in enumerate(moves, start=1):
        try:
            cur, zm = apply_flood(cur, zm, move, validate=args.validate)
        except (NoOpMove, MalformedMove) as exc:
            print(f"step {step}: rejected: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        print(f"step {step} flood {move.vertex} -> {move.color} zones {zm.zone_count}")
        if spec is not None:
            print(_render_grid(spec, cur.colors))
    mono = len(set(cur.colors)) == 1
    print(f"monochromatic {'true' if mono else 'false'}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g, _ = _load_instance(args.instance, args.input_format)
    moves = parse_moves(_read_text(args.moves))
    rep = moves[0].vertex if moves else 0
    solution = Solution(tuple(moves), len(moves), rep)
    verdict = verify_solution(g, solution)
    print(f"verdict {verdict.value}")
    if verdict is Verdict.OPTIMAL:
        return EXIT_OK
    if verdict is Verdict.FEASIBLE_SUBOPTIMAL:
        return EXIT_SUBOPTIMAL
    return EXIT_INFEASIBLE


def _cmd_oracle(args: argparse.Namespace) -> int:
    g, _ = _load_instance(args.instance, args.input_format)
    report = brute_force_min_moves(g, state_budget=args.budget)
    if args.format == "machine":
        doc = {
            "command": "oracle",
            "digest": instance_digest(g),
            "optimum": report.optimum,
            "states_explored": report.states_explored,
            "exhausted": report.exhausted,
        }
        print(json.dumps(doc))
    else:
        print(f"optimum {report.optimum}")
        print(f"states {report.states_explored}")
        print(f"exhausted {'true' if report.exhausted else 'false'}")
        if not report.exhausted:
            print("note optimum is an upper bound: the state budget was hit")
    return EXIT_OK


def _check_corpus(count: int, seed: int, max_n: int, min_zones: int, max_zones: int):
    """Seeded reduced graphs with a zone count inside [min_zones, max_zones].

    Half come from reducing random colored graphs, half from random bipartite
    graphs (already reduced), so both small and full-size zone graphs show up.
    """
    rng = random.Random(seed)
    produced = 0
    attempts = 0
    while produced < count:
        attempts += 1
        if attempts > 100 * count:
            break
        n = rng.randint(2, max_n)
        if rng.random() < 0.5:
            slots = n * (n - 1) // 2 - (n - 1)
            g = gen_random(n, min(rng.randint(0, 3), slots), 2, seed=rng.randrange(2**32))
        else:
            g = gen_random_bipartite(n, rng.randint(0, n // 3), seed=rng.randrange(2**32))
        rg, _ = reduce(g)
        if min_zones <= rg.zone_count <= max_zones:
            produced += 1
            yield rg


def _cmd_check(args: argparse.Namespace) -> int:
    print(f"# seed {args.seed}")
    suites = [
        ("radius-bounds", check_radius_bounds, dict(max_n=50, min_zones=2, max_zones=50)),
        ("distance-bounds", check_distance_bounds, dict(max_n=30, min_zones=2, max_zones=30)),
        ("far-witness", check_far_witness, dict(max_n=20, min_zones=3, max_zones=20)),
    ]
    failed = False
    for offset, (name, checker, bounds) in enumerate(suites):
        graphs = 0
        checks = 0
        bad = None
        for rg in _check_corpus(args.count, args.seed + offset, **bounds):
            report = checker(rg)
            graphs += 1
            checks += report.instances_checked
            if not report.ok:
                bad = report
                break
        if bad is None:
            print(f"{name}: {graphs} graphs, {checks} checks, no counterexample")
        else:
            failed = True
            print(f"{name}: counterexample after {graphs} graphs: {bad.counterexample.detail}")
            print(f"{name}: witness {bad.counterexample.witness}")
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.grid:
        try:
            rows, cols = (int(p) for p in args.grid.lower().split("x"))
        except ValueError:
            print("error: --grid expects ROWSxCOLS, e.g. 8x8", file=sys.stderr)
            return EXIT_USAGE
        if rows < 1 or cols < 1 or args.color_count > 10:
            print("error: grid needs positive dimensions and at most 10 colors", file=sys.stderr)
            return EXIT_USAGE
        rng = random.Random(args.seed)
        cells = tuple(rng.randrange(args.color_count) for _ in range(rows * cols))
        text = emit_grid(GridSpec(rows, cols, cells))
        print(f"# seed {args.seed}", file=sys.stderr)
    else:
        g = gen_random(args.n, args.extra_edges, args.color_count, args.seed)
        text = f"# seed {args.seed}\n" + emit_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(p) for p in args.sizes.split(",") if p]
    print(f"# seed {args.seed}")
    print("# m is the undirected edge count; adjacency lists hold 2m entries")
    print("N,n,m,radius,milliseconds")
    for grid_size in sizes:
        rng = random.Random(args.seed * 1_000_003 + grid_size)
        cells = tuple(rng.randrange(2) for _ in range(grid_size * grid_size))
        g = grid_graph(GridSpec(grid_size, grid_size, cells))
        best = None
        radius = None
        for _ in range(args.repeat):
            start = time.perf_counter()
            solution = solve(g)
            elapsed = time.perf_counter() - start
            radius = solution.claimed_optimum
            best = elapsed if best is None else min(best, elapsed)
        print(f"{grid_size},{g.vertex_count},{g.edge_count},{radius},{best * 1000.0:.2f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeflood",
        description="Exact two-color flood solver over connected graphs and grids.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("solve", help="optimal move count and move list")
    _add_instance_arg(sub)
    _add_format_arg(sub)
    sub.add_argument("--validate", action="store_true", help="replay the certificate step by step")
    sub.add_argument("--moves-out", metavar="PATH", help="also write the moves as a move file")
    sub.set_defaults(func=_cmd_solve)

    sub = commands.add_parser("radius", help="zone metrics: radius, center, eccentricities")
    _add_instance_arg(sub)
    _add_format_arg(sub)
    sub.set_defaults(func=_cmd_radius)

    sub = commands.add_parser("reduce", help="print the zone graph as a graph file")
    _add_instance_arg(sub)
    sub.set_defaults(func=_cmd_reduce)

    sub = commands.add_parser("simulate", help="replay a move file step by step")
    _add_instance_arg(sub)
    sub.add_argument("moves", help="move file, or - for stdin")
    sub.add_argument("--validate", action="store_true", help="cross-check each incremental update")
    sub.set_defaults(func=_cmd_simulate)

    sub = commands.add_parser("verify", help="classify a move file as optimal/suboptimal/infeasible")
    _add_instance_arg(sub)
    sub.add_argument("moves", help="move file, or - for stdin")
    sub.set_defaults(func=_cmd_verify)

    sub = commands.add_parser("oracle", help="exhaustive optimum for small instances")
    _add_instance_arg(sub)
    _add_format_arg(sub)
    sub.add_argument("--budget", type=int, default=1_000_000, help="state cap for the search")
    sub.set_defaults(func=_cmd_oracle)

    sub = commands.add_parser("check", help="run the property suites over a seeded corpus")
    sub.add_argument("--count", type=int, default=40, help="graphs per suite")
    sub.add_argument("--seed", type=int, default=0)
    sub.set_defaults(func=_cmd_check)

    sub = commands.add_parser("gen", help="write a seeded random instance")
    sub.add_argument("--n", type=int, default=10, help="vertex count")
    sub.add_argument("--extra-edges", type=int, default=0, help="edges beyond the spanning tree")
    sub.add_argument("--color-count", type=int, default=2)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--grid", metavar="RxC", help="emit a random grid file instead")
    sub.add_argument("-o", "--output", metavar="PATH", help="write to a file instead of stdout")
    sub.set_defaults(func=_cmd_gen)

    sub = commands.add_parser("bench", help="time solve over random grid colorings")
    sub.add_argument("--sizes", default="16,32,64", help="comma-separated grid sides")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--repeat", type=int, default=1, help="runs per size; best time is kept")
    sub.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed a diagnostic
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except FloodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
