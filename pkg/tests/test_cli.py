"""Command-line surface: output shapes, pipelines, and exit codes."""

import json

import pytest

from freeflood import parse_graph, parse_moves
from freeflood.cli import (
    EXIT_DOMAIN,
    EXIT_FILE,
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_SUBOPTIMAL,
    EXIT_USAGE,
    main,
)

CHECKERBOARD = "01\n10\n"


@pytest.fixture
def board(tmp_path):
    path = tmp_path / "board.grid"
    path.write_text(CHECKERBOARD)
    return str(path)


def test_solve_plain(board, capsys):
    assert main(["solve", board]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "optimum 2"
    assert len(lines) == 3
    assert all(line.startswith("move ") for line in lines[1:])


def test_solve_machine_matches_plain(board, capsys):
    assert main(["solve", board]) == EXIT_OK
    plain = capsys.readouterr().out.splitlines()
    plain_moves = [[int(p) for p in line.split()[1:]] for line in plain[1:]]
    assert main(["solve", board, "--format", "machine"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["optimum"] == 2
    assert doc["moves"] == plain_moves
    assert doc["n"] == 4 and doc["m"] == 4
    assert "digest" in doc and "timings" in doc


def test_solve_verify_pipeline(board, tmp_path, capsys):
    moves = tmp_path / "out.moves"
    assert main(["solve", board, "--validate", "--moves-out", str(moves)]) == EXIT_OK
    capsys.readouterr()
    assert len(parse_moves(moves.read_text())) == 2
    assert main(["verify", board, str(moves)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "verdict optimal"


def test_verify_suboptimal_and_infeasible(board, tmp_path, capsys):
    longer = tmp_path / "long.moves"
    longer.write_text("0 1\n0 0\n0 1\n")
    assert main(["verify", board, str(longer)]) == EXIT_SUBOPTIMAL
    assert "feasible_suboptimal" in capsys.readouterr().out
    short = tmp_path / "short.moves"
    short.write_text("0 1\n")
    assert main(["verify", board, str(short)]) == EXIT_INFEASIBLE
    assert "infeasible" in capsys.readouterr().out


def test_radius_monochromatic(tmp_path, capsys):
    path = tmp_path / "mono.grid"
    path.write_text("000\n000\n")
    assert main(["radius", str(path)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert "radius 0" in lines
    assert "center 0" in lines


def test_reduce_emits_parseable_graph(board, capsys):
    assert main(["reduce", board]) == EXIT_OK
    rg = parse_graph(capsys.readouterr().out)
    assert rg.vertex_count == 4
    assert rg.edge_count == 4


def test_simulate(board, tmp_path, capsys):
    moves = tmp_path / "sim.moves"
    moves.write_text("0 1\n0 0\n")
    assert main(["simulate", board, str(moves), "--validate"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "step 1 flood 0 -> 1 zones 2" in out
    assert "monochromatic true" in out


def test_simulate_graph_format(tmp_path, capsys):
    instance = tmp_path / "path.graph"
    instance.write_text("3 2 2\n0\n1\n0\n0 1\n1 2\n")
    moves = tmp_path / "path.moves"
    moves.write_text("1 0\n")
    assert main(["simulate", str(instance), str(moves)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "step 1 flood 1 -> 0 zones 1" in out
    assert "monochromatic true" in out


def test_simulate_rejects_noop(board, tmp_path, capsys):
    moves = tmp_path / "bad.moves"
    moves.write_text("0 0\n")
    assert main(["simulate", board, str(moves)]) == EXIT_DOMAIN
    assert "rejected" in capsys.readouterr().err


def test_oracle(board, capsys):
    assert main(["oracle", board]) == EXIT_OK
    out = capsys.readouterr().out
    assert "optimum 2" in out
    assert "exhausted true" in out


def test_oracle_budget(board, capsys):
    assert main(["oracle", board, "--budget", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "exhausted false" in out
    assert "upper bound" in out


def test_check_runs_clean(capsys):
    assert main(["check", "--count", "6", "--seed", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("# seed 3")
    assert out.count("no counterexample") == 3


def test_gen_deterministic_and_parseable(capsys):
    assert main(["gen", "--n", "8", "--extra-edges", "2", "--seed", "9"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["gen", "--n", "8", "--extra-edges", "2", "--seed", "9"]) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second
    assert "# seed 9" in first
    g = parse_graph(first)
    assert g.vertex_count == 8
    assert g.edge_count == 9


def test_gen_grid(capsys):
    assert main(["gen", "--grid", "3x4", "--seed", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    rows = out.strip().splitlines()
    assert len(rows) == 3
    assert all(len(r) == 4 for r in rows)


def test_bench_reports_square_sizes(capsys):
    assert main(["bench", "--sizes", "4,6", "--seed", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# seed 2"
    assert "N,n,m,radius,milliseconds" in lines
    data = [line.split(",") for line in lines if line and not line.startswith(("#", "N,"))]
    assert [(int(r[0]), int(r[1])) for r in data] == [(4, 16), (6, 36)]
    for row in data:
        grid_size, n, m = int(row[0]), int(row[1]), int(row[2])
        assert n == grid_size * grid_size
        assert m == 2 * grid_size * (grid_size - 1)


def test_stdin_instance(board, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(CHECKERBOARD))
    assert main(["solve", "-"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "optimum 2"


def test_exit_codes(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "missing.grid")]) == EXIT_FILE
    bad = tmp_path / "bad.grid"
    bad.write_text("01\n1x\n")
    assert main(["solve", str(bad)]) == EXIT_PARSE
    tri = tmp_path / "three.graph"
    tri.write_text("3 2 3\n0\n1\n2\n0 1\n1 2\n")
    assert main(["solve", str(tri)]) == EXIT_DOMAIN
    assert main(["nonsense"]) == EXIT_USAGE
    capsys.readouterr()
