"""Command-line surface: subcommands, formats, and exit codes."""

import json

import pytest

from dynachrome import Coloring, coloring_to_json_dict, cycle, read_dimacs
from dynachrome.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_stdout_dimacs(capsys):
    code, out, _ = run(capsys, "gen", "cycle:8")
    assert code == 0
    assert read_dimacs(out) == cycle(8)


def test_gen_to_file_edgelist(tmp_path, capsys):
    target = tmp_path / "g.txt"
    code, _, _ = run(capsys, "gen", "kneser:5,2", "-o", str(target),
                     "--output-format", "edgelist")
    assert code == 0
    assert len(target.read_text().strip().splitlines()) == 15


def test_gen_invalid_spec_exits_1(capsys):
    code, _, err = run(capsys, "gen", "cycle:2")
    assert code == 1
    assert "invalid input" in err


def test_solve_chi_json(capsys):
    code, out, _ = run(capsys, "solve", "chi", "--graph", "cycle:5",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == 3 and not data["exhausted"]


def test_solve_chid_text(capsys):
    code, out, _ = run(capsys, "solve", "chid", "--graph", "cycle:5")
    assert code == 0
    assert "chid = 5" in out


def test_solve_double_total_none(capsys):
    code, out, _ = run(capsys, "solve", "double-total", "--graph", "cycle:6")
    assert code == 0
    assert "no double total dominating set" in out


def test_solve_budget_exhausted_exits_2(capsys):
    code, out, _ = run(capsys, "solve", "chi", "--graph", "kneser:6,2",
                       "--budget", "5", "--format", "json")
    assert code == 2
    assert json.loads(out)["exhausted"] is True


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("DYNACHROME_BUDGET", "5")
    code, _, _ = run(capsys, "solve", "chi", "--graph", "kneser:6,2",
                     "--format", "json")
    assert code == 2


def test_solve_reads_graph_file(tmp_path, capsys):
    path = tmp_path / "c5.col"
    run(capsys, "gen", "cycle:5", "-o", str(path))
    code, out, _ = run(capsys, "solve", "chi", "--graph", str(path),
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == 3


def test_bounds_petersen(capsys):
    code, out, _ = run(capsys, "bounds", "--graph", "kneser:5,2",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    low = next(b for b in data["bounds"] if b["name"] == "low_max_degree")
    assert low["applicable"] and low["value"] == 4


def test_construct_kneser(capsys):
    code, out, _ = run(capsys, "construct", "kneser", "--m", "7", "--n", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["palette_size"] <= 5
    assert data["certificates"] == [{"check": "dynamic", "violations": 0}]
    assert data["gap"] <= 2


def test_construct_compose(capsys):
    code, out, _ = run(capsys, "construct", "compose", "--graph", "cycle:8",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["certificates"][0]["violations"] == 0


def test_construct_compose_cycle6_exits_1(capsys):
    code, _, err = run(capsys, "construct", "compose", "--graph", "cycle:6")
    assert code == 1
    assert "no double total dominating set" in err


def test_construct_balanced(capsys):
    code, out, _ = run(capsys, "construct", "balanced", "--graph",
                       "complete_bipartite:16,16", "--clamp-p",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["certificates"][0]["violations"] == 0


def test_construct_balanced_degenerate_exits_1(capsys):
    code, _, err = run(capsys, "construct", "balanced", "--graph",
                       "random_regular:12,3", "--seed", "1")
    assert code == 1
    assert "clamp" in err


def test_construct_product(capsys):
    code, out, _ = run(capsys, "construct", "product", "--graph", "cycle:8",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["certificates"][0]["violations"] == 0


def test_construct_product_cycle6_exits_1(capsys):
    code, _, err = run(capsys, "construct", "product", "--graph", "cycle:6")
    assert code == 1
    assert "not 2-colorable" in err


def test_verify_roundtrip(tmp_path, capsys):
    gpath = tmp_path / "c4.col"
    run(capsys, "gen", "cycle:4", "-o", str(gpath))
    good = tmp_path / "good.json"
    good.write_text(json.dumps(
        coloring_to_json_dict(cycle(4), Coloring.total([0, 1, 2, 3], 4))
    ))
    code, out, _ = run(capsys, "verify", "--graph", str(gpath),
                       "--coloring", str(good), "--check", "dynamic",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["violations"] == []

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(
        coloring_to_json_dict(cycle(4), Coloring.total([0, 1, 0, 1], 2))
    ))
    code, out, _ = run(capsys, "verify", "--graph", str(gpath),
                       "--coloring", str(bad), "--check", "dynamic",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {v["kind"] for v in data["violations"]} == {"monochromatic_neighborhood"}


def test_experiment_gnp_csv(capsys):
    code, out, _ = run(capsys, "experiment", "gnp-triangles", "--n", "12",
                       "--p", "0.5", "--trials", "3", "--seed", "1",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("trial,") and len(lines) == 4


def test_experiment_scan_text(capsys):
    code, out, _ = run(capsys, "experiment", "conjecture-scan",
                       "--family", "cubic", "--max-n", "8", "--trials", "4",
                       "--seed", "1")
    assert code == 0
    assert "max_gap" in out


def test_unknown_argument_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "chi"])  # missing required --graph
    assert exc.value.code == 1


def test_certification_failure_exits_3(capsys, monkeypatch):
    from dynachrome import CertificationError
    from dynachrome import cli as cli_module

    def explode(*args, **kwargs):
        raise CertificationError("simulated self-check failure")

    monkeypatch.setattr(cli_module.constructions, "kneser_dynamic_coloring", explode)
    code, _, err = run(capsys, "construct", "kneser", "--m", "7", "--n", "3")
    assert code == 3
    assert "internal verification failure" in err
