import json
import subprocess
import sys

import pytest

from digraph_census import format_edge_list, layered_tournaments, parse_edge_list
from digraph_census.cli import main
from digraph_census.digraph import directed_cycle


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text(format_edge_list(directed_cycle(4)))
    return str(p)


@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "c3.txt"
    p.write_text("3\n0 1\n1 2\n2 0\n")
    return str(p)


def test_census(capsys, c4_file):
    code, out, _ = run(capsys, "census", c4_file)
    r = json.loads(out)
    assert code == 0
    assert r["s4"] == 4 and r["residuals"] == [0] * 5
    assert r["bounds"][1]["rhs"] == {"num": 22, "den": 5}


def test_kfree_and_count(capsys, c4_file):
    code, out, _ = run(capsys, "kfree", c4_file, "--k", "3")
    assert code == 0 and json.loads(out)["k_free"] is True
    code, out, _ = run(capsys, "count", c4_file, "--s", "4", "--kind", "path")
    assert json.loads(out)["count"] == 4
    code, out, _ = run(capsys, "count", c4_file, "--s", "3", "--kind", "induced")
    assert json.loads(out)["count"] == 4


def test_gen_round_trip(capsys):
    code, out, _ = run(capsys, "gen", "layered", "--n", "8")
    assert code == 0 and parse_edge_list(out) == layered_tournaments(8)
    code, out, _ = run(capsys, "gen", "gbeta", "--n", "12", "--beta", "4")
    g = parse_edge_list(out)
    assert g.n == 12 and g.m == 48
    code, out, _ = run(capsys, "gen", "gbeta", "--n", "12", "--beta", "5", "--remove-x", "0,6")
    assert parse_edge_list(out).m == 58
    code, out, _ = run(capsys, "gen", "recursive", "--i", "2")
    assert parse_edge_list(out).n == 16


def test_cig_report_sources(capsys, tmp_path):
    code, out, _ = run(capsys, "cig-report", "gbeta:12:4")
    r = json.loads(out)
    assert code == 0 and r["p3"] == 108 and r["bound_16"]["slack"] == {"num": 0, "den": 1}
    code, out, _ = run(capsys, "cig-report", "gbeta:12:5:0:5,6:11")
    assert json.loads(out)["p3"] == 72
    code, out, _ = run(capsys, "cig-report", "extents:1,1,1,1")
    assert json.loads(out)["p3"] == 4
    p = tmp_path / "g.txt"
    p.write_text(format_edge_list(directed_cycle(5)))
    code, out, _ = run(capsys, "cig-report", str(p))
    assert json.loads(out)["extents"] == [1] * 5


def test_p4_report(capsys, c4_file):
    code, out, _ = run(capsys, "p4-report", c4_file)
    r = json.loads(out)
    assert code == 0 and (r["T"], r["squares"], r["P4"], r["N"]) == (4, 1, 4, 232)


def test_bounds(capsys, c4_file):
    code, out, _ = run(capsys, "bounds", c4_file)
    r = json.loads(out)
    assert code == 0
    assert r["classes"] == ["digon_free", "three_free", "circular_interval"]
    assert r["verdict"] == "pass"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "thomasse", "--n", "4")
    assert code == 0 and json.loads(out)["max"] == 4
    code, out, _ = run(capsys, "verify", "cig", "--n", "6")
    assert code == 0 and json.loads(out)["max"] == 12


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--objective", "p3", "--free", "2", "--n", "5",
                       "--steps", "10", "--seed", "3")
    r = json.loads(out)
    assert code == 0 and r["seed"] == 3 and len(r["trace"]) == 10


def test_failed_check_exits_one(capsys, monkeypatch, c4_file):
    from digraph_census import cli

    def broken(g, *, jobs=1):
        return {"residuals": [0, 1, 0, 0, 0]}

    monkeypatch.setattr(cli, "census_report", broken)
    code, _, err = run(capsys, "census", c4_file)
    assert code == 1 and "CHECK FAILED" in err


def test_input_errors_exit_two(capsys, tmp_path, triangle_file):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n0 1\n")
    code, _, err = run(capsys, "census", str(bad))
    assert code == 2 and "line 3" in err
    code, _, err = run(capsys, "census", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, err = run(capsys, "p4-report", triangle_file)
    assert code == 2 and "cycle of length at most 3" in err
    code, _, err = run(capsys, "cig-report", "gbeta:4:2")
    assert code == 2


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["search", "--objective", "p5", "--free", "2", "--n", "4", "--steps", "1", "--seed", "0"])
    assert exc.value.code == 2


def test_stdin(tmp_path):
    text = format_edge_list(directed_cycle(4))
    proc = subprocess.run(
        [sys.executable, "-m", "digraph_census", "census", "-"],
        input=text, capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["s4"] == 4


COMMANDS = [
    ["census", "{c4}", "--jobs", "2"],
    ["kfree", "{c4}", "--k", "4"],
    ["count", "{c4}", "--s", "3", "--kind", "walk"],
    ["gen", "gbeta", "--n", "16", "--beta", "5"],
    ["gen", "recursive", "--i", "2"],
    ["gen", "layered", "--n", "12"],
    ["cig-report", "gbeta:20:7"],
    ["p4-report", "{c4}"],
    ["bounds", "{c4}"],
    ["verify", "thomasse", "--n", "4", "--jobs", "2"],
    ["verify", "cig", "--n", "6"],
    ["search", "--objective", "p4", "--free", "3", "--n", "8", "--steps", "15", "--seed", "9", "--init", "layered"],
    ["search", "--objective", "p3", "--free", "2", "--n", "9", "--steps", "15", "--seed", "9", "--init", "cig"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_output_is_byte_identical_across_runs(capsys, c4_file, argv):
    argv = [a.format(c4=c4_file) for a in argv]
    outputs = []
    for _ in range(2):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
