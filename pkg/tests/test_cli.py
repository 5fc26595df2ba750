from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from lorenz_fiber.cli import FIELDS, main


def run(*args: str, env: dict | None = None) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "lorenz_fiber", *args],
                          capture_output=True, text=True, env=env)


def call(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_hopf(capsys):
    code, out, _ = call(capsys, "analyze", "--columns", "1")
    rec = json.loads(out)
    assert code == 0
    assert (rec["components"], rec["euler"], rec["betti1"], rec["cyclotomic"]) == (2, 0, 1, True)
    assert rec["H"] == [[1]] and rec["alexander"] == [-1, 1] and rec["rho"] == 1.0
    assert rec["word"] == [2, 1, 3, 2]


def test_analyze_trefoil(capsys):
    code, out, _ = call(capsys, "analyze", "--columns", "2", "--matrices")
    rec = json.loads(out)
    assert rec["rho"] == 1.0 and rec["char_poly"] == [1, -1, 1]
    assert rec["V"] == [[-1, -1], [0, -1]] and rec["J"] == [[0, -1], [1, 0]]


def test_analyze_text_and_json_input(tmp_path, capsys):
    f = tmp_path / "d.json"
    f.write_text('{"columns": [3, 2]}')
    code, out, _ = call(capsys, "analyze", str(f), "--format", "text", "--matrices")
    assert code == 0
    assert out.splitlines()[0].split() == ["columns", "[3,", "2]"]
    assert "H_inv:" in out


@pytest.mark.parametrize("args,needle", [
    (("analyze", "--columns", "0"), "columns must be ≥ 1"),
    (("analyze", "--columns", "2,3"), "columns"),
    (("analyze", "--columns", "x"), "columns"),
    (("enumerate", "--b", "0", "--k-max", "1", "--l", "1"), "invalid family"),
    (("enumerate", "--b", "2", "--k-max", "1", "--l", "3..2"), "empty range"),
])
def test_usage_errors(capsys, args, needle):
    code, out, err = call(capsys, *args)
    assert code == 2 and out == "" and needle in err


def test_argparse_errors_exit_2():
    assert run("verify", "bogus").returncode == 2
    assert run("frobnicate").returncode == 2
    r = run("analyze", "--columns", "0")
    assert r.returncode == 2 and "columns must be ≥ 1" in r.stderr and r.stdout == ""


def test_enumerate_csv(capsys):
    code, out, _ = call(capsys, "enumerate", "--b", "1", "--k-max", "0", "--l", "1..3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and out.splitlines()[0] == ",".join(FIELDS)
    assert [r["columns"] for r in rows] == ["[1]", "[2]", "[3]"]
    assert all(r["cyclotomic"] == "true" for r in rows)
    code, out, _ = call(capsys, "enumerate", "--b", "2", "--k-max", "2", "--l", "2")
    assert len(out.splitlines()) == 4


def test_enumerate_json_round_trip(capsys):
    _, js, _ = call(capsys, "enumerate", "--b", "2", "--k-max", "2", "--l", "2..6", "--format", "json")
    _, cs, _ = call(capsys, "enumerate", "--b", "2", "--k-max", "2", "--l", "2..6", "--format", "csv")
    recs = [json.loads(line) for line in js.splitlines()]
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert len(recs) == len(rows) == 15
    for rec, row in zip(recs, rows):
        for k in ("b", "l", "k", "cells", "strands", "crossings", "components", "euler", "betti1"):
            assert str(rec[k]) == row[k]
        for k in ("rho", "rho_err", "mahler", "bound", "margin"):
            if rec[k] is None:
                assert row[k] == ""
            else:
                assert float(row[k]) == rec[k]
        if rec["k"] == 2:
            assert rec["margin"] >= 0
    keys = [(r["l"], r["k"], r["columns"]) for r in recs]
    assert keys == sorted(keys)


def test_table(capsys):
    code, out, _ = call(capsys, "table", "--b", "2", "--k-max", "1", "--l", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3 and lines[0].split()[0] == "columns"


def test_threads_env_does_not_change_output(monkeypatch, capsys):
    args = ("enumerate", "--b", "2", "--k-max", "3", "--l", "2..3")
    monkeypatch.setenv("LORENZ_FIBER_THREADS", "1")
    _, one, _ = call(capsys, *args)
    monkeypatch.setenv("LORENZ_FIBER_THREADS", "4")
    _, four, _ = call(capsys, *args)
    assert one == four


def test_verify_suites(tmp_path, capsys):
    code, out, _ = call(capsys, "verify", "crossroute", "--max-cells", "10")
    assert code == 0 and json.loads(out)["violations"] == 0
    code, out, _ = call(capsys, "verify", "bound", "--b", "2..3", "--k-max", "4", "--l", "2..4")
    assert code == 0
    report = tmp_path / "r.json"
    code, out, _ = call(capsys, "verify", "lemmas", "--b", "2", "--k-max", "3", "--l", "2..5",
                        "--zone", "widened", "--report", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert data["diagrams"] == len(data["records"]) > 0
    # the literal external-cell statement has counterexamples (see README)
    code, out, _ = call(capsys, "verify", "lemmas", "--b", "2", "--k-max", "3", "--l", "2..5")
    assert code == 1 and json.loads(out)["violations"] > 0
