import io
import json
import subprocess
import sys

import pytest

from cocrit.cli import run
from cocrit.cocritical import SCHEMA
from cocrit.constructions import build_t3
from cocrit.graph6 import emit_graph6

SHARP = emit_graph6(build_t3(3, 13)[0])


def call(argv, capsys, monkeypatch, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_json(capsys, monkeypatch):
    code, out, _ = call(["construct", "--t", "3", "--k", "3", "--n", "13"], capsys, monkeypatch)
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == SCHEMA
    assert doc["edges"] == doc["formula_edges"] == 35
    assert doc["graph6"] == SHARP
    assert "meta" in doc


def test_no_meta_is_byte_identical(capsys, monkeypatch):
    argv = ["verify", "--t", "3", "--k", "3", "--no-meta"]
    first = call(argv, capsys, monkeypatch, SHARP + "\n")[1]
    second = call(argv, capsys, monkeypatch, SHARP + "\n")[1]
    assert first == second
    assert "timestamp" not in first


def test_text_renders_same_document(capsys, monkeypatch):
    argv = ["build-j", "--a", "2", "--b", "1", "--c", "2", "--no-meta"]
    doc = json.loads(call(argv, capsys, monkeypatch)[1])
    text = call(argv + ["--format", "text"], capsys, monkeypatch)[1]
    for key, val in doc.items():
        assert f"{key}: {json.dumps(val)}" in text


def test_out_dir(tmp_path, capsys, monkeypatch):
    code, _, _ = call(
        ["construct", "--t", "4", "--k", "3", "--n", "19", "--out-dir", str(tmp_path)], capsys, monkeypatch
    )
    assert code == 0
    assert (tmp_path / "graph.g6").read_text().strip()
    lines = (tmp_path / "coloring.txt").read_text().splitlines()
    assert len(lines) == 91
    assert json.loads((tmp_path / "plan.json").read_text())["n"] == 19


@pytest.mark.parametrize(
    "argv, stdin, code",
    [
        (["arrows", "--t", "3", "--k", "3"], "F~~~w\n", 0),  # K7
        (["arrows", "--t", "3", "--k", "3"], "E~~w\n", 1),  # K6
        (["verify", "--t", "3", "--k", "3"], SHARP, 0),
        (["verify", "--t", "3", "--k", "3"], "E~~w\n", 1),
        (["verify", "--t", "3", "--k", "3", "--nodes", "0"], SHARP, 2),
        (["colorings", "--t", "3", "--k", "3", "--mode", "exists"], "F~~~w\n", 1),
        (["colorings", "--t", "3", "--k", "3", "--mode", "count"], SHARP, 0),
        (["colorings", "--t", "3", "--k", "3", "--mode", "count", "--nodes", "1"], "E~~w\n", 2),
        (["audit", "--t", "3", "--k", "3"], SHARP, 0),
        (["saturated", "--t", "3"], "Bw\n", 1),
        (["saturated", "--t", "3"], "Cl\n", 0),  # C4
    ],
)
def test_exit_codes(argv, stdin, code, capsys, monkeypatch):
    got, out, _ = call(argv + ["--no-meta"], capsys, monkeypatch, stdin)
    assert got == code
    assert json.loads(out)["exit_code"] == code


def test_enumerate_count(capsys, monkeypatch):
    code, out, _ = call(["enumerate", "--n", "7", "--t", "3", "--k", "3", "--no-meta"], capsys, monkeypatch)
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 2 and doc["min_edges"] == 18


def test_search(capsys, monkeypatch):
    argv = ["search", "--t", "3", "--k", "3", "--n", "13", "--seed", "1", "--budget", "5000", "--no-meta"]
    code, out, _ = call(argv, capsys, monkeypatch)
    doc = json.loads(out)
    assert doc["found"] and doc["edges"] >= 35
    assert code == {"CoCritical": 0, "Unverified": 2}[doc["verdict"]]


def test_colorings_text_lines(capsys, monkeypatch):
    argv = ["colorings", "--t", "3", "--k", "3", "--mode", "enumerate", "--no-meta", "--format", "text"]
    code, out, _ = call(argv, capsys, monkeypatch, SHARP)
    assert code == 0
    edge_lines = [line.strip() for line in out.splitlines() if line.strip()[-2:] in (" R", " B")]
    assert len(edge_lines) == 35
    pairs = [tuple(map(int, line.split()[:2])) for line in edge_lines]
    assert pairs == sorted(pairs)


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["construct", "--t", "6", "--k", "3", "--n", "40"], "--t"),
        (["construct", "--t", "3", "--k", "2", "--n", "40"], "--k"),
        (["construct", "--t", "3", "--k", "3", "--n", "12"], "--n"),
        (["enumerate", "--n", "12", "--t", "3", "--k", "3"], "--n"),
        (["verify", "--t", "3", "--k", "3", "--jobs", "0"], "--jobs"),
        (["build-j", "--a", "1", "--b", "2"], "--b"),
        (["colorings", "--t", "3", "--k", "3", "--mode", "bogus"], "--mode"),
        (["verify", "--t", "3"], "--k"),
    ],
)
def test_usage_errors(argv, flag, capsys, monkeypatch):
    code, _, err = call(argv, capsys, monkeypatch)
    assert code == 64
    assert flag in err


def test_bad_graph6_is_usage_error(capsys, monkeypatch):
    code, _, err = call(["arrows", "--t", "3", "--k", "3"], capsys, monkeypatch, "B\x7f\n")
    assert code == 64


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("COCRIT_BUDGET_NODES", "0")
    code, out, _ = call(["verify", "--t", "3", "--k", "3", "--no-meta"], capsys, monkeypatch, SHARP)
    assert code == 2 and json.loads(out)["results"][0]["verdict"] == "Unverified"
    monkeypatch.setenv("COCRIT_BUDGET_NODES", "lots")
    code, _, err = call(["verify", "--t", "3", "--k", "3"], capsys, monkeypatch, SHARP)
    assert code == 64 and "COCRIT_BUDGET_NODES" in err


def test_in_file_and_module_entry(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(SHARP + "\n")
    proc = subprocess.run(
        [sys.executable, "-m", "cocrit", "verify", "--t", "3", "--k", "3", "--in", str(path), "--no-meta"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"][0]["verdict"] == "CoCritical"
