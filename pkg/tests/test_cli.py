import csv
import io
import json
import subprocess
import sys

import pytest

from lensgem.cli import RunConfig, dispatch, main
from lensgem.graph import parse_gem
from lensgem.lens import ferri_crystallization


def _run(*args):
    return subprocess.run([sys.executable, "-m", "lensgem", *args], capture_output=True, text=True)


def test_build_invariants_roundtrip(tmp_path):
    f = tmp_path / "l21_8.gem"
    assert main(["build", "21", "8", "--out", str(f)]) == 0
    g, labels = parse_gem(f.read_text())
    lc = ferri_crystallization(21, 8)
    assert g == lc.graph and labels == lc.labels
    out = io.StringIO()
    assert dispatch(RunConfig("invariants", input=f, format="json"), out) == 0
    rep = json.loads(out.getvalue())
    assert rep["order"] == 28
    assert rep["bipartite"] and rep["contracted"] and rep["manifold"]
    assert rep["h1"] == "Z/21"
    assert rep["regular_genus"] == 3
    assert set(rep) == {"order", "bipartite", "contracted", "manifold", "g", "regular_genus", "h1"}


def test_gm_witness(tmp_path):
    f = tmp_path / "l.gem"
    f.write_text(ferri_crystallization(21, 8).to_text())
    out = io.StringIO()
    assert dispatch(RunConfig("gm", input=f, format="json", witness=True), out) == 0
    rep = json.loads(out.getvalue())
    assert rep["gm"] == 4
    assert rep["gm_witness"]["score"] == 4
    assert len(rep["gm_witness"]["leftover_labels"]) == 4


def test_code_command(tmp_path):
    f = tmp_path / "s.gem"
    f.write_text("gem 2\nc0: 1 0\nc1: 1 0\nc2: 1 0\nc3: 1 0\n")
    out = io.StringIO()
    assert dispatch(RunConfig("code", input=f), out) == 0
    assert out.getvalue() == "2|1,0|1,0|1,0|1,0\n"


def test_verify_exit_zero():
    r = _run("verify", "--pmax", "12")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "p,q,S,order,k_upper,gm,bound,bound_ok,h1_ok,symmetry_ok,sharp_forced"
    for row in csv.DictReader(lines):
        assert row["h1_ok"] == "true" and row["symmetry_ok"] == "true"
        assert row["bound_ok"] in ("true", "n/a")


def test_catalogue_command(tmp_path):
    assert main(["catalogue", "--max-order", "6", "--out", str(tmp_path / "cat")]) == 0
    assert (tmp_path / "cat" / "index.txt").exists()


@pytest.mark.parametrize("args", [[], ["frobnicate"], ["build", "x", "1"], ["verify"], ["gm"]])
def test_usage_errors(args):
    r = _run(*args)
    assert r.returncode == 2
    assert "usage" in r.stderr


def test_input_errors(tmp_path):
    assert _run("build", "6", "3").returncode == 2
    assert _run("invariants", str(tmp_path / "missing")).returncode == 2
    bad = tmp_path / "bad.gem"
    bad.write_text("gem 2\nc0: 1 0\n")
    assert _run("code", str(bad)).returncode == 2
    assert _run("verify", "--pmax", "5", "--jobs", "0").returncode == 2


def test_byte_identical_across_jobs(tmp_path):
    f = tmp_path / "l.gem"
    f.write_text(ferri_crystallization(34, 13).to_text())
    a = _run("gm", str(f), "--witness", "--format", "json", "--jobs", "1").stdout
    b = _run("gm", str(f), "--witness", "--format", "json", "--jobs", "3").stdout
    assert a == b and a
    assert _run("verify", "--pmax", "20", "--jobs", "1").stdout == _run("verify", "--pmax", "20", "--jobs", "4").stdout
