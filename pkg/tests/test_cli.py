import json
import os
import subprocess
import sys

import pytest

from raddepth.cli import main, run_command

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")
CASES = {
    "fdelta_A3.json": ["fdelta", "--preset", "A3", "--format", "json"],
    "partitions_N3.json": ["partitions", "--preset", "N3", "--format", "json"],
    "depth_A2.json": ["depth", "--preset", "A2", "--morphism", "pi:1", "--format", "json"],
    "radical_A2.json": ["radical", "--preset", "A2", "--format", "json"],
    "tilting_QH4.json": ["tilting", "--preset", "QH4", "--format", "json"],
}


@pytest.mark.parametrize("golden", sorted(CASES))
def test_reports_are_byte_stable(golden):
    _, code, out = run_command(CASES[golden])
    with open(os.path.join(GOLDEN, golden), encoding="utf-8") as fh:
        assert out + "\n" == fh.read()
    assert run_command(CASES[golden])[2] == out
    assert code == 0


@pytest.mark.parametrize("argv, code", [
    (["certify", "--preset", "A3"], 0),
    (["certify", "--preset", "kronecker", "--max-dim", "8"], 2),
    (["verify", "--preset", "A3", "--suite", "all"], 0),
    (["verify", "--preset", "A2", "--suite", "section4"], 0),
    (["verify", "--preset", "QH4", "--suite", "section4"], 1),
    (["qh", "--preset", "N3"], 1),
    (["basis", "--preset", "nope"], 1),
    (["basis", "--algebra", "/nonexistent.yaml"], 1),
    (["depth", "--preset", "A2", "--morphism", "zzz"], 1),
    (["chain", "--preset", "N3", "--module", "[1]", "--kind", "mono"], 0),
])
def test_exit_codes(argv, code):
    assert run_command(argv)[1] == code


def test_values_in_reports():
    rep = run_command(["depth", "--preset", "N3", "--morphism", "pi:v"])[0]
    assert rep["result"]["depth"] == 2
    rep = run_command(["depth", "--preset", "A3", "--morphism", "beta:3"])[0]
    assert rep["result"]["depth"] == 2
    rep = run_command(["fdelta", "--preset", "A3"])[0]["result"]
    assert (rep["p_delta"], rep["q_delta"]) == (2, 2)
    rep = run_command(["indec", "--preset", "N3"])[0]["result"]
    assert rep["count"] == 3


def test_algebra_file(tmp_path):
    p = tmp_path / "a2.yaml"
    p.write_text("vertices: [x, y]\narrows: [{name: f, from: x, to: y}]\n")
    rep, code, out = run_command(["partitions", "--algebra", str(p), "--format", "json"])
    assert code == 0
    assert json.loads(out) == rep


def test_main_prints(capsys):
    assert main(["basis", "--preset", "A1"]) == 0
    assert "dim: 1" in capsys.readouterr().out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "raddepth", "basis", "--preset", "A2",
                          "--format", "json"], capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["result"]["dim"] == 3
