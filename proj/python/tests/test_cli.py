import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ.get("CHESSPLEX_CLI", "chessplex")
SCHEMA = json.loads(
    Path(os.environ.get("CHESSPLEX_SCHEMA", Path(__file__).parents[2] / "schema" / "report.schema.json")).read_text()
)


def run(*args, env=None):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=env)
    report = json.loads(proc.stdout)
    jsonschema.validate(report, SCHEMA)
    return proc.returncode, report


def test_connectivity_example():
    code, report = run("connectivity", "--m", 5, "--n", 2, "--nu", 1, "--s", 1)
    assert code == 0
    assert report["status"] == "verified"
    assert report["result"]["mu"] == 1
    assert report["result"]["verdict"] == "pass"


def test_tverberg_trials():
    code, report = run("tverberg", "--d", 3, "--r", 2, "--k", 1, "--s", 1, "--trials", 20, "--seed", 7)
    assert code == 0
    assert report["result"]["found"] == 20


def test_tverberg_below_bound_is_refuted():
    code, report = run("tverberg", "--d", 2, "--r", 2, "--k", 0, "--s", 1, "--trials", 5, "--seed", 1)
    assert code == 1
    assert report["status"] == "refuted"
    assert report["result"]["found"] == 0


def test_config_file(tmp_path):
    cfg = tmp_path / "square.json"
    cfg.write_text(json.dumps({"d": 2, "points": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]}))
    code, report = run("tverberg", "--r", 2, "--k", 1, "--s", 0, "--config", cfg)
    assert code == 0
    assert report["result"]["partition"]["witness"] == ["1/2", "1/2"]


@pytest.mark.parametrize(
    "args",
    [
        ["build", "--m", 4, "--n", 2, "--nu", 1, "--s", 1],
        ["build", "--m", 4, "--n", 2, "--caps", "2,1", "--symmetrize"],
        ["shell", "--m", 5, "--n", 2, "--nu", 1, "--s", 1],
        ["homology", "--m", 3, "--n", 2, "--caps", "1,1", "--fields", "Q,F2"],
        ["unavoidable", "--m", 4, "--n", 2, "--k", 1],
        ["antichain", "--m", 6, "--r", 2, "--nu", 1, "--s", 2],
        ["grid", "--preset", "fig1"],
    ],
)
def test_reports_validate(args):
    code, report = run(*args)
    assert code == 0
    assert report["command"] == args[0]


def test_errors_are_reported():
    code, report = run("build", "--m", 3)
    assert code == 2
    assert report["status"] == "error"
    code, report = run("homology", "--m", 3, "--n", 2, "--nu", 1, "--s", 0, "--fields", "F4")
    assert code == 2


def test_output_is_deterministic_across_threads(tmp_path):
    outs = []
    for threads in (1, 3):
        out = tmp_path / f"t{threads}.json"
        proc = subprocess.run(
            [CLI, "tverberg", "--d", "2", "--r", "3", "--k", "1", "--s", "1", "--trials", "3", "--seed", "5",
             "--threads", str(threads), "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        report = json.loads(out.read_text())
        jsonschema.validate(report, SCHEMA)
        outs.append(report["result"])
    assert outs[0] == outs[1]


def test_env_thread_default():
    env = dict(os.environ, CHESSPLEX_THREADS="2")
    code, report = run("grid", "--preset", "fig1", env=env)
    assert code == 0
