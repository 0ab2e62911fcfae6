import json
import os
import pathlib
import subprocess

import pytest

jsonschema = pytest.importorskip("jsonschema")

ROOT = pathlib.Path(__file__).resolve().parents[2]
CLI = os.environ.get("PPZ_CLI", str(ROOT / "build" / "ppz"))
SCHEMAS = pathlib.Path(os.environ.get("PPZ_SCHEMA_DIR", ROOT / "schemas"))
DATA = pathlib.Path(os.environ.get("PPZ_DATA_DIR", ROOT / "data"))

pytestmark = pytest.mark.skipif(not pathlib.Path(CLI).exists(), reason="ppz CLI not built")


def run(*args, cwd=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, cwd=cwd)


def run_json(command, *args, cwd=None):
    proc = run("--output", "json", *args, cwd=cwd)
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    schema = json.loads((SCHEMAS / f"{command}.schema.json").read_text())
    jsonschema.validate(doc, schema)
    return doc


def test_count_csv_and_cache(tmp_path):
    args = ["--cache-dir", str(tmp_path / "cache"), "count", "--two-r", "2,6", "--checkpoints", "1e3,1e4"]
    cold = run(*args)
    warm = run(*args)
    assert cold.returncode == 0 and warm.returncode == 0
    assert cold.stdout == warm.stdout
    assert "35" in cold.stdout and "411" in cold.stdout
    assert any((tmp_path / "cache").iterdir())


def test_count_json(tmp_path):
    doc = run_json("count", "--cache-dir", str(tmp_path), "count", "--two-r", "2,4", "--checkpoints", "1000")
    assert doc["rows"][0]["counts"] == [35]
    assert doc["rows"][1]["counts"] == [41]


def test_constants_json():
    doc = run_json("constants", "constants", "--max-r", "15")
    assert abs(doc["C2"] - 0.6601618) < 5e-8
    assert doc["rows"][14]["ratio"] == "8/3"


def test_kernel_json():
    doc = run_json("kernel", "kernel", "--type", "jackson", "--lambda", "1", "--eval-mellin", "0,0")
    assert doc["rows"][0]["value_re"] == 1.0


def test_series_json():
    doc = run_json("series", "series", "--op", "vlambda", "--lambda", "2", "--s", "1,0")
    assert doc["value_re"] == 0.0 and doc["value_im"] == 0.0
    doc = run_json("series", "series", "--op", "d0pole", "--deltas", "0.25", "--max-terms", "100000")
    assert doc["rows"][0]["model_valid"] is True


def test_zero_commands_json():
    zeros = str(DATA / "zeros_10k.txt")
    doc = run_json("zerosum", "--zeros-file", zeros, "zerosum", "--op", "sigma1", "--s", "0.7,0", "--count", "100")
    assert doc["assumptions"]["zero_real_part"] == 0.5
    doc = run_json("paircorr", "--zeros-file", zeros, "paircorr", "--alpha", "1", "--count", "500")
    assert doc["zeros_used"] == 500


def test_verify_json():
    doc = run_json("verify", "verify", "--suite", "kernels")
    assert doc["passed"] is True
    assert [r["criterion"] for r in doc["results"]] == [5, 10]


def test_exit_codes(tmp_path):
    assert run("count", "--two-r", "3", "--cache-dir", str(tmp_path)).returncode == 2
    assert run("verify", "--suite", "zeros").returncode == 2
    assert run("--zeros-file", str(tmp_path / "missing.txt"), "paircorr", "--alpha", "1").returncode == 2
    assert run("kernel", "--type", "gauss").returncode == 2
    assert run("no-such-command").returncode == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("14.13\nnot-a-number\n")
    assert run("--zeros-file", str(bad), "zerosum", "--op", "sigma1", "--count", "1").returncode == 2
    assert run("zerosum", "--op", "sigma1", "--zeros-file", str(DATA / "zeros_10k.txt"),
               "--count", "100000000").returncode == 3
