import json
import subprocess
import sys
from pathlib import Path

import pytest

from txygenus.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_compute_cp1(capsys):
    code, report, _ = run(capsys, "compute", DATA / "cp1.json")
    assert code == 0
    assert report["signature"] == 0 and report["todd"] == 1
    assert report["chi"] == [1, -1] and report["rigid"] is True


def test_compute_cp2(capsys):
    code, report, _ = run(capsys, "compute", DATA / "cp2.json")
    assert code == 0
    assert (report["signature"], report["euler"], report["top_chern"]) == (1, 3, 3)


def test_compute_single_point_not_rigid(capsys):
    code, report, err = run(capsys, "compute", DATA / "single_point.json")
    assert code == 1
    assert report["rigid"] is False
    assert "not rigid" in err


def test_compute_missing_file(capsys, tmp_path):
    code, report, err = run(capsys, "compute", tmp_path / "nope.json")
    assert code == 2 and report is None and "no such file" in err


def test_malformed_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"half_dim": 1, "points": [{"weights": [0], "sign": 1}]}))
    for verb in ("compute", "rigidity", "certify"):
        code, report, _ = run(capsys, verb, bad)
        assert code == 2 and report is None


def test_rigidity_examples(capsys):
    code, report, _ = run(capsys, "rigidity", DATA / "cp1.json")
    assert code == 0 and report == {"rigid": True, "constant": [[0, 1, "-1"], [1, 0, "1"]]}
    code, report, _ = run(capsys, "rigidity", DATA / "single_point.json")
    assert code == 1 and report["rigid"] is False
    code, report, _ = run(capsys, "rigidity", DATA / "cancelling_pair.json")
    assert code == 0 and report == {"rigid": True, "constant": []}


def test_certify_n4_single_point(capsys):
    code, cert, _ = run(capsys, "certify", DATA / "n4_single.json")
    assert code == 0
    assert cert["failing_index"] == 1
    assert cert["defects"][0] == {"l": 1, "status": "nonzero"}
    assert cert["verdict"].startswith("impossible")


def test_certify_cp2_needs_force(capsys):
    code, cert, err = run(capsys, "certify", DATA / "cp2.json")
    assert code == 2 and cert is None and "force" in err
    code, cert, _ = run(capsys, "certify", "--force", DATA / "cp2.json")
    assert cert["forced"] is True and code in (0, 1)


def test_certify_empty_is_bounding(capsys):
    code, cert, _ = run(capsys, "certify", DATA / "empty4.json")
    assert code == 0
    assert cert["m"] == 0 and cert["verdict"].startswith("bounding")


@pytest.mark.parametrize("n", [2, 4])
def test_scan_examples(capsys, n):
    code, report, err = run(capsys, "scan", "--half-dim", n, "--max-points", 2, "--weight-bound", 2)
    assert code == 0 and report["violations"] == []
    assert "chunk" in err


@pytest.mark.parametrize(
    "flags",
    [
        ["--half-dim", 2, "--max-points", 2, "--weight-bound", 0],
        ["--half-dim", 0, "--max-points", 2, "--weight-bound", 2],
        ["--half-dim", 2, "--max-points", 2, "--weight-bound", 2, "--jobs", 0],
        ["--half-dim", "two", "--max-points", 2, "--weight-bound", 2],
        ["--half-dim", 2],
    ],
)
def test_scan_bad_flags(capsys, flags):
    code, report, _ = run(capsys, "scan", *flags)
    assert code == 2 and report is None


def test_no_verb_is_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_output_is_byte_stable():
    cmd = [sys.executable, "-m", "txygenus", "compute", str(DATA / "s6_type.json")]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["chi"] == [0, 1, -1, 0]
    scan = [sys.executable, "-m", "txygenus", "scan", "--quiet", "--half-dim", "3",
            "--max-points", "2", "--weight-bound", "2"]
    outs = {subprocess.run(scan + ["--jobs", j], capture_output=True).stdout for j in ("1", "2")}
    assert len(outs) == 1
