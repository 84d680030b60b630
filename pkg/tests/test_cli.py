from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from c7planar.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main
from c7planar.embedding import Embedding
from conftest import constructed

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv, golden", [
    (["peel", str(DATA / "k4.edges")], "peel_k4.txt"),
    (["export-dot", str(DATA / "k4.edges")], "dot_k4.txt"),
    (["audit", str(DATA / "long_face.rot")], "audit_long_face.txt"),
    (["search", "--n", "5"], "search_n5.txt"),
    (["normalize", str(DATA / "uniform.rot")], "normalize_uniform.txt"),
])
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == (GOLDEN / golden).read_text()


def test_construct_writes_rotation_file(capsys, tmp_path):
    dest = tmp_path / "g.rot"
    code, out, _ = run(capsys, "construct", "--k", "2", "--out", str(dest))
    assert code == EXIT_OK
    assert out == (GOLDEN / "construct_k2.txt").read_text()
    assert dest.read_text() == (GOLDEN / "construct_k2.rot").read_text()
    assert Embedding.from_text(dest.read_text()) == constructed(2)


def test_construct_stdout_and_skeleton(capsys, tmp_path):
    code, out, err = run(capsys, "construct", "--k", "2")
    assert code == EXIT_OK and out == constructed(2).to_text()
    assert err.startswith("n=110 e=276 tight=true")
    code, _, err = run(capsys, "construct", "--k", "3", "--skeleton", "--dot", str(tmp_path / "s.dot"))
    assert code == EXIT_OK and "face_lengths=8" in err
    assert (tmp_path / "s.dot").read_text().startswith("graph G {")


def test_construct_round_trip_verifies(capsys, tmp_path):
    dest = tmp_path / "g.rot"
    run(capsys, "construct", "--k", "3", "--out", str(dest))
    code, out, _ = run(capsys, "verify", str(dest))
    assert code == EXIT_OK
    assert out.strip() == "n=152 e=384 tight=true planar=true c7_free=true k4_free=true"


def test_verify_violation_exit(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "k4.edges"))
    assert code == EXIT_VIOLATION
    assert out.strip() == "n=4 e=6 tight=false planar=true c7_free=true k4_free=false"


def test_nonplanar_input_is_inapplicable(capsys):
    code, out, _ = run(capsys, "audit", str(DATA / "k5.edges"))
    assert code == EXIT_OK
    assert out == "# input: inapplicable\ninapplicable: nonplanar\n"


def test_normalize_writes_output(capsys, tmp_path):
    dest = tmp_path / "n.rot"
    code, _, _ = run(capsys, "normalize", str(DATA / "uniform.rot"), "--out", str(dest))
    assert code == EXIT_OK
    code, out, _ = run(capsys, "audit", str(dest))
    assert code == EXIT_OK and "# dual-count: pass" in out


def test_decompose_reports(capsys):
    code, out, _ = run(capsys, "decompose", str(DATA / "long_face.rot"))
    assert code == EXIT_OK
    assert "k1: 8 >= 0 info" in out and "face 20 length 8: 0 <= 0 pass" in out


def test_parse_error_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("3 2\n0 1\n0 9\n")
    code, _, err = run(capsys, "verify", str(bad))
    assert code == EXIT_USAGE
    assert err.startswith(f"error: {bad}: line 3:")


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "search", "--n", "12")[0] == EXIT_USAGE
    assert run(capsys, "construct", "--k", "1")[0] == EXIT_USAGE
    assert run(capsys, "verify", str(tmp_path / "missing"))[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE


def test_deterministic(capsys):
    first = run(capsys, "audit", str(DATA / "long_face.rot"))
    assert run(capsys, "audit", str(DATA / "long_face.rot")) == first


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "c7planar", "verify", str(DATA / "k4.edges")],
                         capture_output=True, text=True)
    assert res.returncode == EXIT_VIOLATION and "k4_free=false" in res.stdout
