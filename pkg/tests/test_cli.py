import json
import subprocess
import sys
from pathlib import Path

import pytest

from plokit.cli import main

FIXTURES = Path(__file__).parent / "fixtures"
A = "0,0 1/2,1/4 3/4,1/2 1,1"
B = "0,0 1/4,1/4 3/8,5/16 7/16,3/8 1/2,1/2 1,1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "-m", A, "5/8", "1/2")
    assert code == 0
    assert out == "(5/8)g1 = 3/8\n(1/2)g1 = 1/4\n"


def test_compose_inverse_is_identity(capsys):
    code, out, _ = run(capsys, "compose", "-m", A, "-m", "0,0 1/4,1/2 1/2,3/4 1,1")
    assert (code, out) == (0, "0,0 1,1\n")


def test_orbitals_json(capsys):
    code, out, _ = run(capsys, "orbitals", "-m", B, "--format", "json")
    assert code == 0
    assert "1/4" in out and "1/2" in out
    json.loads(out)


def test_chains_detect_and_search(capsys):
    code, out, _ = run(capsys, "chains", "--in", str(FIXTURES / "crossing_pair.json"))
    assert code == 0 and "overlap (1/4, 3/4)" in out
    code, out, _ = run(capsys, "chains", "--in", str(FIXTURES / "nested_tower_4.json"), "--radius", "2")
    assert code == 0 and "does not prove" in out


def test_chains_cap_exit_code(capsys):
    code, _, err = run(capsys, "chains", "--in", str(FIXTURES / "nested_tower_4.json"), "--radius", "4", "--cap", "10")
    assert code == 3 and err


def test_towers_and_fundamental(capsys):
    code, out, _ = run(capsys, "towers", "--in", str(FIXTURES / "nested_tower_4.json"))
    assert code == 0 and out.count("<") == 3
    code, out, _ = run(capsys, "fundamental", "3/8", "-m", B)
    assert code == 0 and "[5/16, 3/8)" in out


def test_witness_bounce_corners(capsys):
    code, out, _ = run(capsys, "witness", "--depth", "2")
    assert code == 0 and "(0, 3/16)" in out
    code, out, _ = run(capsys, "bounce", "-m", B, "-m", "0,0 1,1")
    assert (code, out) == (0, "1/4\n")
    code, out, _ = run(capsys, "corners", "--in", str(FIXTURES / "crossing_pair.json"))
    assert (code, out) == (0, "7/12\n")


def test_phi(capsys):
    code, out, _ = run(capsys, "phi", "-m", A, "-m", "0,0 1/2,1/3 1,1", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["distinct_codes"] == 2 and rep["collisions"] == []


@pytest.mark.parametrize(
    "args, lines",
    [
        (["model-bump"], [A]),
        (["one-bump", "1/4", "1/2"], [B]),
        (["crossing-pair"], 2),
        (["nested-tower", "3"], 3),
        (["wreath", "5/16", "3/8", "1/4", "1/2"], 2),
    ],
)
def test_build(capsys, args, lines):
    code, out, _ = run(capsys, "build", *args)
    assert code == 0
    got = out.splitlines()
    assert got == lines if isinstance(lines, list) else len(got) == lines


def test_build_json_matches_fixture(capsys):
    code, out, _ = run(capsys, "build", "crossing-pair", "--format", "json")
    assert code == 0
    assert out == (FIXTURES / "crossing_pair.json").read_text(encoding="utf-8")


def test_svg_to_file(capsys, tmp_path):
    target = tmp_path / "g.svg"
    code, out, _ = run(capsys, "svg", "--in", str(FIXTURES / "crossing_pair.json"), "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8").count("<polyline") == 2


def test_verify_exit_and_formats(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "io", "--seed", "1", "--size", "5")
    assert code == 0 and out.endswith("all checks passed\n")
    code, out, _ = run(capsys, "verify", "--suite", "wreath", "--format", "json")
    assert code == 0 and json.loads(out)["passed"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "-m", "0,0 1/2 1,1", "1/2"],
        ["eval", "-m", "0,1/4 1,1", "1/2"],
        ["orbitals"],
        ["nosuchcommand"],
        ["verify", "--suite", "nope"],
        ["build", "one-bump", "1/4"],
        ["orbitals", "--in", "/nonexistent/file.json"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "eval", "-m", "0,0 1/2 1,1", "1/2")
    assert code == 1 and "line 1, column 5" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "plokit", "eval", "-m", A, "3/4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "(3/4)g1 = 1/2\n"


def test_failed_verification_exits_2(capsys, monkeypatch):
    from plokit import verify

    monkeypatch.setitem(verify.SUITES, "io", lambda rng, size: [verify.Check("broken", False, 1)])
    code, out, _ = run(capsys, "verify", "--suite", "io")
    assert code == 2 and "SOME CHECKS FAILED" in out
