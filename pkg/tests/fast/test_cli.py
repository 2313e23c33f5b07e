"""Tests for the hopfkit command line interface via subprocess."""

import json
from pathlib import Path

import pytest

try:
    from ..common.algebra_utils import run_cli
except ImportError:
    import sys

    sys.path.insert(0, str(Path(__file__).parent.parent))
    from common.algebra_utils import run_cli

pytestmark = pytest.mark.fast


@pytest.fixture
def sweedler_file(tmp_path: Path) -> Path:
    path = tmp_path / "sweedler.json"
    result = run_cli("examples", "emit", "sweedler", "--out", path)
    assert result.returncode == 0, result.stderr
    return path


def test_help() -> None:
    result = run_cli("--help")
    assert result.returncode == 0
    assert "structure-theorem" in result.stdout
    assert "HOPFKIT_MAX_DIM" in result.stdout


def test_missing_command_is_a_usage_error() -> None:
    assert run_cli().returncode == 1


def test_emit_then_verify(sweedler_file: Path) -> None:
    doc = json.loads(sweedler_file.read_text())
    assert doc["kind"] == "quasi-hopf" and doc["name"] == "sweedler"
    result = run_cli("verify", sweedler_file)
    assert result.returncode == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["verdict"] == "pass"
    assert "elapsed" not in report
    assert {check["verdict"] for check in report["checks"]} == {"pass"}
    # the human summary goes to stderr
    assert "PASS" in result.stderr


def test_verify_reports_equation_tags(tmp_path: Path) -> None:
    path = tmp_path / "twisted.json"
    assert run_cli("examples", "emit", "quasi-kz2-twisted", "--out", path).returncode == 0
    result = run_cli("verify", path)
    assert result.returncode == 0, result.stderr
    report = json.loads(result.stdout)
    assert len(report["identities"]) == 6
    assert [entry["id"] for entry in report["identities"]] == ["q1", "q2", "q3", "q4", "q5", "q6"]
    assert {entry["verdict"] for entry in report["identities"]} == {"pass"}
    # checks without an equation tag are still listed
    assert any("tag" not in check for check in report["checks"])


def test_verify_text_and_timing(sweedler_file: Path) -> None:
    result = run_cli("verify", sweedler_file, "--format", "text")
    assert result.returncode == 0
    assert result.stdout.startswith("sweedler (quasi-hopf): PASS")
    timed = run_cli("verify", sweedler_file, "--timing")
    assert json.loads(timed.stdout)["elapsed"] >= 0


def test_verify_kind_must_match(sweedler_file: Path) -> None:
    assert run_cli("verify", sweedler_file, "--kind", "quasi-hopf").returncode == 0
    result = run_cli("verify", sweedler_file, "--kind", "weak-hopf")
    assert result.returncode == 1
    assert result.stderr.startswith("Error:")


def test_broken_file_exits_with_failure(tmp_path: Path) -> None:
    path = tmp_path / "twisted.json"
    assert run_cli("examples", "emit", "quasi-kz2-twisted", "--out", path).returncode == 0
    doc = json.loads(path.read_text())
    doc["tensors"]["phi_inv"][0][1][1] = "2/1"
    path.write_text(json.dumps(doc))
    result = run_cli("verify", path)
    assert result.returncode == 2
    report = json.loads(result.stdout)
    assert report["verdict"] == "fail"
    failed = [check for check in report["checks"] if check["verdict"] == "fail"]
    inverse = [check for check in failed if check["identity"] == "associator-inverse"]
    assert inverse and "witness" in inverse[0]
    assert "tag" not in inverse[0]


def test_malformed_and_missing_files(tmp_path: Path) -> None:
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": 1, "kind": "quasi-hopf"}')
    result = run_cli("verify", bad)
    assert result.returncode == 1
    assert "Error:" in result.stderr and "bad.json" in result.stderr
    assert run_cli("verify", tmp_path / "absent.json").returncode == 1


def test_dimension_limit(sweedler_file: Path, tmp_path: Path) -> None:
    result = run_cli("verify", sweedler_file, env={"HOPFKIT_MAX_DIM": "3"})
    assert result.returncode == 1
    assert "HOPFKIT_MAX_DIM" in result.stderr
    assert run_cli("verify", sweedler_file, env={"HOPFKIT_MAX_DIM": "4"}).returncode == 0
    assert run_cli("verify", sweedler_file, env={"HOPFKIT_MAX_DIM": "many"}).returncode == 1
    emitted = run_cli("examples", "emit", "sweedler", "--out", tmp_path / "x.json", env={"HOPFKIT_MAX_DIM": "2"})
    assert emitted.returncode == 1


def test_emit_parameters_and_field(tmp_path: Path) -> None:
    path = tmp_path / "group.json"
    result = run_cli("examples", "emit", "group-algebra", "--param", "n=3", "--field", "prime:5", "--out", path)
    assert result.returncode == 0, result.stderr
    doc = json.loads(path.read_text())
    assert doc["field"] == {"kind": "prime", "p": 5}
    assert len(doc["basis"]) == 3
    assert run_cli("verify", path).returncode == 0


@pytest.mark.parametrize(
    "args",
    [
        ["examples", "emit", "taft-algebra"],
        ["examples", "emit", "sweedler", "--param", "n=2"],
        ["examples", "emit", "sweedler", "--param", "n"],
        ["examples", "emit", "sweedler", "--field", "prime:4"],
        ["examples", "emit", "sweedler", "--field", "prime:2"],
    ],
)
def test_emit_errors(tmp_path: Path, args: list[str]) -> None:
    result = run_cli(*args, "--out", tmp_path / "out.json")
    assert result.returncode == 1
    assert not (tmp_path / "out.json").exists()


def test_examples_list() -> None:
    result = run_cli("examples", "list")
    assert result.returncode == 0
    listing = json.loads(result.stdout)
    names = [entry["name"] for entry in listing]
    assert names == sorted(names)
    groupoid = next(entry for entry in listing if entry["name"] == "groupoid")
    assert groupoid["kind"] == "weak-hopf"
    assert groupoid["defaults"] == {"objects": 2, "order": 1}


def test_examples_list_text() -> None:
    result = run_cli("examples", "list", "--format", "text")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert any(line.startswith("sweedler ") for line in lines)
    assert any("objects=2 order=1" in line for line in lines)


def test_log_level(sweedler_file: Path) -> None:
    result = run_cli("verify", sweedler_file, "--log-level", "INFO")
    assert result.returncode == 0
    assert "INFO: verified sweedler" in result.stderr
    quiet = run_cli("verify", sweedler_file)
    assert "INFO:" not in quiet.stderr
    assert run_cli("verify", sweedler_file, "--log-level", "LOUD").returncode == 1
