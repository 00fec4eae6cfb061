import json
import subprocess
import sys

import jsonschema
import pytest

from skeindilog.cli import CEILING_ENV, main
from skeindilog.report import REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", [
    ["pentagon", "--max-degree", "4"],
    ["pentagon", "--algebra", "quantum-torus", "--max-degree", "4"],
    ["phi-pentagon", "--max-degree", "5"],
    ["identity-2-2"],
    ["ad-check", "--max-degree", "4", "--samples", "3"],
    ["jacobi", "--samples", "10"],
    ["homomorphism", "--max-degree", "3", "--samples", "5"],
    ["dilog-image", "--max-degree", "4"],
    ["expand", "--expr", "P[0,1]*P[1,0]"],
])
def test_json_reports_match_schema(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, REPORT_SCHEMA)
    assert payload["status"] == "pass"


def test_pentagon_text_report(capsys):
    code, out, _ = run(capsys, "pentagon", "--max-degree", "3", "--no-timing")
    assert code == 0
    assert "status     : PASS" in out
    assert "checked    : 10" in out
    assert "FAIL" not in out


def test_pentagon_json_counts(capsys):
    code, out, _ = run(capsys, "pentagon", "--max-degree", "6", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["bidegrees_checked"] == 28 and payload["failures"] == []


def test_expand_examples(capsys):
    assert run(capsys, "expand", "--expr", "P[0,1]*P[1,0]")[1] == \
        "P[1,0]*P[0,1] - (s - s^-1)*P[1,1]\n"
    assert run(capsys, "expand", "--expr", "1")[1] == "1\n"
    assert run(capsys, "expand", "--expr", "P[1,0]*P[0,1]-P[0,1]*P[1,0]")[1] == \
        "(s - s^-1)*P[1,1]\n"
    assert run(capsys, "expand", "--algebra", "quantum-torus",
               "--expr", "X[0,1]*X[1,0]")[1] == "s^-1*X[1,1]\n"
    pentagon = "Q[1,0]*Q[0,1] - Q[0,1]*Q[1,1]*Q[1,0]"
    assert run(capsys, "expand", "--expr", pentagon, "--max-degree", "5")[1] == "0\n"
    assert run(capsys, "expand", "--expr", "Q[1,0]*Qinv[1,0]")[1] == "1\n"


def test_expand_json_payload(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "P[2,2]/(s^2 - s^-2)",
                       "--format", "json", "--no-timing")
    payload = json.loads(out)
    assert code == 0 and payload["expression"] == "P[2,2]/(s^2 - s^-2)"
    assert payload["terms"] == [{"monomial": [[2, 2]], "coefficient": payload["terms"][0]["coefficient"]}]
    assert payload["elapsed_ms"] == 0


@pytest.mark.parametrize("argv, fragment", [
    (["expand", "--expr", "Q[1,0"], "position 5"),
    (["expand", "--expr", "Q[0,0]"], "error"),
    (["expand", "--expr", "1/P[1,0]"], "error"),
    (["expand", "--expr", "P[1,0]^-1"], "error"),
    (["expand", "--expr", "X[1,0]"], "quantum-torus"),
    (["expand"], "--expr"),
    (["pentagon", "--max-degree", "40"], "ceiling"),
    (["pentagon", "--max-degree", "-1"], "nonnegative"),
    (["jacobi", "--samples", "0"], "positive"),
])
def test_usage_errors_exit_2(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert fragment in err


def test_unknown_command_exit_2(capsys):
    code, _, err = run(capsys, "hexagon")
    assert code == 2 and "invalid choice" in err


def test_ceiling_override(capsys, monkeypatch):
    monkeypatch.setenv(CEILING_ENV, "2")
    assert run(capsys, "pentagon", "--max-degree", "3")[0] == 2
    monkeypatch.setenv(CEILING_ENV, "20")
    assert run(capsys, "expand", "--expr", "P[9,9]", "--max-degree", "18")[1] == "P[9,9]\n"
    monkeypatch.setenv(CEILING_ENV, "many")
    assert run(capsys, "identity-2-2")[0] == 2


def test_failing_check_exits_1(capsys, monkeypatch):
    from skeindilog import cli
    from skeindilog.report import VerificationReport

    def broken(config):
        r = VerificationReport("pentagon", "torus-skein", 1)
        r.record((1, 0), "P[1,0]")
        return r

    monkeypatch.setattr(cli, "run_check", broken)
    code, out, _ = run(capsys, "pentagon", "--max-degree", "1")
    assert code == 1 and "FAIL [1,0]: P[1,0]" in out and "status     : FAIL" in out


def test_no_timing_is_byte_reproducible(capsys):
    argv = ["homomorphism", "--max-degree", "3", "--samples", "6", "--seed", "5",
            "--format", "json", "--no-timing"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second and json.loads(first)["elapsed_ms"] == 0


def test_help_lists_grammar(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "Qinv[i,j]" in out and "phi-pentagon" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skeindilog", "identity-2-2", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
