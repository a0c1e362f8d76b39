import json
import subprocess
import sys

import pytest

from finegrad.checks import parse_json, render_json, run_checks
from finegrad.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_count(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "count")
    assert code == 0
    body = json.loads(out)
    (check,) = body["checks"]
    assert check["details"]["total"] == 44 and check["status"] == "pass"
    assert set(check) == {"check_id", "source", "status", "details"}


def test_verify_grading(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "grading", "--name", "gamma7")
    assert code == 0
    assert json.loads(out)["checks"][0]["details"]["universal_group"] == "Z_2^5"


def test_expected_negative_is_a_pass(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "realform", "--name", "su40", "--grading", "gamma2")
    assert code == 0
    checks = {c["check_id"]: c for c in json.loads(out)["checks"]}
    assert checks["realform.su40.gamma2"]["details"]["result"] == "not determined"


def test_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "realform", "--name", "su31", "--grading", "gamma8")
    assert code == 1
    checks = {c["check_id"]: c for c in json.loads(out)["checks"]}
    bad = checks["realform.su31.gamma8"]
    assert bad["status"] == "fail"
    assert bad["details"]["failing_part"] == "L7" and bad["details"]["corrected_table_verifies"]


def test_markdown(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "displayed", "--format", "md")
    assert code == 0
    assert "| displayed.o.gamma5.split |" in out and "10 of 10 checks passed" in out


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "verify", "--scope", "bogus")[0] == 2
    assert run(capsys, "show", "grading", "gamma9")[0] == 2
    assert run(capsys, "--catalog", str(tmp_path / "missing.yaml"), "verify")[0] == 2
    bad = tmp_path / "c.yaml"
    bad.write_text("x: 1\n")
    assert run(capsys, "verify", "--catalog", str(bad))[0] == 2


def test_show(capsys):
    code, out, _ = run(capsys, "show", "grading", "gamma1")
    assert code == 0 and "13 parts" in out and "universal group: Z^3" in out
    code, out, _ = run(capsys, "show", "madgroup", "g3")
    assert "3 inner generator(s), 1 outer generator" in out
    code, out, _ = run(capsys, "show", "realform", "usp22")
    assert "real dimension 10" in out and "K (J)" in out


def test_json_round_trip_and_determinism(cat):
    a = run_checks(cat, "displayed", timestamp="T")
    b = run_checks(cat, "displayed", timestamp="T")
    assert render_json(a) == render_json(b)
    assert parse_json(render_json(a)) == a


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "finegrad", "verify", "--scope", "grading", "--name", "gamma2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stderr == ""
    assert json.loads(res.stdout)["summary"]["passed"] == 1
