import io
import json
import subprocess
import sys

import pytest

from curvedrift.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_bound_magic():
    code, out, _ = call("bound", "--family", "magic", "--n", "7")
    assert code == 0
    d = json.loads(out)
    assert (d["m"], d["r"], d["bound"]) == (4, 23, "1/23")


def test_bound_precondition():
    code, _, err = call("bound", "--family", "magic", "--n", "3")
    assert code == 1
    assert "n >= 4" in err


def test_bound_hyperelliptic():
    code, out, _ = call("bound", "--family", "hyperelliptic", "--g", "10")
    assert code == 0 and json.loads(out)["bound"] == "1/79"


def test_unknown_family_and_flag():
    assert call("bound", "--family", "nope", "--n", "7")[0] == 1
    assert call("bound", "--frobnicate")[0] == 1
    assert call("verify", "--suite", "nope")[0] == 1


def test_verify_occupancy():
    code, out, _ = call("verify", "--suite", "occupancy", "--n", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2].startswith("14: ")
    assert lines[-1] == "max disjoint exponent 14"


@pytest.mark.parametrize("suite", ["homology", "crosscheck"])
def test_verify_suites(suite):
    assert call("verify", "--suite", suite)[0] == 0


def test_verify_dynnikov_small():
    assert call("verify", "--suite", "dynnikov", "--n", "5")[0] == 0


def test_verify_failure_exit_code(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("{}")
    code, _, err = call("verify", "--suite", "homology", "--data", str(p))
    assert code == 2 and "verification failed" in err


def test_sweep_rows(tmp_path):
    out = tmp_path / "s.csv"
    code, _, _ = call("sweep", "--family", "magic", "--n-range", "4..12", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "group,param,lower,upper,consistent,provenance_id"
    assert len(lines) == 1 + 9
    assert all(len(l.split(",")) == 6 for l in lines)


def test_sweep_bad_range():
    assert call("sweep", "--family", "magic", "--n-range", "9..4")[0] == 1


def test_report_deterministic():
    a, b = call("report"), call("report")
    assert a[0] == 0 and a[1] == b[1]
    assert "." not in "".join(l.split(",")[3] for l in a[1].splitlines()[1:])


def test_catalog_lists_availability(monkeypatch, tmp_path):
    monkeypatch.setenv("CURVEDRIFT_DATA", str(tmp_path / "missing.json"))
    code, out, _ = call("catalog")
    assert code == 0
    assert "beta_magic: PAPER-TEXT" in out and "w6: UNAVAILABLE" in out
    assert "magic: spread [-1, 0]" in out


def test_console_entry_point():
    p = subprocess.run([sys.executable, "-m", "curvedrift.cli", "bound", "--family", "magic", "--n", "4"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["bound"] == "1/2"
