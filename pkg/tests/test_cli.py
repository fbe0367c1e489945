import json
import subprocess
import sys

import pytest

from fekete.cli import Report, RunConfig, UsageError, run

F23 = "1 2 3 4 3 4 3 4 5 4 3 4 5 4 3 4 3 4 3 2 1"


def ok(argv, environ=None):
    code, out, err = run(argv, environ or {})
    assert code == 0, err
    return out


def as_report(argv, environ=None):
    return Report.from_json(ok(argv + ["--format", "json"], environ))


def test_poly_text():
    assert ok(["poly", "--p", "7", "--which", "g"]) == "-1 2 1"
    assert ok(["poly", "--p", "23", "--which", "f"]) == F23


@pytest.mark.parametrize("p", ["9", "3", "5", "2", "1"])
def test_poly_rejects_bad_p(p):
    code, out, err = run(["poly", "--p", p], {})
    assert code == 2 and out == ""
    assert "usage error" in err


def test_degenerate_note():
    assert "degenerate" in run(["poly", "--p", "5"], {})[2]


def test_values_table():
    rep = as_report(["values"])
    assert [r[0] for r in rep.rows] == [7, 11, 13, 17, 19, 23]
    assert [r[1:6] for r in rep.rows][3] == [-6, 1, -2, -3, 34]
    assert all(r[-1] for r in rep.rows)
    assert as_report(["values", "--p", "17"]).rows[0][1:6] == [-6, 1, -2, -3, 34]


def test_values_empty_range():
    rep = as_report(["values", "--p-min", "24", "--p-max", "28"])
    assert rep.rows == [] and rep.ok


def test_json_round_trip():
    rep = as_report(["modp", "--p", "13"])
    assert Report.from_json(rep.to_json()) == rep
    assert rep.rows[0][1:3] == [6, 4]


def test_csv_and_text_formats():
    csv_out = ok(["modp", "--p-min", "7", "--p-max", "13", "--format", "csv"])
    lines = csv_out.splitlines()
    assert lines[0] == "p,mult_F,mult_f,r_p,cofactor_nonzero,predicted,match"
    assert len(lines) == 4
    text = ok(["roots", "--p", "67"])
    assert text.splitlines()[-1].split() == ["67", "2"]


def test_certify_and_cache(tmp_path):
    cache = str(tmp_path)
    rep = as_report(["certify", "--kind", "triple", "--p", "11", "--cache", cache])
    assert rep.rows[0][2] == [5, 7, 53] and rep.rows[0][3] is True and rep.rows[0][4] is False
    assert isinstance(rep.rows[0][5], str)
    warm = as_report(["certify", "--kind", "triple", "--p", "11", "--cache", cache])
    assert warm.rows[0][4] is True
    entry = tmp_path / "triple_11.json"
    data = json.loads(entry.read_text())
    data["q"] = [5, 7, 59]
    entry.write_text(json.dumps(data))
    again = as_report(["certify", "--kind", "triple", "--p", "11", "--cache", cache])
    assert again.rows[0][4] is False and again.rows[0][6] == "stale cache entry recomputed"
    assert json.loads(entry.read_text())["q"] == [5, 7, 53]


def test_certify_quadruple():
    rep = as_report(["certify", "--kind", "quadruple", "--p", "13"])
    assert rep.rows[0][2] == [3, 19, 31, 103]


def test_certify_failure_exit_code():
    code, out, err = run(["certify", "--p", "11", "--q-bound", "40", "--format", "json"], {})
    assert code == 1
    assert json.loads(err)["defects"][0]["p"] == 11


def test_irregular():
    rep = as_report(["irregular", "--p-min", "7", "--p-max", "2000"])
    assert rep.summary["hits"] == [] and rep.ok
    assert as_report(["irregular", "--p", "89209"]).summary["hits"] == [89209]


def test_disc_and_budget():
    rep = as_report(["disc", "--p", "19"])
    assert rep.rows[0][3:5] == [18, 16]
    code, _, err = run(["disc", "--p", "151"], {})
    assert code == 2 and "refused" in err


def test_verify_all_small_range():
    rep = as_report(["verify-all", "--p-min", "7", "--p-max", "30"])
    assert rep.ok
    assert {r[1] for r in rep.rows} >= {"special_values", "irreducible", "triple", "disc_valuations"}


def test_threads_keep_order():
    serial = as_report(["modp", "--p-min", "7", "--p-max", "60"])
    parallel = as_report(["modp", "--p-min", "7", "--p-max", "60", "--threads", "2"])
    assert serial.rows == parallel.rows


def test_config_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"q_bound": 40, "format": "json"}))
    env = {"FEKETE_CONFIG": str(cfg)}
    code, out, _ = run(["certify", "--p", "11"], env)
    assert code == 1 and json.loads(out)["command"] == "certify"
    code, out, _ = run(["certify", "--p", "11", "--q-bound", "1000"], env)
    assert code == 0 and json.loads(out)["rows"][0][2] == [5, 7, 53]


def test_config_errors(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"q_bund": 40}))
    assert run(["values"], {"FEKETE_CONFIG": str(cfg)})[0] == 2
    assert run(["values"], {"FEKETE_CONFIG": str(tmp_path / "missing.json")})[0] == 2
    with pytest.raises(UsageError):
        RunConfig(threads=0)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fekete", "poly", "--p", "7", "--which", "g"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "-1 2 1"
    bad = subprocess.run([sys.executable, "-m", "fekete", "poly", "--p", "9"], capture_output=True, text=True)
    assert bad.returncode == 2
