import json
import subprocess
import sys

from click.testing import CliRunner

from permlab.cli import main

KEYS = {"schema", "scenario", "params", "status", "counts", "findings", "artifacts", "runtime_ms"}


def run(*args):
    res = CliRunner().invoke(main, list(args))
    return res.exit_code, res


def report(res):
    data = json.loads(res.stdout)
    assert KEYS <= set(data) and data["schema"] == 1
    return data


def test_family_verify_exit_zero():
    code, res = run("family", "verify", "--id", "dxd1", "--d", "3")
    assert code == 0
    assert report(res)["status"] == "pass"


def test_global_flags_before_and_after():
    c1, r1 = run("--field", "F5", "verify", "evid", "--d", "2")
    c2, r2 = run("verify", "evid", "--d", "2", "--field", "F5")
    assert c1 == c2 == 0
    assert report(r1)["params"]["field"] == report(r2)["params"]["field"] == "F5"


def test_h_sigma_exits_one():
    code, res = run("family", "h-sigma")
    assert code == 1
    data = report(res)
    assert data["status"] == "fail" and data["findings"]


def test_bad_field_is_usage_error():
    code, _ = run("verify", "evid", "--d", "2", "--field", "F6")
    assert code == 2


def test_missing_seed_is_usage_error():
    code, _ = run("ajt", "bblsgen", "--q", "4", "--trials", "5")
    assert code == 2


def test_seed_recorded():
    code, res = run("ajt", "bblsgen", "--q", "4", "--trials", "20", "--seed", "9")
    assert code == 0 and report(res)["seed"] == 9


def test_malformed_matrix_file(tmp_path):
    p = tmp_path / "m.json"
    p.write_text("{not json")
    code, _ = run("ajt", "witness", "--matrix", str(p))
    assert code == 2
    p.write_text(json.dumps({"field": "F3", "rows": [[1, 2], [3]]}))
    code, _ = run("ajt", "witness", "--matrix", str(p))
    assert code == 2


def test_witness_and_json_out(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps({"field": "F3", "rows": [["1", "0"], ["0", "1"]]}))
    out = tmp_path / "r.json"
    code, res = run("ajt", "witness", "--matrix", str(p), "--json-out", str(out))
    assert code == 0
    data = report(res)
    assert data["witnesses"] == [["1", "1"]]
    assert json.loads(out.read_text()) == data


def test_no_witness_reported(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps({"field": "F3", "rows": [["1", "1"], ["1", "2"]]}))
    code, res = run("ajt", "witness", "--matrix", str(p))
    assert code == 0
    data = report(res)
    assert data["witnesses"] == [] and data["counts"]["found"] == 0


def test_budget_exceeded_exit_three(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps({"field": "F5", "rows": [["1", str(k)] for k in range(1, 5)]}))
    code, res = run("ajt", "witness", "--matrix", str(p), "--budget-nodes", "3")
    assert code == 3
    assert report(res)["status"] == "budget-exceeded"


def test_variety_classify_context_error():
    code, _ = run("enumerate", "variety", "--d", "2", "--m", "2", "--n", "2", "--q", "3", "--classify")
    assert code == 2


def test_variety_threads_match():
    _, r1 = run("enumerate", "variety", "--d", "2", "--m", "2", "--n", "3", "--q", "5", "--classify")
    _, r4 = run("enumerate", "variety", "--d", "2", "--m", "2", "--n", "3", "--q", "5", "--classify", "--threads", "4")
    assert report(r1)["counts"] == report(r4)["counts"]
    assert report(r1)["counts"]["solutions"] == 489


def test_ideal_gens_and_membership(tmp_path):
    out = tmp_path / "i.txt"
    code, res = run("ideal", "gens", "--d", "2", "--m", "2", "--n", "3", "--out", str(out))
    assert code == 0 and report(res)["counts"]["generators"] == 3
    code, res = run("gb", "membership", "--ideal", str(out), "--poly", "x_1_1*x_2_2 + x_1_2*x_2_1")
    assert code == 0 and report(res)["counts"]["member"] == 1
    code, res = run("gb", "membership", "--ideal", str(out), "--poly", "x_1_1*x_2_2")
    assert code == 0 and report(res)["counts"]["member"] == 0
    code, _ = run("gb", "membership", "--ideal", str(out), "--poly", "x_1_1 +* 2")
    assert code == 2


def test_bad_ideal_file(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("garbage ((\n")
    code, _ = run("gb", "membership", "--ideal", str(p), "--poly", "1")
    assert code == 2


def test_certificate_written(tmp_path):
    out = tmp_path / "c.json"
    code, res = run("certificate", "moncor", "--d", "2", "--out", str(out))
    assert code == 0
    assert str(out) in report(res)["artifacts"]
    assert "pairs" in json.loads(out.read_text())


def test_ajtconj_finite_is_evidence():
    code, res = run("scenario", "ajtconj", "--d", "2", "--field", "F5")
    assert code == 0 and report(res)["status"] == "evidence"


def test_family_show():
    code, res = run("family", "show", "--id", "param-A")
    assert code == 0
    assert "a" in json.dumps(report(res))


def test_unknown_suite():
    code, _ = run("suite", "bogus")
    assert code == 2


def test_suite_all_needs_seed():
    code, _ = run("suite", "all")
    assert code == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "permlab.cli", "--help"], capture_output=True, text=True)
    assert out.returncode == 0 and "family" in out.stdout
