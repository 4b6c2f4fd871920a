import io
import json

import pytest

from crystal_fold.cli import run


def _run(argv, tmp_path=None):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


def _lines(text):
    return [json.loads(line) for line in text.splitlines()]


def test_verify_folding_example():
    code, out = _run(["verify-folding", "--pair", "A3:D3", "--lambda", "1,1,1", "--word", "1,2,1",
                      "--kinds", "string,nz", "--kmax", "2"])
    assert code == 0
    reports = _lines(out)
    assert reports and all(r["status"] == "pass" for r in reports)


def test_param_example():
    code, out = _run(["param", "--type", "A3", "--word", "1,3,2,1,3", "--lambda", "1,1,1",
                      "--kind", "string"])
    assert code == 0
    (rec,) = _lines(out)
    assert len(rec["pairs"]) == 49


def test_orthogonality_exit_code():
    code, out = _run(["cartan", "--type", "A2", "--omega", "(1 2)"])
    assert code == 2
    assert _lines(out)[0]["error"] == "OrthogonalityError"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        _run(["param", "--bogus"])
    assert exc.value.code == 2


def test_csv_output():
    code, out = _run(["polytope", "--type", "A1", "--lambda", "1", "--word", "1", "--format", "csv"])
    assert code == 0 and out.splitlines() == ["a1", "0", "1"]


def test_deterministic_output():
    argv = ["crystal-enum", "--type", "B2", "--lambda", "1,1"]
    assert _run(argv)[1] == _run(argv)[1]


def test_catalog_and_fold_info():
    code, out = _run(["catalog"])
    assert code == 0 and len(_lines(out)) == 11
    code, out = _run(["fold-info", "--type", "A3", "--omega", "(1 3)", "--lambda", "1,1,1",
                      "--word", "1,2,1"])
    rec = _lines(out)[0]
    assert rec["lambda_hat"] == [2, 1] and rec["theta_word"] == [1, 3, 2, 1, 3]


def test_verification_failure_exit_code(monkeypatch):
    from crystal_fold import cli
    from crystal_fold.reports import Report

    def broken(p):
        return [Report("x", {}).fail({"k": 1}).to_json()], False

    monkeypatch.setitem(cli.COMMANDS, "catalog", broken)
    code, out = _run(["catalog"])
    assert code == 1 and _lines(out)[0]["witness"] == {"k": 1}


def test_job_file(tmp_path, monkeypatch):
    jobs = [{"command": "cartan", "parameters": {"type": "G2"}},
            {"command": "verify-slice", "parameters": {"pair": "A3:D3", "lambda": "1,1,1",
                                                       "word": "1,2,1"}}]
    path = tmp_path / "job.json"
    path.write_text(json.dumps(jobs))
    monkeypatch.setenv("CRYSTAL_FOLD_THREADS", "2")
    code, out = _run(["--job", str(path)])
    recs = _lines(out)
    assert code == 0 and recs[0]["type"] == "G2" and recs[1]["check"] == "slice-string"


def test_job_file_rejects_unknown_keys(tmp_path):
    path = tmp_path / "job.json"
    path.write_text(json.dumps({"command": "cartan", "parameters": {"type": "A2", "colour": 1}}))
    assert _run(["--job", str(path)])[0] == 2
    path.write_text(json.dumps({"command": "cartan", "extra": 1}))
    assert _run(["--job", str(path)])[0] == 2


def test_similarity_command():
    code, out = _run(["verify-similarity", "--source", "C2", "--target", "B2", "--word", "2,1,2",
                      "--depth", "4", "--doubling"])
    assert code == 0 and len(_lines(out)) == 4
