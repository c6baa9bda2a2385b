import json

import pytest

from sga.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "PSL(2,9)")
    assert code == 0 and "Alt(6)" in out and "mindeg       6" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "M12", "--json")
    rec = json.loads(out)
    assert rec["mindeg"] == 12 and rec["v"] == 144 and rec["label"] == "Y"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "PSL(7,2)")
    assert code == 0 and "X (clause 3)" in out and "8001" in out


def test_verify_json_stream(capsys):
    code, out, _ = run(capsys, "verify", "A4a", "--family", "PSL", "--n-max", "3", "--q-max", "8", "--json")
    lines = [json.loads(x) for x in out.strip().splitlines()]
    assert code == 0
    records, summary = lines[:-1], lines[-1]["summary"]
    assert {"key", "order", "mindeg", "out_order", "label", "v", "clauses"} <= set(records[0])
    assert all(r["clauses"]["A4a"] for r in records)
    assert summary["all_pass"] and summary["candidates"] == summary["passed"] + summary["failed"] + summary["skipped"]


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "B", "--family", "Alt", "--n-max", "8", "--csv")
    rows = out.strip().splitlines()
    assert code == 0 and rows[0].startswith("key,order") and len(rows) == 5


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "A5", "--family", "PSU", "--n-max", "3", "--q-max", "8")
    assert code == 1 and "FAIL A5 PSU(3,8)" in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "PSL(2,7)")
    assert code == 0 and "agree" in out


def test_remark(capsys):
    assert run(capsys, "remark", "psl-n2", "5")[0] == 0
    code, _, err = run(capsys, "remark", "psl-n2", "4")
    assert code == 2 and "not prime" in err


def test_tightness_and_ratio(capsys):
    code, out, _ = run(capsys, "tightness", "3", "6", "--json")
    assert code == 0 and [json.loads(x)["f"] for x in out.splitlines()] == [2, 4, 6]
    code, out, _ = run(capsys, "ratio", "J3", "--json")
    assert code == 0 and abs(json.loads(out)["estimate"] - 2.0323) < 1e-4


def test_bad_group(capsys):
    code, _, err = run(capsys, "info", "PSL(2,6)")
    assert code == 2 and "prime power" in err


def test_bad_clause():
    with pytest.raises(SystemExit):
        main(["verify", "Z"])
