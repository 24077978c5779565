import io
import json
import subprocess
import sys

import pytest

from grasshodge.cli import Report, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_section_json_shape():
    code, out, _ = call("section", "3", "10")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["command", "status", "variety", "dimension", "hodge", "checks", "results"]
    assert data["dimension"] == 20
    assert [10, 10, "30"] in data["hodge"]
    assert data["results"]["euler"] == "132"


def test_json_round_trip():
    _, out, _ = call("verify", "hodge-jump", "3", "10")
    assert Report.from_json(out).to_json() == out


def test_markdown_lists_table_rows():
    code, out, _ = call("section", "3", "10", "--format", "md")
    assert code == 0
    assert "| 20 | 1 30 1 |" in out
    assert "| 12 | 7 |" in out


def test_csv_output():
    code, out, _ = call("grass", "2", "5", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "section,key,value"
    assert "hodge,\"3,3\",2" in out


def test_derive_checks_table_column():
    code, out, _ = call("derive", "Y2")
    assert code == 0
    checks = json.loads(out)["checks"]
    assert checks[0]["name"] == "table column Y2" and checks[0]["status"] == "pass"


def test_cy_flag():
    code, out, _ = call("section", "3", "11", "--cy", "23,3", "--vanishing")
    assert code == 0
    data = json.loads(out)
    assert any(c["name"].startswith("H^23") and c["status"] == "pass" for c in data["checks"])
    assert "vanishing" in data["results"]


def test_verify_collections_reports_the_failing_pair():
    code, out, _ = call("verify", "collections")
    assert code == 1
    data = json.loads(out)
    status = {c["name"]: c["status"] for c in data["checks"]}
    assert status == {"collection T": "pass", "collection P": "fail", "collection W": "pass"}
    assert data["status"] == "verification_failed"


@pytest.mark.parametrize("what", ["table1", "lemma-van", "coble-fiber", "counts"])
def test_verify_suites_pass(what):
    code, out, _ = call("verify", what)
    assert code == 0, out


def test_output_does_not_depend_on_job_count():
    outs = {call("verify", "collections", "--jobs", str(j))[1] for j in (1, 3)}
    assert len(outs) == 1


def test_invalid_input_exit_code(capsys):
    assert call("grass", "5", "3")[0] == 2
    assert call("bogus")[0] == 2
    assert call("section", "3", "10", "--cy", "x")[0] == 2
    assert call("twisted", "2", "5", "1", "1", "--jobs", "0")[0] == 2
    code, _, err = call("verify", "hodge-jump")
    assert code == 2 and "usage" in err


def test_out_file(tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = call("schubert", "index", "7", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["results"]["index_is_3"] is True


def test_schubert_numbers_are_informational():
    code, out, _ = call("schubert", "numbers", "10")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["closed_forms"]["degree(as_printed)"]["delta"] == "1"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "grasshodge", "schubert", "class", "6"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["text"] == "s40 + s31 + s22"
