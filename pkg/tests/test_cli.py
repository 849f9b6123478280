import io
import json

import pytest

from heckehom.cli import run


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def _strip(doc):
    doc = dict(doc)
    doc.pop("duration_ms")
    return doc


def test_verify_coxeter_json():
    code, out = _run("verify", "coxeter", "--n", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["suite"] == "coxeter"
    assert doc["params"] == {"n": 4, "field": "generic", "dmax": None}
    assert all(set(c) == {"id", "anchor", "status", "payload"} for c in doc["checks"])
    assert isinstance(doc["duration_ms"], int)


def test_tor_table(tmp_path):
    path = tmp_path / "t.json"
    code, out = _run("tor", "--n", "3", "--field", "gf:p=2,q=1", "--dmax", "3",
                     "--json-out", str(path))
    assert code == 0
    assert "d=0:1  d=1:1  d=2:1  d=3:1" in out
    doc = json.loads(path.read_text())
    assert doc["params"] == {"n": 3, "field": "gf:p=2,q=1", "dmax": 3}
    table = next(c for c in doc["checks"] if c["id"] == "tor-table")
    assert table["payload"]["dims"] == [1, 1, 1, 1]


def test_global_flags_before_subcommand(tmp_path):
    path = tmp_path / "x.json"
    code, _ = _run("--json-out", str(path), "ext", "--n", "2", "--field", "cyclotomic:l=2",
                   "--dmax", "3")
    assert code == 0 and json.loads(path.read_text())["suite"] == "ext"


def test_csv_and_matrix_dump(tmp_path):
    csv_path, dump = tmp_path / "r.csv", tmp_path / "m.json"
    code, out = _run("verify", "injective-words", "--n", "3", "--csv-out", str(csv_path),
                     "--dump-matrices", str(dump))
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "id,anchor,status,payload"
    assert len(lines) - 1 == len(json.loads(out)["checks"])
    m = json.loads(dump.read_text())
    assert m["complex"] == "C(3)" and m["boundaries"][0]["entries"] == [["1", "1", "1"]]


def test_d_complex_reports_refinement_failure():
    code, out = _run("verify", "d-complex", "--n", "3")
    doc = json.loads(out)
    failed = sorted(c["id"] for c in doc["checks"] if c["status"] == "fail")
    assert failed == ["case-A-refined", "signed-monomial-entries"]
    assert code == 1
    code, _ = _run("verify", "d-complex", "--n", "2")
    assert code == 0


@pytest.mark.parametrize("argv,code", [
    (["verify", "bogus", "--n", "3"], 2),
    (["verify", "coxeter"], 2),
    (["tor", "--n", "3", "--field", "gf:p=2,q=1"], 2),
    (["verify", "coxeter", "--n", "-1"], 2),
    (["verify", "hecke", "--n", "3", "--field", "gf:p=4,q=1"], 3),
    (["verify", "injective-words", "--n", "3", "--field", "generic"], 3),
    (["tor", "--n", "5", "--field", "gf:p=2,q=1", "--dmax", "2"], 4),
    (["tor", "--n", "2", "--field", "gf:p=2,q=1", "--dmax", "9"], 4),
    (["verify", "coxeter", "--n", "7"], 4),
])
def test_exit_codes(argv, code, capsys):
    assert _run(*argv)[0] == code


def test_guard_override():
    code, out = _run("--guard-override", "tor", "--n", "2", "--field", "gf:p=2,q=1",
                     "--dmax", "7")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["verify", "hecke", "--n", "3", "--samples", "50"],
    ["verify", "d-complex", "--n", "3", "--field", "cyclotomic:l=3"],
    ["stability", "--n", "3", "--field", "gf:p=2,q=1", "--dmax", "2"],
])
def test_rerun_is_byte_identical(argv):
    a = json.loads(_run(*argv)[1])
    b = json.loads(_run(*argv)[1])
    assert json.dumps(_strip(a)) == json.dumps(_strip(b))
