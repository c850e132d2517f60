import io
import json
import subprocess
import sys

import pytest

from flagcurves.cli import main

E21 = {"n": 3, "blocks": [1, 1, 1], "entries": [["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]]}
AFFINE = {"n": 3, "entries": [[0, 0, 0], [1, 0, 0], [1, 1, 0]]}


def run(capsys, *argv, **kw):
    code = main(list(argv), **kw)
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_projective_text(capsys):
    code, out, _ = run(capsys, "classify", json.dumps(E21))
    assert code == 0
    assert out.startswith("status: projective")
    assert "a = 1" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", json.dumps(E21), "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["status"] == "projective"
    assert doc["Y"] == E21["entries"]
    assert doc["r"] == [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]]


def test_classify_affine_from_file(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text(json.dumps(AFFINE))
    code, out, _ = run(capsys, "classify", str(path), "--json")
    assert code == 0
    assert json.loads(out) == {"status": "affine-only", "certificate": ["1"]}


def test_classify_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(E21)))
    code, out, _ = run(capsys, "classify", "-")
    assert code == 0 and "projective" in out


def test_verbose_adds_system(capsys):
    code, out, _ = run(capsys, "classify", json.dumps(E21), "-v", "--json")
    assert json.loads(out)["system"]["unknowns"] == ["u", "v", "w", "a", "b", "c"]


def test_text_is_rendered_from_json(capsys):
    _, text, _ = run(capsys, "classify", json.dumps(AFFINE))
    _, js, _ = run(capsys, "classify", json.dumps(AFFINE), "--json")
    doc = json.loads(js)
    assert doc["status"] in text
    assert all(g in text for g in doc["certificate"])


@pytest.mark.parametrize("doc, message", [
    ({"n": 3, "entries": [[0] * 3] * 3}, "constant curve"),
    ({"n": 3, "entries": [[0, 1, 0], [0, 0, 0], [0, 0, 0]]}, "lower block"),
    ({"n": 3, "entries": [[0, 0], [0, 0]]}, "entries"),
    ({"n": 2, "entries": [[0, 0], ["1.5", 0]]}, "rational"),
])
def test_input_errors_exit_2(capsys, doc, message):
    code, out, err = run(capsys, "classify", json.dumps(doc))
    assert code == 2
    assert out == ""
    assert message in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


def test_bad_json_exits_2(capsys):
    code, _, err = run(capsys, "classify", "{not json")
    assert code == 2 and "invalid JSON" in err


@pytest.mark.parametrize("flag", [["--order", "4"], ["--budget", "10"], ["--order", "x"]])
def test_flag_floors(capsys, flag):
    with pytest.raises(SystemExit) as info:
        main(["table", *flag])
    assert info.value.code == 2


def test_criterion_dump(capsys):
    code, out, _ = run(capsys, "criterion", json.dumps(E21), "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["unknowns"] == ["u", "v", "w", "a", "b", "c"]
    assert "-u + 1" in doc["equations"]


def test_conjugate(capsys):
    row6 = {"n": 3, "entries": [[0, 0, 0], [0, 0, 0], [1, 0, 0]]}
    row4 = {"n": 3, "entries": [[0, 0, 0], [1, 0, 0], [1, 0, 0]]}
    code, out, _ = run(capsys, "conjugate", json.dumps(row6), json.dumps(row4), "--json")
    assert code == 0 and json.loads(out)["status"] == "found"
    code, out, _ = run(capsys, "conjugate", json.dumps({"from": row4, "to": row6}), "--json")
    assert json.loads(out)["status"] == "found"
    code, out, _ = run(capsys, "conjugate", json.dumps(row6), json.dumps(AFFINE), "--json")
    assert code == 0 and json.loads(out)["status"] == "none"


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["allMatch"]
    assert [r["computed"] for r in doc["rows"]] == ["projective"] * 6 + ["affine-only"] * 4


@pytest.mark.parametrize("suite", ["closure", "ode", "coordchange", "flow"])
def test_lie1d(capsys, suite):
    code, out, _ = run(capsys, "lie1d", suite, "--order", "8", "--json")
    assert code == 0
    assert all(r["passed"] for r in json.loads(out))


def test_check_all_at_order_8(capsys):
    code, out, _ = run(capsys, "paper-check", "--order", "8")
    assert code == 0
    assert "FAIL" not in out


def test_check_all_negative_control(capsys):
    code, out, err = run(capsys, "paper-check", table_expected={7: "projective"})
    assert code == 1
    assert "first failing item: table of normal forms: row 7" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "flagcurves", "classify", json.dumps({"n": 2, "entries": [[0, 0], [0, 0]]})],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
    assert "constant curve" in proc.stderr
