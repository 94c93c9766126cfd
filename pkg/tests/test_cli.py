import json
import subprocess
import sys

import pytest

from maxclass.cli import main
from maxclass.fixtures import TABLE_EUCLIDEAN


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def _export(capsys, tmp_path, name, suffix=".txt"):
    path = tmp_path / f"{name}{suffix}"
    assert run(capsys, "fixtures", "export", "--name", name, "--out", path)[0] == 0
    return path


def test_export_keeps_table_order(capsys, tmp_path):
    path = _export(capsys, tmp_path, "table-euclidean")
    assert path.read_text().split() == list(TABLE_EUCLIDEAN)


def test_fixtures_list(capsys):
    code, out, _ = run(capsys, "fixtures", "list")
    names = {row["name"] for row in json.loads(out)}
    assert code == 0 and {"table-euclidean", "lines-table", "klein-crossing"} <= names


def test_analyze(capsys, tmp_path):
    table = _export(capsys, tmp_path, "table-euclidean")
    disc = _export(capsys, tmp_path, "maximal-disconnected")
    code, out, _ = run(capsys, "analyze", "--class", table, "--class", disc)
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["vc"] == 2 and rows[0]["maximum"] is True
    assert rows[0]["strongly_contractible"] == "yes"
    assert rows[1]["maximum"] is False and rows[1]["maximal"] is True
    assert rows[1]["components"] == 2 and rows[1]["collapsible"] == "no"


def test_peel_then_verify_then_compress(capsys, tmp_path):
    table = _export(capsys, tmp_path, "table-euclidean")
    rep = tmp_path / "peel.json"
    assert run(capsys, "peel", "--class", table, "--out", rep)[0] == 0
    peel = json.loads(rep.read_text())
    assert peel["max_degree"] == 2 and len(peel["events"]) == 11
    code, out, _ = run(capsys, "verify-scheme", "--class", table, "--rep", rep)
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["round_trip"]
    code, out, _ = run(capsys, "compress", "--class", table, "--rep", rep, "--sample", "1:1,4:1")
    res = json.loads(out)
    assert code == 0 and res["concept"][0] == "1" and res["concept"][3] == "1"


def test_min_peel_mode(capsys, tmp_path):
    path = _export(capsys, tmp_path, "square-plus-pendant")
    code, out, _ = run(capsys, "peel", "--class", path, "--mode", "min")
    assert code == 0 and json.loads(out)["events"][0]["vertex"] == "110"


def test_errors_are_json_on_stderr(capsys, tmp_path):
    disc = _export(capsys, tmp_path, "maximal-disconnected")
    code, out, err = run(capsys, "peel", "--class", disc)
    assert code == 1 and out == "" and json.loads(err)["code"] == 1
    code, _, err = run(capsys, "peel", "--class", tmp_path / "missing.txt")
    assert code == 2 and "message" in json.loads(err)
    table = _export(capsys, tmp_path, "table-euclidean")
    rep = tmp_path / "peel.json"
    run(capsys, "peel", "--class", table, "--out", rep)
    code, _, err = run(capsys, "compress", "--class", table, "--rep", rep, "--sample", "1:1,2:1,3:1,4:1")
    assert code == 2 and json.loads(err)["witness"] == {"1": 1, "2": 1, "3": 1, "4": 1}
    assert run(capsys, "construct", "--n", 9, "--d", 2)[0] == 2


def test_verify_scheme_reports_failure(capsys, tmp_path):
    disc = _export(capsys, tmp_path, "maximal-disconnected")
    rep = tmp_path / "rep.json"
    from maxclass.fixtures import FIXTURES

    rep.write_text(json.dumps(FIXTURES["maximal-disconnected"].representation().to_json()))
    code, out, _ = run(capsys, "verify-scheme", "--class", disc, "--rep", rep)
    report = json.loads(out)
    assert code == 1 and report["non_clashing"] and not report["round_trip"]


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--n", 2, "--d", 1)
    assert code == 0 and json.loads(out)["count"] == 4
    code, out, _ = run(capsys, "construct", "--n", 4, "--d", 2, "--count-only")
    assert code == 0 and json.loads(out)["count"] == 400


def test_sweep(capsys, tmp_path):
    arr = _export(capsys, tmp_path, "lines-table", ".json")
    svg = tmp_path / "svg"
    code, out, _ = run(capsys, "sweep", "--arrangement", arr, "--direction=-1/50,1", "--svg", svg)
    res = json.loads(out)
    assert code == 0 and res["mode"] == "sweep"
    assert [e["vertex"] for e in res["events"][:2]] == ["1001", "1101"]
    assert (svg / "arrangement.svg").exists() and len(list(svg.glob("step_*.svg"))) == 11


def test_sweep_is_deterministic(capsys, tmp_path):
    arr = _export(capsys, tmp_path, "klein-crossing", ".json")
    first = run(capsys, "sweep", "--arrangement", arr, "--seed", 3)[1]
    second = run(capsys, "sweep", "--arrangement", arr, "--seed", 3)[1]
    assert first == second and json.loads(first)["mode"] == "sweep_klein"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "maxclass", "fixtures", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)


@pytest.mark.parametrize("argv", [[], ["peel"]])
def test_usage_errors_exit(argv):
    with pytest.raises(SystemExit):
        main(argv)
