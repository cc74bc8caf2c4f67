import json
import shutil
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from mcg_forge.cli import GOLDEN_CASES, golden_outputs, main

SCHEMAS = Path(str(resources.files("mcg_forge") / "schemas"))
GOLDEN = Path(str(resources.files("mcg_forge") / "golden"))


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def validated(text):
    obj = json.loads(text)
    name = obj.get("command", "error")
    jsonschema.validate(obj, json.loads((SCHEMAS / f"{name}.schema.json").read_text()))
    # parse then serialize gives the same bytes
    assert json.dumps(obj, sort_keys=True, indent=2) + "\n" == text
    return obj


def test_graph_genus_four(capsys):
    code, out = run(["graph", "--genus", "4"], capsys)
    obj = validated(out)
    assert code == 0
    assert obj["summary"]["vertices"] == 6 and obj["summary"]["edges"] == 9


def test_thicken_and_curves(capsys):
    code, out = run(["thicken", "--genus", "3"], capsys)
    assert code == 0 and validated(out)["summary"]["euler_characteristic"] == -4
    code, out = run(["curves", "--genus", "3", "--edges", "0,2"], capsys)
    assert [c["label"] for c in validated(out)["curves"]] == ["m0", "b0", "m2", "b2"]


def test_intersect_and_twist(capsys):
    code, out = run(["intersect", "--genus", "3", "m0", "b0"], capsys)
    obj = validated(out)
    assert (obj["geometric"], obj["algebraic"]) == (2, 0)
    code, out = run(["twist", "--genus", "3", "m0", "--about", "b0"], capsys)
    obj = validated(out)
    assert code == 0 and obj["homology_consistent"] and obj["geometric_with_axis"] == 2


def test_symplectic_command(capsys):
    code, out = run(["symplectic", "--genus", "1", "--a", "1,0", "--b", "0,2", "--depth", "6"],
                    capsys)
    obj = validated(out)
    assert obj["pairing"] == 2 and obj["free_certificate"]["verdict"] == "no_relation"


def test_scenario_main_genus_seven(capsys):
    code, out = run(["scenario", "main", "--genus", "7"], capsys)
    rep = validated(out)["report"]
    assert code == 0 and rep["mismatches"] == 0
    assert rep["implied_bound"] == {"lower": 27, "budget": 24, "contradiction": True}


def test_verify_witness_and_failure(tmp_path, capsys):
    code, out = run(["witness", "--n", "1", "--d-max", "2"], capsys)
    fam = validated(out)["result"]["family"]
    path = tmp_path / "f.json"
    path.write_text(json.dumps(fam))
    code, out = run(["verify", "nm", "--family", str(path)], capsys)
    assert code == 0 and validated(out)["relations"]["holds"]
    emitted = tmp_path / "j.json"
    run(["scenario", "johnson", "--genus", "3", "--emit-family", str(emitted)], capsys)
    code, out = run(["verify", "nm", "--family", str(emitted)], capsys)
    obj = validated(out)
    assert code == 1 and obj["relations"]["violations"]


@pytest.mark.parametrize("argv", [
    ["graph"],
    ["frobnicate"],
    ["scenario", "braid", "--n", "6"],
    ["scenario", "main", "--genus", "2"],
    ["symplectic", "--depth", "20"],
    ["bound", "--genus", "1"],
    ["intersect", "--genus", "3", "q1", "m0"],
])
def test_usage_errors_exit_two(argv, capsys):
    code, out = run(argv, capsys)
    assert code == 2
    assert validated(out)["error"]["kind"] == "usage"


@pytest.mark.parametrize("content", ["{not json", '{"n": 1}', '{"n": 1, "d": 2, "M": [1], "N": []}'])
def test_malformed_family_file(tmp_path, content, capsys):
    p = tmp_path / "bad.json"
    p.write_text(content)
    code, out = run(["verify", "nm", "--family", str(p)], capsys)
    assert code == 2 and "message" in validated(out)["error"]


def test_malformed_graph_file(tmp_path, capsys):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"rotation": [[0, 1], [1]]}))
    code, out = run(["graph", "--graph", str(p)], capsys)
    assert code == 2


def test_graph_file_roundtrip(tmp_path, capsys):
    _, out = run(["graph", "--genus", "5", "--rotation", "twisted"], capsys)
    p = tmp_path / "g.json"
    p.write_text(json.dumps(json.loads(out)["graph"]))
    code, out2 = run(["graph", "--graph", str(p)], capsys)
    assert code == 0 and json.loads(out2)["graph"]["rotation"] == json.loads(out)["graph"]["rotation"]


def test_summary_flag(capsys):
    code, out = run(["scenario", "braid", "--n", "5", "--summary"], capsys)
    assert code == 0 and out.startswith("braid:")


def test_golden_files_match():
    for name, text in golden_outputs().items():
        assert (GOLDEN / name).read_text() == text, name
    assert set(GOLDEN_CASES) == {p.name for p in GOLDEN.glob("*.json")}


def test_corrupted_golden_reports_diff(tmp_path, capsys, monkeypatch):
    gdir = tmp_path / "golden"
    shutil.copytree(GOLDEN, gdir)
    f = gdir / "bound_g7.json"
    f.write_text(f.read_text().replace('"lower": 27', '"lower": 28'))
    monkeypatch.setattr("mcg_forge.acceptance.run_all",
                        lambda quick, seed: [{"id": 0, "name": "stub", "ok": True, "details": {}}])
    code, out = run(["selftest", "--golden", str(gdir)], capsys)
    obj = validated(out)
    assert code == 1
    bad = [g for g in obj["golden"] if not g["ok"]]
    assert [g["file"] for g in bad] == ["bound_g7.json"]
    assert any(line.startswith("-") and "28" in line for line in bad[0]["diff"])
    assert any(line.startswith("+") and "27" in line for line in bad[0]["diff"])


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "mcg_forge", "bound", "--genus", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["lower"] == 14
