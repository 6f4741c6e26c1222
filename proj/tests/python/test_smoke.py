"""End-to-end smoke tests: python bindings, CLI contract, JSON schemas."""

import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

import basiclab

CLI = os.environ["BASICLAB_CLI"]
SCHEMAS = Path(os.environ["BASICLAB_SCHEMAS"])


def load_schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run_cli(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, env=full_env
    )


# ---------------------------------------------------------------- bindings


def test_xi_and_parity():
    assert basiclab.xi(1, 1) == 1
    assert basiclab.xi(1, 2) == 2
    assert basiclab.xi(3, 7) == 5
    assert basiclab.parity_sign([1, 2]) == -1
    assert basiclab.parity_sign([2, 2]) == 1


def test_generate_and_validate():
    arr = basiclab.gen_plane_zigzag(4)
    assert arr.n == 1 and arr.m == 4
    assert arr.points == [[1, 1], [1, 2], [2, 2], [2, 3]]
    ok, report = basiclab.validate_array(1, 4, arr.points)
    assert ok
    jsonschema.validate(json.loads(report), load_schema("validation_report"))

    broken = [[1, 1], [1, 2], [2, 2], [3, 3]]
    ok, report = basiclab.validate_array(1, 4, broken)
    assert not ok
    parsed = json.loads(report)
    assert parsed["violations"][0]["kind"] == "mismatch"


def test_minimax_and_exact():
    arr = basiclab.gen_plane_zigzag(8)
    f = [1.0 if i % 2 == 0 else -1.0 for i in range(8)]
    status, value, family = basiclab.min_supnorm(2, arr.points, f)
    assert status == "optimal"
    assert abs(value - 4.0) < 1e-6
    jsonschema.validate(json.loads(family), load_schema("decomposition"))

    cycle = [[0, 0], [0, 1], [1, 1], [1, 0]]
    assert basiclab.solve_exact(2, cycle, [1, -1, 1, -1]) is None
    status, _, _ = basiclab.min_supnorm(2, cycle, [1, -1, 1, -1])
    assert status == "infeasible"


def test_e_iterate_and_forest():
    cycle = [[0, 0], [0, 1], [1, 1], [1, 0]]
    stages, empties, l = basiclab.e_iterate(2, cycle)
    assert not empties
    assert not basiclab.is_forest(cycle)
    path = [[0, 0], [0, 1], [1, 1]]
    _, empties, _ = basiclab.e_iterate(2, path)
    assert empties
    assert basiclab.is_forest(path)


def test_lemma_witness_binding():
    cert = json.loads(basiclab.lemma_witness(1, 2, [[0.3, 1.0], [-0.3, 1.0]]))
    jsonschema.validate(cert, load_schema("lemma_certificate"))
    assert cert["witness"]["value"] == 1.0
    assert cert["bound"] == 0.5


def test_blowup_binding():
    report = json.loads(basiclab.blowup_experiment(1, 1))
    jsonschema.validate(report, load_schema("blowup_report"))
    assert report["verdict"] == "NORM_EXCEEDS_S"
    assert report["m"] == [1, 2]


def test_error_translation():
    with pytest.raises(basiclab.InvalidInput):
        basiclab.gen_plane_zigzag(1)
    with pytest.raises(basiclab.BudgetExceeded):
        arr = basiclab.gen_plane_zigzag(12)
        basiclab.detect_plane_bolt(arr.points, 12, "distinct", 3)


# --------------------------------------------------------------------- CLI


def test_cli_gen_validate_roundtrip(tmp_path):
    gen = run_cli("gen-array", "--kind", "zigzag", "--m", "6")
    assert gen.returncode == 0
    arr = json.loads(gen.stdout)
    jsonschema.validate(arr, load_schema("array"))

    f = tmp_path / "arr.json"
    f.write_text(gen.stdout)
    val = run_cli("validate-array", str(f))
    assert val.returncode == 0
    report = json.loads(val.stdout)
    jsonschema.validate(report, load_schema("validation_report"))
    assert report["ok"]

    arr["points_lex"][3] = [3, 3]
    f.write_text(json.dumps(arr))
    val = run_cli("validate-array", str(f))
    assert val.returncode == 1
    assert not json.loads(val.stdout)["ok"]


def test_cli_detect_exit_codes(tmp_path):
    pts = tmp_path / "pts.json"
    zigzag = basiclab.gen_plane_zigzag(6)
    pts.write_text(json.dumps({"dim": 2, "points": zigzag.points}))

    found = run_cli("detect", "--target", "bolt", "--size", "6", str(pts))
    assert found.returncode == 0
    bolt = json.loads(found.stdout)
    assert bolt.pop("found") is True
    jsonschema.validate(bolt, load_schema("bolt"))

    missing = run_cli("detect", "--target", "bolt", "--size", "7", str(pts))
    assert missing.returncode == 1
    assert json.loads(missing.stdout) == {"found": False}

    starved = run_cli(
        "detect", "--target", "bolt", "--size", "6", str(pts),
        env={"BASICLAB_BUDGET": "2"},
    )
    assert starved.returncode == 3

    bad = run_cli("detect", "--target", "bolt", "--size", "6", "missing.json")
    assert bad.returncode == 2


def test_cli_decompose_and_e_iterate(tmp_path):
    pts = tmp_path / "pts.json"
    vals = tmp_path / "vals.json"
    pts.write_text(json.dumps({"dim": 2, "points": [[0, 0], [0, 1], [1, 1], [1, 0]]}))
    vals.write_text("[1, -1, 1, -1]")

    dec = run_cli("decompose", "--objective", "minimax", str(pts), str(vals))
    assert dec.returncode == 1
    assert json.loads(dec.stdout)["status"] == "infeasible"

    eit = run_cli("e-iterate", str(pts))
    assert eit.returncode == 1  # fixpoint nonempty
    trace = json.loads(eit.stdout)
    jsonschema.validate(trace, load_schema("etrace"))
    assert not trace["empties"]

    zig = basiclab.gen_plane_zigzag(4)
    pts.write_text(json.dumps({"dim": 2, "points": zig.points}))
    vals.write_text("[1, -1, 1, -1]")
    dec = run_cli("decompose", "--objective", "minimax", str(pts), str(vals))
    assert dec.returncode == 0
    out = json.loads(dec.stdout)
    assert out["status"] == "optimal"
    assert abs(out["value"] - 2.0) < 1e-6

    eit = run_cli("e-iterate", str(pts))
    assert eit.returncode == 0


def test_cli_lemma_check(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({"n": 1, "m": 2, "c_lex": [[0.3, 1], [-0.3, 1]]}))
    good = run_cli("lemma-check", str(inst))
    assert good.returncode == 0
    jsonschema.validate(json.loads(good.stdout), load_schema("lemma_certificate"))

    inst.write_text(json.dumps({"n": 1, "m": 2, "c_lex": [[1, 1], [1, 1]]}))
    bad = run_cli("lemma-check", str(inst))
    assert bad.returncode == 1

    inst.write_text(json.dumps({"n": 1, "m": 3, "c_lex": [[0, 0], [0, 0], [0, 0]]}))
    odd = run_cli("lemma-check", str(inst))
    assert odd.returncode == 2


def test_cli_blowup():
    res = run_cli("blowup", "--n", "1", "--stages", "1")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    jsonschema.validate(report, load_schema("blowup_report"))
    for cert in report["certificates"]:
        jsonschema.validate(cert["certificate"], load_schema("lemma_certificate"))
    assert report["stages"][-1]["lp"]["value"] == 4.0

    guarded = run_cli("blowup", "--n", "1", "--stages", "3")
    assert guarded.returncode == 2  # refuses without --slow


def test_cli_plot_is_deterministic(tmp_path):
    gen = run_cli("gen-array", "--kind", "zigzag", "--m", "4")
    src = tmp_path / "arr.json"
    src.write_text(gen.stdout)
    out1, out2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run_cli("plot", str(src), "--out", str(out1)).returncode == 0
    assert run_cli("plot", str(src), "--out", str(out2)).returncode == 0
    a, b = out1.read_bytes(), out2.read_bytes()
    assert a == b
    assert a.startswith(b"<svg") or b"<svg" in a
