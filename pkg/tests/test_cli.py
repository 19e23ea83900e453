import io
import json
import subprocess
import sys

import pytest

from sixfix import cli, forms
from sixfix.io import InputError, Scenario, load_scenario, loads, parse_int

SCEN = {
    "ambient": {"type": "P", "dims": [3]},
    "weights": [0, 1, 4, 5],
    "curve": [0, 1, 4, 5],
    "expected_chi": 6,
}


def run(argv):
    out = io.StringIO()
    code = cli.run_cli(argv, out)
    return code, out.getvalue()


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def test_delta_text():
    assert run(["delta", "--a0", "1", "--a1", "0", "--a2", "0", "--a3", "1"]) == (0, "1\n")


def test_delta_json_round_trip(tmp_path):
    code, text = run(["delta", "--a0", "2", "--a1", "0", "--a2", "0", "--a3", "1", "--c1", "3", "-2", "--format", "json"])
    assert code == 0
    obj = json.loads(text)
    assert obj == {"a0": 2, "a1": 0, "a2": 0, "a3": 1, "c1": [3, -2], "delta": 4, "cube_zero_class": None}
    path = write(tmp_path, "c.json", obj)
    code, again = run(["delta", "--json", path, "--format", "json"])
    assert code == 0 and again == text


def test_delta_recorded_mismatch(tmp_path):
    path = write(tmp_path, "c.json", {"a0": 1, "a1": 0, "a2": 0, "a3": 1, "delta": 2})
    assert run(["delta", "--json", path])[0] == 1
    path = write(tmp_path, "z.json", {"a0": 1, "a1": 0, "a2": 0, "a3": 1, "cube_zero_class": [0, 1]})
    assert run(["delta", "--json", path])[0] == 1


def test_delta_big_integers(tmp_path):
    big = 2**60 + 7
    code, text = run(["delta", "--a0", str(big), "--a1", "0", "--a2", "0", "--a3", "1", "--format", "json"])
    obj = json.loads(text)
    assert code == 0
    assert obj["a0"] == str(big)
    assert obj["delta"] == str(big * big)
    path = write(tmp_path, "big.json", obj)
    assert run(["delta", "--json", path]) == (0, f"{big * big}\n")


def test_delta_markdown():
    code, text = run(["delta", "--a0", "1", "--a1", "0", "--a2", "-1", "--a3", "0", "--format", "md"])
    assert code == 0
    assert text.splitlines()[0].startswith("| a0 |")


def test_delta_input_errors(tmp_path, capsys):
    assert run(["delta", "--a0", "1"])[0] == 2
    assert run(["delta", "--a0", "x", "--a1", "0", "--a2", "0", "--a3", "1"])[0] == 2
    bad = write(tmp_path, "bad.json", '{"a0": 1,\n "a1": }')
    assert run(["delta", "--json", bad])[0] == 2
    assert "line 2, column" in capsys.readouterr().err
    wrong = write(tmp_path, "wrong.json", {"a0": 1, "a1": 0, "a2": 1.5, "a3": 0})
    assert run(["delta", "--json", wrong])[0] == 2
    assert "$['a2']" in capsys.readouterr().err
    extra = write(tmp_path, "extra.json", {"a0": 1, "a1": 0, "a2": 0, "a3": 0, "colour": 1})
    assert run(["delta", "--json", extra])[0] == 2
    assert run(["delta", "--json", str(tmp_path / "missing.json")])[0] == 2


def test_blowup_table(tmp_path):
    code, text = run(["blowup-table", "--base", "cp3", "--kmax", "5"])
    assert code == 0
    table = json.loads(text)
    assert [r["delta"] for r in table["rows"]] == [0, 4, -8, -60, -176]
    assert (table["maximum"], table["argmax"], table["threshold"]) == (4, 2, 2)
    assert table["rows"][0]["cubic"] == {"a0": 1, "a1": 0, "a2": -1, "a3": -2, "c1": [4, -1]}
    path = write(tmp_path, "t.json", table)
    assert run(["blowup-table", "--from", path]) == (0, text)
    table["rows"][3]["delta"] = -63
    path = write(tmp_path, "t2.json", table)
    assert run(["blowup-table", "--from", path])[0] == 1


def test_blowup_table_md_and_errors():
    code, text = run(["blowup-table", "--base", "v5", "--kmax", "5", "--format", "md"])
    assert code == 0 and "| 5 | (5, 0, -5, -8) | -900 |" in text
    assert run(["blowup-table", "--base", "v7", "--kmax", "5"])[0] == 2
    assert run(["blowup-table", "--base", "q", "--kmax", "0"])[0] == 2
    assert run(["blowup-table", "--base", "q"])[0] == 2


def test_big_rows_in_blowup_table():
    code, text = run(["blowup-table", "--base", "v22", "--kmax", "50000"])
    assert code == 0
    last = json.loads(text)["rows"][-1]
    assert isinstance(last["delta"], str) and int(last["delta"]) < -(2**53)


def test_fixed_points(tmp_path):
    path = write(tmp_path, "s.json", SCEN)
    code, text = run(["fixed-points", "--scenario", path])
    assert code == 0
    out = json.loads(text)
    assert out["euler_consistent"] is True
    assert out["report"]["count"] == 6 and out["report"]["isolated"]
    wrapped = write(tmp_path, "w.json", out)
    assert run(["fixed-points", "--scenario", wrapped]) == (0, text)
    out["report"]["count"] = 7
    tampered = write(tmp_path, "t.json", out)
    assert run(["fixed-points", "--scenario", tampered])[0] == 1


def test_fixed_points_euler_mismatch(tmp_path):
    path = write(tmp_path, "s.json", dict(SCEN, expected_chi=5))
    code, text = run(["fixed-points", "--scenario", path])
    assert code == 1
    assert json.loads(text)["euler_consistent"] is False


def test_fixed_points_bundled_scenarios():
    from importlib import resources

    base = resources.files("sixfix").joinpath("scenarios")
    for name, count in [("ann.json", 6), ("cptc_n3.json", 6), ("quadc_n1.json", 6), ("p3_generic.json", 4)]:
        code, text = run(["fixed-points", "--scenario", str(base.joinpath(name))])
        assert code == 0, name
        assert json.loads(text)["report"]["count"] == count
    code, text = run(["fixed-points", "--scenario", str(base.joinpath("cptc_n1.json"))])
    assert json.loads(text)["report"]["isolated"] is False


def test_fixed_points_input_errors(tmp_path, capsys):
    bad = write(tmp_path, "b.json", dict(SCEN, weights=[0, 1, 4]))
    assert run(["fixed-points", "--scenario", bad])[0] == 2
    assert "$['weights']" in capsys.readouterr().err
    bad = write(tmp_path, "b2.json", dict(SCEN, ambient={"type": "torus", "dims": [3]}))
    assert run(["fixed-points", "--scenario", bad])[0] == 2
    assert "$['ambient']['type']" in capsys.readouterr().err
    noninv = write(tmp_path, "n.json", dict(SCEN, weights=[0, 1, 3, 5]))
    assert run(["fixed-points", "--scenario", noninv])[0] == 2
    nonhom = {
        "ambient": {"type": "hypersurface", "dims": [2], "equation": [
            {"coeff": 1, "exponents": [[1, 1, 0]]}, {"coeff": -1, "exponents": [[0, 0, 2]]}]},
        "weights": [0, 1, 5],
    }
    assert run(["fixed-points", "--scenario", write(tmp_path, "h.json", nonhom)])[0] == 2


def test_fixed_points_md(tmp_path):
    code, text = run(["fixed-points", "--scenario", write(tmp_path, "s.json", SCEN), "--format", "md"])
    assert code == 0 and text.startswith("isolated: True, count: 6")


def test_plane_scan(tmp_path):
    code, text = run(["plane-scan", "--bmax", "6"])
    assert code == 0
    scan = json.loads(text)
    assert len(scan["rows"]) == 21 and scan["bound_holds"]
    cusp = next(r for r in scan["rows"] if (r["a"], r["b"]) == (2, 3))
    assert cusp["monomial_verdict"] == {"class": "non-nodal", "witnesses": [{"point": [1, 0, 0], "description": "branch (t^2, t^3)"}]}
    path = write(tmp_path, "p.json", scan)
    assert run(["plane-scan", "--from", path]) == (0, text)
    scan["rows"][0]["max_nodal_degree"] = 4
    assert run(["plane-scan", "--from", write(tmp_path, "p2.json", scan)])[0] == 1
    assert run(["plane-scan", "--bmax", "0"])[0] == 2
    code, md = run(["plane-scan", "--bmax", "3", "--format", "md"])
    assert code == 0 and md.count("\n") == 8


def test_outputs_are_deterministic():
    for argv in (["plane-scan", "--bmax", "5"], ["blowup-table", "--base", "q", "--kmax", "9"], ["verify-paper", "--format", "json"]):
        assert run(argv) == run(argv)


def test_verify_paper_exit_codes(monkeypatch, tmp_path):
    code, text = run(["verify-paper", "--format", "json"])
    assert code == 0 and json.loads(text)["passed"]
    # a wrong Delta implementation must be caught
    monkeypatch.setattr(forms, "delta", lambda c: c.a0)
    code, text = run(["verify-paper", "--format", "json"])
    assert code == 1
    failed = {c["id"] for c in json.loads(text)["checks"] if c["status"] == "fail"}
    assert {"AC04", "AC06"} <= failed


def test_verify_paper_missing_scenarios(tmp_path):
    code, text = run(["verify-paper", "--format", "json", "--scenario-dir", str(tmp_path)])
    assert code == 1
    status = {c["id"]: c["status"] for c in json.loads(text)["checks"]}
    assert status.pop("AC08") == "input-error"
    assert set(status.values()) == {"pass"}


def test_seed_environment(monkeypatch):
    from sixfix.verify import seed_from_env

    monkeypatch.setenv("SIXFIX_SEED", "12345")
    assert seed_from_env() == 12345
    assert run(["verify-paper"])[0] == 0
    monkeypatch.delenv("SIXFIX_SEED")
    assert seed_from_env() == 0


def test_usage_error():
    assert run([])[0] == 2
    assert run(["nonsense"])[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sixfix", "delta", "--a0", "0", "--a1", "0", "--a2", "1", "--a3", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0\n"


def test_parse_int_and_scenario_helpers():
    assert parse_int("-123456789012345678901234567890") == -123456789012345678901234567890
    with pytest.raises(InputError):
        parse_int(True)
    with pytest.raises(InputError):
        parse_int("1e5")
    with pytest.raises(InputError) as exc:
        loads("[1, 2", "x.json")
    assert "line 1" in str(exc.value)
    scen, prior = load_scenario(SCEN)
    assert prior is None and scen.dimension == 3 and scen.curve.degree == 5
    nested = Scenario(dict(SCEN, weights=[[0, 1, 4, 5]]))
    assert nested.action == scen.action
    with pytest.raises(InputError):
        load_scenario([1, 2])
