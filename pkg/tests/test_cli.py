import io
import json

import pytest

from hnstrata.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


def test_slope_example():
    assert run_json("slope", "--named", "GL:3", "--IM", "1", "--degree", "3,0") == {
        "phi": ["3", "0", "0"],
        "dominant_P_regular": True,
    }


def test_specialize_example():
    assert run_json("p1", "specialize", "--from", "1,0", "--to=2,-1") is True
    assert run_json("p1", "specialize", "--from=2,-1", "--to", "1,0") is False


def test_gl3_report_example():
    rep = run_json("p1", "gl3-report")
    assert rep["closure_meets"]["value"] is True
    assert "refuted" in rep["containment"]


def test_datum_and_weights():
    d = run_json("datum", "--named", "SL:2")
    assert d["cartan"] == [[2]] and d["weyl_order"] == 2
    d = run_json("datum", "--named", "GL:3", "--weyl")
    assert len(d["weyl_group"]) == 6
    w = run_json("weights", "--named", "SC:A2", "--highest", "1,1")
    assert w["dim"] == 8 == w["weyl_dimension"]
    w = run_json("weights", "--named", "GL:3", "--highest", "1,0,0", "--IM", "0")
    assert w["subspace"]["dim"] == 2


def test_datum_from_json_file(tmp_path):
    d = run_json("datum", "--named", "SC:B2")
    p = tmp_path / "b2.json"
    p.write_text(json.dumps({"rank": d["rank"], "cartan": d["cartan"], "simple_roots": d["simple_roots"], "simple_coroots": d["simple_coroots"]}))
    again = run_json("datum", "--datum", f"@{p}")
    assert again["cartan"] == d["cartan"] and again["weyl_order"] == 8


def test_strata_commands():
    out = run_json("strata", "enumerate", "--named", "GL:2", "--lambda-G", "1", "--bound", "3")
    assert [s["degree"]["free"] for s in out] == [[1, 0], [2, -1], [1]]
    assert run_json("strata", "destabilizing", "--named", "GL:3", "--IM", "1", "--degree", "3,0") == {"destabilizing": True}
    c = run_json("strata", "compare", "--named", "GL:2", "--degree=2,-2", "--other-degree=1,-1")
    assert c["geq"] is True
    c = run_json("strata", "closure", "--named", "GL:3", "--degree", "2,1,0", "--other-IM", "1", "--other-degree", "3,0")
    assert c["meets"]["value"] is True
    assert c["same_parabolic_contains"].startswith("precondition fails: parabolics differ")
    c = run_json("strata", "closure", "--named", "GL:2", "--degree", "1,0", "--other-degree", "2,-1")
    assert c["same_parabolic_contains"] is True


def test_p1_commands():
    h = run_json("p1", "hn", "--type", "3,1,1,0")
    assert h["hn"]["ranks"] == [1, 2, 1]
    po = run_json("p1", "poset", "--n", "2", "--degree", "1", "--box", "3")
    assert po["edges"] == [[[1, 0], [2, -1]], [[2, -1], [3, -2]]]
    code, out, _ = run("p1", "poset", "--n", "2", "--degree", "1", "--box", "3", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_bruhat_command():
    out = run_json("bruhat", "--named", "GL:3", "--M1", "0", "--M2", "1")
    assert len(out["reps"]) == 2


def test_verify_command():
    out = run_json("verify", "--only", "pgl_torsion,gl3_skeleton")
    assert all(r["passed"] for r in out)


def test_text_output_is_aligned():
    code, out, _ = run("slope", "--named", "GL:3", "--IM", "1", "--degree", "3,0", "--text")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("phi") and lines[1].startswith("dominant_P_regular")
    assert lines[0].index("[") == lines[1].index("true")


@pytest.mark.parametrize(
    "argv,code",
    [
        (["bogus"], 64),
        (["datum", "--datum", "{bad"], 65),
        (["datum", "--named", "Nope:3"], 2),
        (["slope", "--named", "GL:3", "--IM", "1", "--degree", "x"], 2),
        (["strata", "enumerate", "--named", "GL:2", "--lambda-G", "1", "--bound", "-1"], 2),
        (["p1", "specialize", "--from", "1,0", "--to", "1,0,0"], 2),
        (["weights", "--named", "GL:3", "--highest", "0,1,0"], 2),
        (["slope", "--named", "GL:3"], 2),
    ],
)
def test_exit_codes(argv, code):
    got, _, err = run(*argv)
    assert got == code
    assert err


def test_input_error_names_precondition():
    code, _, err = run("strata", "compare", "--named", "GL:2", "--degree", "0,1", "--other-degree", "1,0")
    assert code == 2 and "alpha_0" in err


def test_cap_exceeded(monkeypatch):
    monkeypatch.setenv("HN_CAP", "10")
    assert run("datum", "--named", "SC:B3", "--weyl")[0] == 69
    monkeypatch.setenv("HN_CAP", "100")
    assert run("datum", "--named", "SC:B3", "--weyl")[0] == 0
    monkeypatch.setenv("HN_CAP", "zero")
    assert run("datum", "--named", "SC:B3", "--weyl")[0] == 2


def test_deterministic_output():
    argv = ["strata", "enumerate", "--named", "GL:3", "--lambda-G", "0", "--bound", "2"]
    assert run(*argv)[1] == run(*argv)[1]
