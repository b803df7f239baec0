import io
import json

import jsonschema
import pytest

from gradedpi.cli import RunConfig, dispatch
from gradedpi.schemas import SCHEMAS


def run(*argv):
    out = io.StringIO()
    code = dispatch(list(argv), out)
    return code, out.getvalue()


def run_json(schema, *argv):
    code, text = run(*argv)
    obj = json.loads(text)
    jsonschema.validate(obj, SCHEMAS[schema])
    return code, obj


def test_codim_closed():
    code, obj = run_json("codim", "codim", "--k", "2", "--n", "3", "--method", "closed")
    assert code == 0 and obj == {"k": 2, "n": 3, "value": "28"}


@pytest.mark.parametrize("method", ["enum", "formula"])
def test_codim_methods(method):
    code, obj = run_json("codim", "codim", "--k", "3", "--n", "4", "--method", method)
    assert code == 0 and obj["value"] == "1061"


def test_codim_group_order_mismatch():
    code, _ = run("codim", "--k", "3", "--n", "2", "--group", "C4")
    assert code == 2


def test_equiv_figure_pair():
    code, obj = run_json(
        "equiv", "equiv", "--group", "C3",
        "--m1", "x[1,s]x[2,s]x[3,s]x[4,s2]", "--m2", "x[4,s2]x[3,s]x[1,s]x[2,s]",
    )
    assert code == 0 and obj == {"equivalent": True}


def test_equiv_false():
    code, obj = run_json("equiv", "equiv", "--group", "C2", "--m1", "x[1,e]x[2,s]", "--m2", "x[2,s]x[1,e]")
    assert code == 1 and obj == {"equivalent": False}


def test_identity_check_false():
    code, obj = run_json("identity check", "identity", "check", "--group", "C2", "--poly", "x[1,e]x[2,s] - x[2,s]x[1,e]")
    assert code == 1 and obj["verdict"] is False
    assert sorted(c["sum"] for c in obj["classes"]) == ["-1", "1"]


def test_identity_check_both_true():
    code, obj = run_json(
        "identity check", "identity", "check", "--group", "C3", "--method", "both",
        "--poly", "x[1,s]x[2,s2]x[3,s] - x[3,s]x[2,s2]x[1,s]",
    )
    assert code == 0 and obj["verdict"] is True and obj["oracle_nonzero_entries"] == []


def test_group_show_and_graph():
    code, obj = run_json("group show", "group", "show", "--group", "S3")
    assert code == 0 and obj["order"] == 6
    code, obj = run_json("graph build", "graph", "build", "--group", "C3", "--monomial", "x[3,s] x[2,s2] x[5,s2] x[4,e] x[1,s]")
    assert code == 0 and len(obj["edges"]) == 5 and obj["vertices"] == ["e", "s", "s2"]


def test_graph_dot_to_file(tmp_path):
    path = tmp_path / "g.dot"
    code, _ = run("graph", "dot", "--group", "C2", "--monomial", "x[1,s]x[2,e]", "--out", str(path))
    assert code == 0 and path.read_text().startswith("digraph")


def test_ipp_listing():
    code, obj = run_json("ipp", "ipp", "--group", "C2", "--monomial", "x[1,s]x[2,e]x[3,s]x[4,s]", "--list")
    assert code == 0 and (obj["total"], obj["even"], obj["odd"]) == (4, 2, 2)


def test_swan_with_csv(tmp_path):
    path = tmp_path / "rows.csv"
    code, obj = run_json("swan", "swan", "--group", "C2", "--n", "4", "--csv", str(path))
    assert code == 0 and obj["words"] == 16 and obj["violations"] == []
    assert len(path.read_text().splitlines()) == 17


def test_al_verify():
    code, obj = run_json("al-verify", "al-verify", "--group", "C2", "--n", "4", "--method", "both")
    assert code == 0 and obj["all_identity"] and obj["disagreements"] == 0
    code, obj = run_json("al-verify", "al-verify", "--group", "C2", "--n", "3")
    assert code == 1 and not obj["all_identity"]


def test_elem_identity():
    code, obj = run_json("elem-identity", "elem-identity", "--group", "C4", "--tuple", "e,s", "--weights", "s,s")
    assert code == 0 and obj["identity"] and len(obj["witness"]) <= 2
    code, obj = run_json("elem-identity", "elem-identity", "--group", "C4", "--tuple", "e,s,s2,s3", "--weights", "s")
    assert code == 1 and not obj["identity"]


def test_codim_table_csv_cache_plot(tmp_path):
    cache, png = tmp_path / "cache.txt", tmp_path / "counts.png"
    code, text = run(
        "codim", "table", "--k", "2", "--n-max", "6", "--format", "csv", "--enum",
        "--cache", str(cache), "--plot", str(png),
    )
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "k,n,m,p,gamma,sd,sc,c2closed,c2dv"
    assert lines[4].split(",")[2] == "28"
    assert cache.exists() and png.stat().st_size > 0
    # second run reads the cache and reproduces the output
    assert run("codim", "table", "--k", "2", "--n-max", "6", "--format", "csv", "--cache", str(cache)) == (0, text)


def test_codim_table_json():
    code, obj = run_json("codim table", "codim", "table", "--k", "3", "--n-max", "4")
    assert code == 0 and obj["rows"][4]["m"] == "1061"


def test_asym_json_csv_plot(tmp_path):
    png = tmp_path / "dev.png"
    code, obj = run_json("asym", "asym", "--k", "2", "--n", "100,1000", "--plot", str(png))
    assert code == 0 and abs(float(obj["rows"][1]["deviation"])) <= 0.001
    assert png.stat().st_size > 0
    code, text = run("asym", "--k", "3", "--n", "10", "--format", "csv")
    assert code == 0 and text.splitlines()[0].startswith("k,n,exact")


def test_deterministic_output():
    argv = ["identity", "check", "--group", "S3", "--poly", "x[1,p213]x[2,e] - 1/3 x[2,e]x[1,p213]"]
    assert run(*argv) == run(*argv)


def test_usage_errors():
    assert run("bogus")[0] == 2
    assert run("codim", "--k", "2")[0] == 2
    assert run("equiv", "--group", "C2", "--m1", "x[1,q]", "--m2", "x[1,e]")[0] == 2
    assert run("identity", "check", "--group", "C2", "--poly", "x[1,e]x[1,s]")[0] == 2
    assert run("codim", "--k", "2", "--n", "2", "--format", "xml")[0] == 2


def test_resource_caps(monkeypatch):
    assert run("codim", "--k", "5", "--n", "40", "--method", "enum")[0] == 3
    assert run("al-verify", "--group", "C2", "--n", "9")[0] == 3
    assert run("codim", "--k", "3", "--n", "5", "--method", "enum", "--enum-budget", "100")[0] == 3
    monkeypatch.setenv("GRADEDPI_ENUM_BUDGET", "100")
    assert run("codim", "--k", "3", "--n", "5", "--method", "enum")[0] == 3


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"degree_cap": 3}))
    assert run("ipp", "--group", "C2", "--monomial", "x[1,s]x[2,e]x[3,s]x[4,s]", "--config", str(cfg))[0] == 3
    cfg.write_text(json.dumps({"no_such_key": 1}))
    assert run("codim", "--k", "2", "--n", "2", "--config", str(cfg))[0] == 2


def test_runconfig_validation():
    with pytest.raises(ValueError):
        RunConfig(enum_budget=0)
    with pytest.raises(ValueError):
        RunConfig(format="xml")


def test_selfcheck():
    code, text = run("selfcheck")
    assert code == 0
    assert text.count("PASS") == len(text.splitlines()) >= 5
