import io
import json

import pytest

from omimwidth.cli import run

C5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"
K2 = "2 1\n0 1\n"
K2_BD = json.dumps({"schema": 1, "parent": [-1, 0], "leaf_of": [0, 1]})


@pytest.fixture
def files(tmp_path):
    def make(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if code == 0 and out.startswith("{") else out), err


def test_solve_is_engines(capsys, files):
    c5 = files("c5.gr", C5)
    for engine in ("repdp", "nd", "brute"):
        code, out, _ = call(capsys, "solve", "is", "--graph", c5, "--engine", engine)
        assert code == 0 and out["schema"] == 1 and out["weight"] == 2
        assert "runtime_ms" not in out
    code, out, _ = call(capsys, "solve", "fvs", "--graph", c5)
    assert code == 0 and out["weight"] == 1
    code, out, _ = call(capsys, "solve", "is", "--graph", c5, "--timing")
    assert "runtime_ms" in out


def test_nd_engine_rejects_fvs(capsys, files):
    code, _, err = call(capsys, "solve", "fvs", "--graph", files("c5.gr", C5), "--engine", "nd")
    assert code == 2 and "independent set only" in err


def test_gen_path_into_nd(capsys, monkeypatch):
    code, text, _ = call(capsys, "gen", "path", "--n", "9")
    assert code == 0 and text.startswith("9 8")
    code, out, _ = call(capsys, "nd", "compute", stdin=text, monkeypatch=monkeypatch)
    assert code == 0 and out["nd"] >= 2


def test_width_bd_on_k2(capsys, files):
    code, out, _ = call(capsys, "width", "bd", "--graph", files("k2.gr", K2), "--bd", files("k2.bd", K2_BD),
                        "--kind", "omim")
    assert code == 0 and out["width"] == 1


def test_width_cut_and_oracle(capsys, files):
    c5 = files("c5.gr", C5)
    code, out, _ = call(capsys, "width", "cut", "--graph", c5, "--cut", "0,1", "--kind", "mim")
    assert code == 0 and out["value"] == 2 and out["kind"] == "mim"
    code, out, _ = call(capsys, "width", "cut", "--graph", c5, "--side", files("side", "0 1\n"), "--kind", "umim")
    assert code == 0 and out["kind"] == "umimA"
    code, _, err = call(capsys, "width", "cut", "--graph", c5)
    assert code == 2 and "exactly one" in err
    code, out, _ = call(capsys, "width", "oracle", "--graph", c5, "--kind", "sim")
    assert code == 0 and out["width"] == 1 and out["bd"]


def test_trees(capsys, files, tmp_path):
    c5 = files("c5.gr", C5)
    out_path = str(tmp_path / "tree.json")
    code, out, _ = call(capsys, "tree", "build", "--graph", c5, "--out", out_path)
    assert code == 0
    code, out, _ = call(capsys, "tree", "verify", "--graph", c5, "--tree", out_path)
    assert code == 0 and out["valid"]
    bad = files("bad.json", json.dumps({"label": [], "kind": "leaf"}))
    code, out, _ = call(capsys, "tree", "verify", "--graph", c5, "--tree", bad)
    assert code == 0 and not out["valid"] and "root" in out["reason"]


def test_gen_and_certify(capsys, tmp_path):
    g, td = str(tmp_path / "g.gr"), str(tmp_path / "g.td")
    code, out, _ = call(capsys, "gen", "chordal", "--n", "10", "--seed", "3", "--out", g, "--td-out", td)
    assert code == 0 and out["n"] == 10
    code, out, _ = call(capsys, "certify", "omim-le-tin", "--graph", g, "--td", td)
    assert code == 0 and out["holds"] and out["width"] <= 1
    code, out, _ = call(capsys, "certify", "sim-le-tmm", "--graph", g)
    assert code == 0 and out["holds"]
    code, out, _ = call(capsys, "certify", "eq1-bound", "--n", "9", "--k", "1")
    assert out["bound"] == 165 and out["t"] == 81
    code, out, _ = call(capsys, "certify", "beta-bounds", "--graph", g)
    assert code == 0 and out["lower_ok"] and out["upper_ok"]
    code, _, err = call(capsys, "gen", "chordal", "--n", "5")
    assert code == 2 and "--seed" in err


def test_oracles(capsys, files):
    c5 = files("c5.gr", C5)
    expected = {"is": ("weight", 2), "fvs": ("weight", 1), "nd": ("nd", 2), "beta": ("beta", None)}
    for which, (key, value) in expected.items():
        code, out, _ = call(capsys, "oracle", which, "--graph", c5)
        assert code == 0 and key in out
        if value is not None:
            assert out[key] == value


def test_input_errors(capsys, files, tmp_path):
    code, _, err = call(capsys, "solve", "is", "--graph", str(tmp_path / "missing.gr"))
    assert code == 2 and "cannot read" in err
    code, _, err = call(capsys, "solve", "is", "--graph", files("bad.gr", "3 1\n0 9\n"))
    assert code == 2 and "out of range" in err
    big = files("big.gr", "13 0\n")
    code, _, err = call(capsys, "oracle", "nd", "--graph", big)
    assert code == 2 and "at most 12" in err
    code, _, _ = call(capsys, "no-such-command")
    assert code == 2


def test_deterministic_output(capsys, files):
    c5 = files("c5.gr", C5)
    first = call(capsys, "solve", "fvs", "--graph", c5)[1]
    second = call(capsys, "solve", "fvs", "--graph", c5)[1]
    assert first == second
