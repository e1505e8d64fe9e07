import io
import json

import pytest

from seifnet.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_surgery():
    code, out = call("surgery", "-3", "2", "--slope", "-1/2")
    assert code == 0 and "S2(2,3,11)" in out
    code, out = call("surgery", "-3", "2", "--slope", "-6", "--json")
    assert json.loads(out)["orbifold"] == [0, 2, 3]


def test_knm_table():
    code, out = call("knm", "-6", "1")
    assert code == 0
    for s in ("19", "18", "17", "S2(1,2,3)", "S2(1,2,8)", "S2(2,3,5)", "P(-2,3,7)"):
        assert s in out


def test_knm_json_and_grid():
    code, out = call("knm", "-1", "2", "--json")
    d = json.loads(out)
    assert d["name"] == "Tw(3)" and d["torus_witness"] is None
    code, out = call("knm", "--grid", "-2:-1,0:1", "--json")
    assert code == 0 and len(json.loads(out)["rows"]) == 4


def test_twist_and_kp_and_pairs():
    code, out = call("twist", "c^-6", "1", "--slope", "-6")
    assert code == 0 and "P(-2,3,7)" in out
    code, out = call("kp", "-1", "--json")
    assert json.loads(out)["orbifold"] == [2, 5, 7]
    code, out = call("pairs", "-6", "--json")
    assert "{s_-3, c_3^-6}" in json.loads(out)["basic"]


def test_network_formats(tmp_path):
    code, dot = call("network", "--preset", "twist-family", "--dot")
    assert code == 0 and dot.startswith("digraph")
    code, js = call("network", "--preset", "twist-family", "--json")
    assert json.loads(js)["vertices"]
    cfg = tmp_path / "net.cfg"
    cfg.write_text("preset = cm-triple\nm = -6\nradius = 1\n")
    code, a = call("network", "--config", str(cfg), "--json")
    code2, b = call("network", "--preset", "cm-triple", "--m", "-6", "--radius", "1", "--json")
    assert code == code2 == 0 and a == b
    code, out = call("network", "--seeds", "-1,-6", "--seiferters", "c_mu,c^-6", "--radius", "1")
    assert code == 0 and "vertices" in out


def test_deterministic_output():
    assert call("network", "--preset", "twist-family", "--json") == call("network", "--preset", "twist-family", "--json")


def test_verify():
    code, out = call("verify", "--filter", "base-orbifold")
    assert code == 0 and out.count("PASS") == 3
    code, out = call("verify", "--filter", "ps-obstruction")
    assert code == 0 and "all claims pass" in out


def test_verify_failure_exit_code(monkeypatch):
    from seifnet import claims
    bad = claims.Claim("broken-claim", "always wrong", lambda: (1, 2))
    monkeypatch.setattr(claims, "CLAIMS", claims.CLAIMS + (bad,))
    code, out = call("verify", "--filter", "broken-claim")
    assert code == 2 and "FAIL" in out


@pytest.mark.parametrize("argv", [
    ("surgery", "-3", "2", "--slope", "1.5"),
    ("surgery", "-3", "2"),
    ("knm", "1.5", "2"),
    ("knm", "-6"),
    ("knm", "-6", "1", "--grid", "0:1,0:1"),
    ("twist", "c", "1", "--slope", "-2"),
    ("twist", "bogus", "1", "--slope", "-2"),
    ("twist", "c_mu", "1", "--slope", "1/2"),
    ("surgery", "2", "3", "--slope", "1"),
    ("network",),
    ("network", "--preset", "cm-triple"),
    ("verify", "--filter", "nope"),
    ("frobnicate",),
])
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_bad_config(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = red\n")
    assert call("network", "--config", str(cfg))[0] == 1
    assert call("network", "--config", str(tmp_path / "missing.cfg"))[0] == 1
