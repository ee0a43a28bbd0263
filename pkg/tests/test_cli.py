import json

import pytest
import sympy

from wschub.cli import load_config, run
from wschub.exactpoly import Poly
from wschub.labels import LabelError, label, resolve
from wschub.weighted import ConfigError, WeightedConfig


def call(capsys, tmp_path, cfg, *args, out="json"):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    code = run([args[0], "--config", str(path), "--out", out, *args[1:]])
    captured = capsys.readouterr()
    data = json.loads(captured.out) if out == "json" and captured.out else captured.out
    return code, data, captured.err


LG8 = {"preset": "lg24", "chi": [8, -1, -1]}


def test_describe_lg(capsys, tmp_path):
    code, data, _ = call(capsys, tmp_path, LG8, "describe")
    assert code == 0
    assert [r["q_w"] for r in data["reps"]] == [1, 1, 1, 3]
    assert [r["label"] for r in data["reps"]] == ["w0", "w1", "w2", "w3"]
    assert data["gcd_chi"] == 1 and data["minuscule"] is False


def test_describe_gr24_hasse(capsys, tmp_path):
    code, data, _ = call(capsys, tmp_path, {"preset": "gr(2,4)", "chi": [7, 1, 2, 3, 5]}, "describe")
    assert code == 0
    covers = {r["label"]: sorted(r["covers"]) for r in data["reps"]}
    assert covers == {"{3,4}": ["{2,4}"], "{2,4}": ["{1,4}", "{2,3}"], "{1,4}": ["{1,3}"],
                      "{2,3}": ["{1,3}"], "{1,3}": ["{1,2}"], "{1,2}": []}
    assert data["minuscule"] is True


def test_describe_wps_nonweighted(capsys, tmp_path):
    code, data, _ = call(capsys, tmp_path, {"preset": "wps(4)", "chi": "nonweighted"}, "describe")
    assert code == 0
    assert data["chi"] == [1, 1, 1, 1, 1]
    assert all(r["q_w"] == 1 and r["a_w"] == "1" for r in data["reps"])


def test_invalid_configs_exit_2(capsys, tmp_path):
    for cfg in ({"preset": "wps(4)", "chi": [1, 0, 0, 0, 0]},
                {"preset": "lg24", "chi": [11, -4, 3]},
                {"group": "gl(3)"},
                {"preset": "nope"}):
        code, _, err = call(capsys, tmp_path, cfg, "describe")
        assert code == 2, cfg
        assert "invalid config" in err
    code, _, _ = call(capsys, tmp_path, LG8, "restrict", "--w", "v9", "--x", "e")
    assert code == 2


def test_restrict_top_is_one(capsys, tmp_path):
    code, data, _ = call(capsys, tmp_path, LG8, "restrict", "--w", "w0", "--x", "w0")
    assert code == 0 and Poly.from_json(data["value"], 3) == Poly.const(3, 1)
    code, data, _ = call(capsys, tmp_path, LG8, "restrict", "--w", "w0", "--x", "w0", out="text")
    assert "value: 1" in data


def test_multiply_lg_symbolic(capsys, tmp_path):
    code, data, _ = call(capsys, tmp_path, {"preset": "lg24"}, "multiply", "--u", "w1", "--v", "w1")
    assert code == 0
    assert [t["class"] for t in data["terms"]] == ["w1", "w2"]
    # 2 c_1 with c_1 = a_w0 / a_w1
    (term,) = data["terms"][1]["coeff"]
    a0, a1, a2 = sympy.symbols("a0:3")
    assert term["exponents"] == [0, 0, 0]
    assert sympy.simplify(sympy.sympify(term["coeff"]) - 2 * (a0 - a1 - a2) / (a0 - a1 + a2)) == 0


def test_multiply_is_deterministic(capsys, tmp_path):
    outs = [call(capsys, tmp_path, LG8, "multiply", "--u", "w2", "--v", "w2", "--basis", "weighted")[1]
            for _ in range(2)]
    assert outs[0] == outs[1]


def test_chevalley(capsys, tmp_path):
    code, data, _ = call(capsys, tmp_path, LG8, "chevalley", "--v", "w1", "--alpha", "2")
    assert code == 0 and set(data["forms"]) == {"formula", "cominuscule", "w0"}
    code, data, _ = call(capsys, tmp_path, LG8, "chevalley", "--v", "w1", "--mu", "1,0,0", "--line")
    assert code == 0 and data["verified"]
    code, _, _ = call(capsys, tmp_path, LG8, "chevalley", "--v", "w1", "--alpha", "1")
    assert code == 2  # alpha_1 lies in the parabolic subset


def test_certify_p2_all_pairs(capsys, tmp_path):
    cfg = {"preset": "wps(2)", "chi": [1, 2, 3]}
    for u in ("v0", "v1", "v2"):
        for v in ("v0", "v1", "v2"):
            code, data, _ = call(capsys, tmp_path, cfg, "certify", "--u", u, "--v", v)
            assert code == 0
            assert all(r["verified"] for r in data["results"])


def test_certify_reports_negativity(capsys, tmp_path):
    cfg = {"preset": "wps(4)", "chi": [1, 2, 3, 4, 5]}
    code, data, _ = call(capsys, tmp_path, cfg, "certify", "--u", "v2", "--v", "v2",
                         "--w", "v2", "--basepoint", "v1")
    assert code == 4
    row = data["results"][0]
    assert row["verified"] and row["expansion_at"]["nonnegative"] is False
    assert row["expansion_at"]["above_interval"] is False


def test_certify_column_limit_is_a_computation_error(capsys, tmp_path):
    cfg = {"preset": "wps(2)", "chi": [1, 2, 3]}
    code, _, err = call(capsys, tmp_path, cfg, "certify", "--u", "v0", "--v", "v2", "--limit", "0")
    assert code == 3 and "computation error" in err


@pytest.mark.parametrize("name", ["wps", "wps-p4-tables", "lg24-tables"])
def test_reproduce(capsys, name):
    code = run(["reproduce", name])
    out = capsys.readouterr().out
    assert code == 0
    assert "[FAIL]" not in out and "[PASS]" in out


# config loading and labels ------------------------------------------------------
def test_load_config_explicit_datum():
    cfg = load_config({"group": {"simple_roots": [[0, 1, -1]], "simple_coroots": [[0, 1, -1]]},
                       "lambda": [1, 1, 0], "chi": [3, 0, 1]})
    assert len(cfg.reps) == 2
    cfg = load_config({"group": "gl(3)", "lambda": [2, 1, 0], "chi": [1, 2, 4], "parabolic": []})
    assert len(cfg.reps) == 6
    with pytest.raises(ConfigError):
        load_config([1, 2])


def test_labels_roundtrip():
    for cfg in (WeightedConfig("cstar_sp4", (1, 1, 1), (8, -1, -1)),
                WeightedConfig("cstar_gl(4)", (1, 1, 1, 0, 0), (7, 1, 2, 3, 5)),
                WeightedConfig("gl(4)", (1, 0, 0, 0), (1, 2, 3, 4)),
                WeightedConfig("gl(3)", (2, 1, 0), (1, 2, 4))):
        for k, w in enumerate(cfg.reps):
            assert resolve(cfg, label(cfg, w)) == w
            assert resolve(cfg, w.word_str()) == w
            assert resolve(cfg, f"#{k}") == w
            assert resolve(cfg, "wl:" + ",".join(map(str, cfg.wlam(w)))) == w
    cfg = WeightedConfig("gl(3)", (1, 0, 0), (1, 2, 4))
    # any word is sent to the maximal representative of its coset
    assert resolve(cfg, "s2") == resolve(cfg, "e")
    with pytest.raises(LabelError):
        resolve(cfg, "#9")
    with pytest.raises(LabelError):
        resolve(cfg, "{1,2}")
