import pytest

import _cubemorse as cm


def test_gen_spec_defaults():
    spec = cm.gen_spec(1)
    assert spec["rank"] == 1
    assert spec["modulus"] == 397
    assert spec["sigma"]["A1-|B1-"] == [0, 1]


def test_verify_sizeable_roundtrip():
    spec = cm.gen_spec(1, "5")
    rep = cm.verify_sizeable(spec, "both")
    assert rep["overall"] == "fail"  # 4-cycles at p = 5
    names = {c["name"]: c["verdict"] for c in rep["checks"]}
    assert names["morse_suited"] == "pass"
    assert names["four_cycle_free"] == "fail"

    big = cm.gen_spec(1)
    assert cm.verify_sizeable(big, "arithmetic")["overall"] == "pass"


def test_realize_shape():
    g = cm.realize(cm.gen_spec(1, "5"))
    assert g["rank"] == 1
    assert sum(len(v) for v in g["blocks"].values()) == 20
    assert len(g["edges"]) == 40


def test_cell_counts():
    spec = cm.gen_spec(1, "5")
    counts = cm.cell_counts("xgamma", spec, mode="enum")
    assert counts["chi"] == -4400
    theta = cm.cell_counts("theta", n=2, mode="enum")
    assert theta["chi"] == -8


def test_chambers():
    assert len(cm.chambers("xgamma", 2)) == 12
    assert len(cm.chambers("theta", 3)) == 12


def test_hypothesis_checks():
    spec = cm.gen_spec(1, "5")
    for ch in cm.chambers("xgamma", 1):
        rep = cm.check_hypotheses_xgamma(spec, ch["representative"], "both")
        assert rep["overall"] == "pass"
    assert cm.check_hypotheses_theta(2, ["1"])["overall"] == "pass"


def test_voltage_cover():
    cov = cm.build_voltage_cover(2, "5")
    assert cm.verify_cover(cov)["overall"] == "pass"
    rep = cm.check_cover_hypotheses(cov, ["1"])
    assert rep["type1"]["overall"] == "pass"
    assert rep["type2"]["overall"] == "pass"

    cov["voltage"] = {k: 0 for k in cov["voltage"]}
    assert cm.verify_cover(cov)["overall"] == "fail"


def test_euler_formula_values():
    assert cm.euler_formula("theta", 2, "5") == -400
    assert cm.euler_formula("xgamma", 1, "5") == -28350  # frozen polynomial value


def test_bad_input_raises():
    with pytest.raises(Exception):
        cm.verify_sizeable({"rank": 1}, "both")
    with pytest.raises(Exception):
        cm.build_voltage_cover(1, "5")
