"""Smoke tests for the python bindings.

Plain asserts so the file runs directly (python3 test_smoke.py) as well as
under pytest.  Exercises every exported function once with known answers.
"""

import json

import psmat


def test_classify():
    r = json.loads(psmat.classify("1", "1", "1"))
    assert r["tag"] == "MultipleRoot"
    assert r["delta"] == "2"
    assert r["dis"] == "0"
    assert "normalization" in r

    r = json.loads(psmat.classify("0", "0", "0"))
    assert r["tag"] == "Nilpotent"

    r = json.loads(psmat.classify("0", "2", "0"))
    assert r["tag"] == "HalfSum"
    assert r["r"] == ["6", "0", "-6", "0"]


def test_construct_verify_roundtrip():
    bundle = psmat.construct("nil-n9")
    rep = json.loads(psmat.verify(bundle))
    assert rep["pass"]
    assert all(line["pass"] for line in rep["lines"])
    assert any("nilpotent" in note for note in rep["notes"])

    rep = json.loads(psmat.verify(bundle, "R51"))
    assert rep["pass"]

    quad = psmat.construct("sigma-72")
    assert json.loads(psmat.verify(quad))["pass"]

    pair = psmat.construct("tsys", json.dumps({"m": 2}))
    assert json.loads(psmat.verify(pair))["pass"]


def test_construct_options():
    t2 = json.loads(psmat.construct("t2", json.dumps({"phi": 1, "psi": 1, "theta": 1})))
    assert t2["kind"] == "triple"
    rep = json.loads(psmat.verify(json.dumps(t2)))
    assert rep["pass"]

    gen = psmat.construct("generic", json.dumps({"alpha": "3", "beta": "5", "gamma": "9"}))
    assert json.loads(psmat.verify(gen))["pass"]


def test_flag_report():
    f = json.loads(psmat.flag_report(psmat.construct("nil-n9")))
    assert f["signature"] == [1, 2, 3, 2, 1]
    assert f["algebra"]["dimension"] == 8
    assert f["center"]["dimension"] == 5
    assert f["varpi"] == "0"
    assert len(f["triangularizing_basis"]) == 9


def test_ncgb():
    g = json.loads(psmat.ncgb("s4", 6, ["1*a.a.a.a.a", "1*a.a"]))
    assert g["basis_size"] == 7
    assert g["complete_below_bound"]
    zero, nonzero = g["reductions"]
    assert zero["reduces_to_zero"]
    assert not nonzero["reduces_to_zero"]
    assert "normal_form" in nonzero


def test_quat():
    region = json.loads(psmat.quat_region(-4.0, 4.0))
    assert region["exists_noncommuting"]
    assert 2.28 <= region["v2_threshold"] <= 2.31

    sols = json.loads(psmat.quat_solve(-4.0, 4.0, 40, 0))["solutions"]
    assert sols and all(s["residual"] <= 1e-9 for s in sols)
    assert psmat.quat_solve(-4.0, 4.0, 40, 0) == psmat.quat_solve(-4.0, 4.0, 40, 0)

    assert not json.loads(psmat.quat_solve(-4.0, 2.0, 40, 0))["solutions"]


def test_errors():
    try:
        psmat.construct("no-such-case")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown case must raise ValueError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(name, "ok")
    print("all smoke tests passed")
