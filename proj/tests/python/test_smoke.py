"""Smoke tests for the gtdisc extension module.

Runs standalone (python test_smoke.py) so ctest needs nothing beyond the
interpreter; each check mirrors a pinned value from the C++ test suite.
"""

import json

import gtdisc


def test_bracket_models_agree():
    geo = gtdisc.bracket("g1 g2^-1", "g2 g1^-1", p=2, model="geometric")
    sk = gtdisc.bracket("g1 g2^-1", "g2 g1^-1", p=2, model="skein")
    assert geo == "|g1 g2 g1^-1 g2^-1| - |g1 g2^-1 g1^-1 g2|"
    assert sk == geo
    assert gtdisc.bracket("g1", "g2", p=2) == "0"


def test_graded_bracket_pinned():
    out = gtdisc.bracket("x1 x2^2", "x2 x3^2", p=3, model="graded")
    assert out == "|x1 x2^2 x3^2| - |x1 x3^2 x2^2|"


def test_mu_and_cobracket():
    assert gtdisc.mu("g1", p=2) == "-|1| (x) g1"
    assert gtdisc.mu("g1", p=2, model="skein") == "-2 |1| (x) g1"
    assert gtdisc.cobracket("g1 g2", p=2) == "-2 |1| /\\ |g1 g2|"
    assert gtdisc.cobracket("g1 g2", p=2, model="skein") == gtdisc.cobracket("g1 g2", p=2)


def test_json_format():
    out = json.loads(gtdisc.mu("g1", p=2, model="skein", fmt="json"))
    assert out == {
        "terms": [{"coeff": {"b0": "-2", "b1": "0"}, "loop": "|1|", "path": "g1"}]
    }


def test_errors_map_to_python():
    try:
        gtdisc.bracket("g3", "g1", p=2)
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range generator should raise ValueError")

    try:
        gtdisc.mu("|g1|", p=2)
    except ValueError:
        pass
    else:
        raise AssertionError("cyclic input to mu should raise ValueError")


def test_cli_passthrough():
    code, out, err = gtdisc.run(["crosscheck", "bracket", "--max-len", "0", "-p", "2"])
    assert (code, out, err) == (0, "PASS (trivial corpus)\n", "")
    code, out, err = gtdisc.run(["nope"])
    assert code == 2
    assert out == ""
    assert err != ""


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
