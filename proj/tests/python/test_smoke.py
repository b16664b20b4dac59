from fractions import Fraction

import pytest

import glab


def test_algebra_basics():
    sl2 = glab.Algebra("sl2")
    assert sl2.dim == 3
    assert sl2.labels == ["e", "h", "f"]
    assert sl2.bracket("e", "f") == {"h": "1"}
    assert sl2.index() == 1
    assert len(sl2.basic_invariants()) == 1
    again = glab.Algebra.from_json(sl2.to_json())
    assert again.bracket("h", "e") == {"e": "2"}


def test_quotients():
    sl2 = glab.Algebra("sl2")
    assert glab.jacobi(sl2, "t^3-t")
    assert glab.quotient_index(sl2, "t^3+t+1") == 3
    r = glab.crt_idempotents("t^2-1")
    assert sorted(r) == [[Fraction(1, 2), Fraction(-1, 2)], [Fraction(1, 2), Fraction(1, 2)]]


def test_z_and_gaudin():
    z = glab.build_z(glab.Algebra("sl2"), "t^3", "t^3+t")
    assert len(z["generators"]) == 5
    assert z["bound"] == "5"
    assert z["commute"] and z["complete"]
    hs = glab.gaudin(glab.Algebra("sl2"), ["1", "2", "5"])
    assert len(hs) == 3


def test_suites():
    assert "zassembly" in glab.suites()
    r = glab.run_suite("jacobi", "sl2", {"n": 3, "p": "t^3-t"}, seed=2)
    assert r["status"] == "pass"
    assert r["seed"] == 2
    assert glab.run_suite("det-A", seed=5) == glab.run_suite("det-A", seed=5)
    assert "| check |" in glab.run_suite("forms", format="md")


def test_errors():
    with pytest.raises(ValueError):
        glab.Algebra("so3")
    with pytest.raises(ValueError):
        glab.run_suite("nope")
    saved = glab.term_budget()
    glab.set_term_budget(20)
    try:
        with pytest.raises(glab.BudgetExceeded):
            glab.run_suite("zassembly")
    finally:
        glab.set_term_budget(saved)
