from fractions import Fraction

import pytest

import cgn


def test_valuation_of_powers():
    assert cgn.valuation(cgn.eps() ** 3) == 3
    assert cgn.valuation(cgn.GenNum.rational(0)) == float("inf")
    assert (cgn.eps() ** 2).valuation() == Fraction(2)


def test_sets_and_idempotents():
    even = cgn.IndexSet.blocks(0, 2)
    assert even.classify() == "Splitting"
    e = cgn.GenNum.idempotent(even)
    assert e * e == e
    assert cgn.classify(e) == "ZeroDivisor"
    assert cgn.classify(cgn.eps() + e) == "Invertible"


def test_gallery_certificates():
    b = cgn.GenNum.gallery("beta")
    y = cgn.closure_witness(b)
    assert cgn.in_closure(y, b)
    assert not cgn.in_principal(y, b)
    assert cgn.in_principal(cgn.GenNum.gallery("beta3"), cgn.GenNum.gallery("beta2"))
    assert not cgn.in_radical(cgn.GenNum.gallery("beta2"), cgn.GenNum.gallery("beta3"))


def test_oracle_bracket():
    lo, hi = cgn.oracle_val(cgn.eps() ** 3)
    assert lo <= 3 <= hi


def test_script_report():
    rep = cgn.eval_script("let b = graded(nu2, i -> i + 1)\n:val b\n:val zz")
    assert rep["schema"] == "cgn-report/1"
    first, second, third = rep["results"]
    assert first["ok"] and second["value"] == "1"
    assert third["error"]["kind"] == "UnknownIdentifier"


def test_errors_and_suites():
    with pytest.raises(cgn.Error, match="UnknownSuite"):
        cgn.run_suite("nonexistent")
    assert cgn.run_suite("gallery")["ok"]
    assert "cli" in cgn.suite_names()
