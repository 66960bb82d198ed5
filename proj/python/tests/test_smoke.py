import pytest

import nilreg


def test_reduce_goldens():
    assert nilreg.reduce("q^2 x q x q^3 x^2 q") == "q^4 x^2 q"
    assert nilreg.reduce("q^3 x^2 q", "x q^4 x^2") == "q^3 x^2 q^4 x^2"
    assert nilreg.reduce("x^3") == "0"
    assert nilreg.reduce("1") == "1"


def test_reduce_in_r():
    assert nilreg.reduce("b a", "a b", presentation="R") == "0"
    assert nilreg.reduce("a b a", presentation="R") == "a b a"


def test_basis_counts():
    assert [len(nilreg.basis(k)) for k in range(4)] == [1, 3, 7, 12]
    assert nilreg.basis(0) == ["1"]


def test_phi_images():
    assert nilreg.phi("q x^2") == "[[a, 0], [0, 0]]"
    assert nilreg.phi("q^2 x") == "[[b, 0], [0, 0]]"
    assert nilreg.phi("x^3") == "[[0, 0], [0, 0]]"
    assert nilreg.phi("1 - q x - x q + x q^2 x", n=2) == "[[0, 0], [0, 0]]"


def test_membership():
    assert nilreg.membership_T("[[b, 1 - b a], [0, 0]]")["in_T"]
    assert not nilreg.membership_T("[[0, 1], [0, 0]]")["in_T"]


@pytest.mark.parametrize("check", ["separativity", "regularity", "determinant", "n2-variant"])
def test_verify_passes(check):
    report = nilreg.verify(check)
    assert report["status"] == "pass"
    assert report["check"] == check


def test_search_exhausted():
    report = nilreg.verify("unit-regular-search", max_word_len=3)
    assert report["status"] == "exhausted"
    assert report["candidates_examined"] == 128
    assert "witness" not in report or report["witness"] is None


def test_errors():
    with pytest.raises(ValueError):
        nilreg.reduce("x ^")
    with pytest.raises(ValueError):
        nilreg.verify("no-such-check")
    assert "phi-faithful" in nilreg.check_names()
