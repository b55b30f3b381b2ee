"""Smoke tests of the Python bindings."""

import pytest

import vulnkit

STAR5 = "Ds_"
C5 = "Dhc"


def test_params():
    report = vulnkit.params(STAR5)
    assert report["n"] == 5
    assert report["kappa"] == 1
    assert report["toughness"] == "1/4"
    assert report["scattering"] == 3
    assert report["integrity"] == 2
    assert report["coc"]["1"] == 5


def test_psi():
    pf = vulnkit.psi(STAR5)
    assert pf["variant"] == "omega"
    assert pf["values"] == [[0, 5], [1, 0], [2, 3], [3, 2], [4, 1]]
    big = vulnkit.psi(STAR5, variant="Omega")
    assert big["values"] == [[0, 5], [1, 1], [2, 3], [3, 2], [4, 1], [5, 0]]


def test_check():
    assert vulnkit.check(C5, 1, 0) is True
    assert vulnkit.check(C5, "3/2", 0) is False


def test_phi():
    assert vulnkit.phi("e", "omega", 5, 2, 1) == "7"
    assert vulnkit.phi("e", "Omega", 5, 2, 1, closed=True) == "9/2"
    assert vulnkit.phi("kappa", "omega", 5, 1, 2) == "undefined:infeasible"


def test_threshold():
    result = vulnkit.threshold("e", "conn:k=1", 5, method="brute")
    assert result["value"] == "6"
    assert result["witness"]
    region = vulnkit.threshold("delta", "conn:k=2", 6)
    assert region["value"] == "2"


def test_implies():
    assert vulnkit.implies("conn:k=2", "conn:k=1", 6) is True
    assert vulnkit.implies("conn:k=1", "conn:k=2", 6) is False


def test_graph6_round_trip():
    assert vulnkit.canonical_graph6(STAR5) == STAR5
    with pytest.raises(Exception):
        vulnkit.canonical_graph6("not graph6")
