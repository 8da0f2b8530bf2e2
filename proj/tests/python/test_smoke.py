"""Smoke tests for the python bindings."""

import json

import pytest

import dexterpath as dx


def test_validate():
    assert dx.validate("110100") == "110100"
    with pytest.raises(ValueError):
        dx.validate("0101")


def test_path_basics():
    assert dx.blocks("10111000") == ["10", "111000"]
    assert dx.area("1100") == 4
    assert dx.height_sequence("110100") == [1, 2, 2]
    assert dx.min_path(3) == "101010"
    assert len(dx.all_paths(5)) == 42


def test_order():
    assert dx.covers("1010") == [("1100", "red")]
    assert dx.is_maximal("110100")
    assert not dx.is_maximal("1010")
    assert dx.leq("101010", "111000")
    assert not dx.leq("110100", "111000")
    assert dx.meet("110100", "111000") == "110010"


def test_related_orders():
    assert dx.tamari_covers("110100") == ["111000"]
    assert dx.comb_covers("110100") == []


def test_monoid():
    assert dx.sharp("1100", "1100") == "111000"
    assert dx.sharp_factor("11011000") == ["110100", "1100"]


def test_interval_counts():
    expected = [1, 1, 3, 12, 56, 288, 1584]
    for n, count in enumerate(expected):
        assert dx.interval_count(n) == count
        assert int(dx.interval_count_formula(n)) == count


def test_hochschild():
    assert dx.rho("1110010010") == "120"
    assert dx.rho_inv("102") == "1101100010"
    assert len(dx.hochschild_elements(5)) == 64
    sets = dx.vertex_sets(2)
    assert len(sets["zero"]) + len(sets["one"]) == 5


def test_invariants():
    assert dx.coxeter("1101100100") == "Phi_1^2 * Phi_2 * Phi_3 * Phi_5"
    assert dx.zeta_eval(4, -1) == "-5"
    assert dx.zeta_eval(6, -2) == "-625"
    # 1 + 3r + 3b + 3r^2 + 3rb + r^3 in some printing order
    poly = dx.colored_h_polynomial(4)
    assert "r^3" in poly and "3*r*b" in poly


def test_tree():
    assert dx.to_tree("10") == "(o,o)"


def test_hasse_json():
    diagram = json.loads(dx.hasse_json(4, "dexter"))
    assert len(diagram["elements"]) == 14
    assert len(diagram["covers"]) == 21
    colors = {edge[2] for edge in diagram["covers"]}
    assert colors == {"red", "blue"}
