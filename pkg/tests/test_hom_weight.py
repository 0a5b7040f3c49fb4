"""Homogeneous weights: character route, axiomatic route, validation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homring.errors import NotLocal, ParseError
from homring.rings import ring_from_spec
from homring.weights import (WeightTable, hamming_table, hom_weight,
                             hom_weight_axiomatic, parse_gamma,
                             validate_weight)

RINGS = ["Zm:4", "Zm:5", "Zm:6", "Zm:7", "Zm:8", "Zm:9", "Zm:10", "Zm:14",
         "GR:2,1,2", "GR:2,1,3", "GR:2,2,2", "GR:3,2,2", "GR:2,3,2",
         "FXY:2", "FXY:3", "Z4X"]

F = Fraction

KNOWN_TABLES = {
    "Zm:4": (0, 1, 2, 1),
    "Zm:6": (0, F(1, 2), F(3, 2), 2, F(3, 2), F(1, 2)),
    "Zm:8": (0, 1, 1, 1, 2, 1, 1, 1),
    "Zm:9": (0, 1, 1, F(3, 2), 1, 1, F(3, 2), 1, 1),
    "Zm:10": (0, F(3, 4), F(5, 4), F(3, 4), F(5, 4), 2,
              F(5, 4), F(3, 4), F(5, 4), F(3, 4)),
}


@pytest.mark.parametrize("spec,expected", sorted(KNOWN_TABLES.items()))
def test_known_weight_tables(spec, expected):
    wt = hom_weight(ring_from_spec(spec), 1)
    assert wt.values == expected


@pytest.mark.parametrize("spec", RINGS)
def test_both_routes_agree(spec):
    R = ring_from_spec(spec)
    assert hom_weight(R, 1).values == hom_weight_axiomatic(R, 1).values
    g = F(2, 3)
    assert hom_weight(R, g).values == hom_weight_axiomatic(R, g).values


@pytest.mark.parametrize("spec", RINGS)
def test_weight_scales_linearly_in_gamma(spec):
    R = ring_from_spec(spec)
    base = hom_weight(R, 1).values
    half = hom_weight(R, F(1, 2)).values
    assert half == tuple(v / 2 for v in base)


@pytest.mark.parametrize("spec", RINGS)
def test_axioms_hold(spec):
    wt = hom_weight(ring_from_spec(spec), 1)
    report = validate_weight(wt)
    assert report["valid"], report["violations"]


@given(st.sampled_from(RINGS), st.data())
@settings(max_examples=60)
def test_orbit_sum_axiom_pointwise(spec, data):
    R = ring_from_spec(spec)
    wt = hom_weight(R, 1)
    x = data.draw(st.integers(min_value=1, max_value=R.order - 1))
    orbit = sorted(set(R.mul_table()[x]))
    total = sum((wt.values[y] for y in orbit), F(0))
    assert total == len(orbit)


def test_validate_weight_reports_a_tampered_value():
    R = ring_from_spec("Zm:4")
    wt = WeightTable(R, 1, (0, 1, 3, 1))
    report = validate_weight(wt)
    assert not report["valid"]
    axioms = {v["axiom"] for v in report["violations"]}
    assert "orbit-sum" in axioms
    wt2 = WeightTable(R, 1, (0, 2, 2, 1))
    rep2 = validate_weight(wt2)
    assert {v["axiom"] for v in rep2["violations"]} == {"orbit-constant",
                                                        "orbit-sum"}
    wt3 = WeightTable(R, 1, (1, 1, 2, 1))
    assert any(v["axiom"] == "zero" for v in validate_weight(wt3)["violations"])


def test_units_share_one_weight_on_local_rings():
    for spec in ("Zm:4", "Zm:8", "Zm:9", "GR:2,2,2", "FXY:3", "Z4X"):
        R = ring_from_spec(spec)
        wt = hom_weight(R, 1)
        assert len({wt.values[u] for u in R.units()}) == 1


def test_hamming_table():
    R = ring_from_spec("Zm:5")
    wt = hamming_table(R, 1)
    assert wt.kind == "hamming"
    assert wt.values == (0, 1, 1, 1, 1)
    # over a prime field the Hamming weight is homogeneous of gamma (q-1)/q
    scaled = hom_weight(R, F(4, 5))
    assert scaled.values == wt.values


def test_parse_gamma():
    R4 = ring_from_spec("Zm:4")
    assert parse_gamma("1", R4) == 1
    assert parse_gamma("3/2", R4) == F(3, 2)
    assert parse_gamma("hamming-normalized", R4) == F(1, 2)
    assert parse_gamma("hamming-normalized", ring_from_spec("Zm:5")) == F(4, 5)
    with pytest.raises(NotLocal):
        parse_gamma("hamming-normalized", ring_from_spec("Zm:6"))
    with pytest.raises(ParseError):
        parse_gamma("one", R4)
    with pytest.raises(ParseError):
        parse_gamma("1/0", R4)


def test_scaled_representation_round_trips():
    R = ring_from_spec("Zm:10")
    wt = hom_weight(R, 1)
    den, ints = wt.scaled()
    assert all(F(i, den) == v for i, v in zip(ints, wt.values))
