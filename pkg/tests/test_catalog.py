"""Catalog tests: the shipped entries load with consistent declarations,
their builders produce working algebras and bundles, the presentations
match the reference data used across the test suite, and the declared
expectations (unimodularity in particular) agree with direct computation.
"""

from fractions import Fraction

import pytest

from hopfbead.catalog import CatalogEntry, catalog_names, load_entry
from hopfbead.hopfcore import check_integral, pair
from hopfbead.kirby import evaluate, load_shipped
from hopfbead.nenciu import NenciuAlgebra

from helpers import (n1_data, n2_data, n3_data, n4_data, sf2n_data,
                     sweedler_data)

NAMES = ["sf2n", "n1", "n2", "n3", "n4", "uqsl2_r8",
         "biprod_sf2_r8", "biprod_n4_r8", "biprod_n2_r8"]


def test_names_and_order():
    assert catalog_names() == NAMES


def test_declared_dimensions():
    dims = {name: load_entry(name).dim for name in NAMES}
    assert dims == {
        "sf2n": 8, "n1": 1024, "n2": 1024, "n3": 4096, "n4": 64,
        "uqsl2_r8": 64, "biprod_sf2_r8": 512, "biprod_n4_r8": 4096,
        "biprod_n2_r8": 65536,
    }


def test_only_the_largest_entry_is_sampled_only():
    for name in NAMES:
        e = load_entry(name)
        if name == "biprod_n2_r8":
            assert e.verify_policy == "sampled"
            assert "sampled" in e.note
        else:
            assert e.verify_policy == "exhaustive"


def test_presentations_match_the_reference_data():
    refs = {"sf2n": sf2n_data(1), "n1": n1_data(), "n2": n2_data(),
            "n3": n3_data(), "n4": n4_data(),
            "biprod_sf2_r8": sf2n_data(1), "biprod_n4_r8": n4_data(),
            "biprod_n2_r8": n2_data()}
    for name, ref in refs.items():
        data = load_entry(name).data
        assert data.m == ref.m
        assert data.d == ref.d
        assert data.u == ref.u
        assert data.labels == ref.labels


def test_small_bundles_evaluate():
    d = load_shipped("cancelling_pair")
    for name in ("sf2n", "n4", "uqsl2_r8", "biprod_sf2_r8"):
        e = load_entry(name)
        b = e.bundle()
        assert b.alg.dim == e.dim
        assert evaluate(d, b) == b.alg.field.one


def test_alpha_values():
    e = load_entry("n2")
    field = e.field()
    # opposite-type pairs of n2 are (0, 1) and (2, 3); only the declared
    # pair (2, 3) carries the parameter
    assert e.alpha_values(field) == [0, field.param(0)]
    assert e.alpha_values(field, None) == [0, 0]
    half = field.from_rational(Fraction(1, 2))
    assert e.alpha_values(field, [Fraction(1, 2)]) == [0, half]
    with pytest.raises(ValueError) as err:
        e.alpha_values(field, [1, 2])
    assert "takes 1 alpha value" in str(err.value)


def test_pivotal_monomials():
    for name, label in (("sf2n", "K1"), ("n1", "K1^2"), ("n2", "K3^2"),
                        ("n3", "K3^2"), ("n4", "K2^2"), ("uqsl2_r8", "K")):
        e = load_entry(name)
        alg = e.algebra()
        assert alg.mono_str(e.pivotal_mono(alg)) == label


def test_quantum_group_entry_has_no_rmatrix_params():
    e = load_entry("uqsl2_r8")
    assert e.rmatrix_params(e.field()) is None


def test_unimodularity_expectations_match_direct_computation():
    # the structural criterion (column sums of d) against the direct
    # comparison of the two cointegrals, for every catalog entry
    for name in NAMES:
        e = load_entry(name)
        expected = e.expect["unimodular"]
        if e.kind == "nenciu":
            alg = e.algebra()
            assert e.data.unimodular_by_criterion() is expected
            assert alg.is_unimodular_direct() is expected
        else:
            alg = e.algebra()
            assert (alg.cointegral("left") == alg.cointegral("right")) \
                is expected


def test_sweedler_negative_control():
    data = sweedler_data()
    assert data.unimodular_by_criterion() is False
    alg = NenciuAlgebra(data)
    assert alg.is_unimodular_direct() is False
    assert alg.cointegral("left") != alg.cointegral("right")


def test_integral_sidedness_is_declared_correctly():
    # verified directly on every entry the exhaustive check can afford
    for name in ("sf2n", "n4", "uqsl2_r8"):
        e = load_entry(name)
        alg = e.algebra()
        lam = alg.integral_functional()
        left, _ = check_integral(alg, lam, "left")
        right, _ = check_integral(alg, lam, "right")
        assert left is True
        assert right is e.integral_two_sided


def test_bundle_carries_the_declared_pivotal_and_normalisation():
    e = load_entry("n2")
    b = e.bundle()
    assert b.alg.mono_str(b.pivotal) == "K3^2"
    assert b.integral_two_sided is True
    assert pair(b.integral, b.cointegral) == b.alg.field.one


def test_load_entry_rejects_unknown_names():
    with pytest.raises(ValueError) as err:
        load_entry("nope")
    assert "no catalog entry" in str(err.value)
    assert "sf2n" in str(err.value)


def test_load_entry_from_a_path(tmp_path):
    # the four-dimensional negative control as an external file
    p = tmp_path / "sweedler.toml"
    p.write_text("""
name = "sweedler"
kind = "nenciu"
dim = 4
summary = "the four-dimensional negative control"

[presentation]
m = [2]
d = [[1]]
u = [[1]]
labels = ["X"]

[structure]
z = [[1]]
alpha_pairs = []
pivotal = [1]
integral_two_sided = false

[expect]
unimodular = false
""")
    e = load_entry(str(p))
    assert e.name == "sweedler"
    alg = e.algebra()
    assert alg.dim == 4
    assert e.data.unimodular_by_criterion() is False


def test_load_entry_rejects_bad_files(tmp_path):
    p = tmp_path / "broken.toml"
    p.write_text("x = [")
    with pytest.raises(ValueError) as err:
        load_entry(str(p))
    assert "not valid TOML" in str(err.value)
    with pytest.raises(ValueError) as err:
        load_entry(str(tmp_path / "missing.toml"))
    assert "cannot read" in str(err.value)


def test_entry_validation():
    base = {"name": "x", "kind": "nenciu", "dim": 8,
            "presentation": {"m": [2], "d": [[1], [1]], "u": [[1], [1]],
                             "labels": ["Z1+", "Z1-"]},
            "structure": {"z": [[1]], "alpha_pairs": [[0, 1]],
                          "pivotal": [1]}}
    CatalogEntry(base)
    bad = dict(base, dim=16)
    with pytest.raises(ValueError, match="declares dim"):
        CatalogEntry(bad)
    bad = dict(base, kind="group")
    with pytest.raises(ValueError, match="unknown catalog kind"):
        CatalogEntry(bad)
    bad = dict(base, structure={"z": [[1]], "alpha_pairs": [[0, 2]],
                                "pivotal": [1]})
    with pytest.raises(ValueError, match="opposite-type"):
        CatalogEntry(bad)
    bad = {k: v for k, v in base.items() if k != "presentation"}
    with pytest.raises(ValueError, match="presentation"):
        CatalogEntry(bad)
    bad = dict(base, kind="uqsl2", dim=64)
    with pytest.raises(ValueError, match="root order"):
        CatalogEntry(bad)
