"""R-matrix layer tests: the congruence checker against the axiom verifier,
closed-form monodromies, Drinfeld and ribbon elements, non-factorizability
witnesses, and the exhaustive structure search on the small presentations.

alpha is kept formal (a polynomial parameter) throughout, so every equality
asserted here holds identically in it.
"""

from fractions import Fraction

import pytest

from hopfbead.biproduct import BiproductAlgebra
from hopfbead.hopfcore import (
    Tensor, check_integral, exp_nilpotent, find_pivotals,
    distinguished_grouplike as coproduct_side_grouplike,
)
from hopfbead.nenciu import NenciuAlgebra
from hopfbead.qtribbon import (
    BudgetExceededError, RMatrixParams, anomaly_value, build_R, build_Rz,
    build_r_factors, check_constraints, distinguished_grouplike,
    drinfeld_element, drinfeld_inverse, factorizability_rank, make_ribbon,
    monodromy, opposite_type_pairs, pair_alpha, r_inverse, search_structures,
    strong_nf_witness, verify_qt,
)
from hopfbead.scalar import field_for
from hopfbead.uqsl2 import UqSmallAlgebra

from helpers import n1_data, n2_data, n3_data, n4_data, sf2n_data

Z_BLOCK = [[0, 3, 2], [1, 0, 0], [2, 0, 2]]   # the 3x3 structure matrix
Z_PAIR = [[2, 3], [1, 0]]                      # the 2x2 one


def product(factors):
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def checks_by_axiom(report):
    return {c["axiom"]: c for c in report["checks"]}


@pytest.fixture(scope="module")
def sf2():
    field = field_for(2, params=("a",))
    alg = NenciuAlgebra(sf2n_data(1), field)
    params = RMatrixParams(alg.data, [[1]], pair_alpha(alg.data, [field.param(0)]))
    return alg, params


@pytest.fixture(scope="module")
def n1():
    alg = NenciuAlgebra(n1_data(), field_for(4))
    return alg, RMatrixParams(alg.data, Z_PAIR)


@pytest.fixture(scope="module")
def n4():
    alg = NenciuAlgebra(n4_data(), field_for(4))
    return alg, RMatrixParams(alg.data, Z_PAIR)


@pytest.fixture(scope="module")
def uq8():
    return UqSmallAlgebra(8)


# -- opposite-type pairs and the alpha pattern helper ----------------------


def test_opposite_type_pairs():
    assert opposite_type_pairs(sf2n_data(1)) == ((0, 1),)
    assert opposite_type_pairs(sf2n_data(2)) == ((0, 1), (2, 3))
    assert opposite_type_pairs(n1_data()) == ((4, 5),)
    assert opposite_type_pairs(n2_data()) == ((0, 1), (2, 3))
    assert opposite_type_pairs(n3_data()) == ((0, 1), (2, 3), (4, 5))
    assert opposite_type_pairs(n4_data()) == ((0, 1),)


def test_pair_alpha_is_antisymmetric():
    alpha = pair_alpha(n2_data(), [0, 7])
    assert alpha[2][3] == 7 and alpha[3][2] == -7
    assert alpha[0][1] == 0 and alpha[1][0] == 0
    with pytest.raises(AssertionError):
        pair_alpha(n2_data(), [1])


# -- the congruence checker -------------------------------------------------


def test_constraints_accept_the_worked_structures(sf2):
    alg, params = sf2
    assert check_constraints(alg.data, params, alg.field, alg=alg) == []

    data4 = sf2n_data(2)
    f4 = field_for(2, params=("a1", "a2"))
    p4 = RMatrixParams(data4, [[1]],
                       pair_alpha(data4, [f4.param(0), f4.param(1)]))
    assert check_constraints(data4, p4, f4) == []

    assert check_constraints(n1_data(), RMatrixParams(n1_data(), Z_PAIR)) == []
    assert check_constraints(n4_data(), RMatrixParams(n4_data(), Z_PAIR)) == []

    n2 = n2_data()
    f2 = field_for(4, params=("a",))
    p2 = RMatrixParams(n2, Z_BLOCK, pair_alpha(n2, [0, f2.param(0)]))
    assert check_constraints(n2, p2, f2) == []

    n3 = n3_data()
    f3 = field_for(4, params=("a",))
    p3 = RMatrixParams(n3, Z_BLOCK, pair_alpha(n3, [0, f3.param(0), 0]))
    assert check_constraints(n3, p3, f3) == []


def test_constraints_reject_identity_z_on_the_paired_presentation():
    bad = check_constraints(n1_data(), RMatrixParams(n1_data(), [[1, 0], [0, 1]]))
    assert bad == ["C1[k=0]", "C1[k=1]", "C1[k=2]", "C1[k=3]",
                   "C1[k=4]", "C1[k=5]",
                   "C2[k=4,a=0]", "C2[k=4,a=1]",
                   "C2[k=5,a=0]", "C2[k=5,a=1]"]


def test_constraints_reject_zero_z(sf2):
    alg, _ = sf2
    bad = check_constraints(alg.data, RMatrixParams(alg.data, [[0]]),
                            alg.field, alg=alg)
    assert bad == ["C1[k=0]", "C1[k=1]", "C2[k=0,a=0]", "C2[k=1,a=0]"]
    # the axiom verifier agrees: R collapses to 1 (x) 1, which fails QT5
    r = build_R(alg, RMatrixParams(alg.data, [[0]]))
    assert r == alg.unit_tensor(2)
    rep = verify_qt(r)
    by = checks_by_axiom(rep)
    assert by["QT5"]["status"] == "fail" and by["QT5"]["witness"] == "h = Z1+"


def test_constraints_reject_alpha_on_the_wrong_pair():
    # on the 3x3-block presentation the first pair cannot carry alpha:
    # the gate conditions single out the second
    n2 = n2_data()
    f2 = field_for(4, params=("a",))
    p = RMatrixParams(n2, Z_BLOCK, pair_alpha(n2, [f2.param(0), 0]))
    bad = check_constraints(n2, p, f2)
    assert bad == ["A2[a=0,k=0,l=1]", "A2[a=1,k=0,l=1]",
                   "A2[a=0,k=1,l=0]", "A2[a=1,k=1,l=0]",
                   "B[k=0,l=1]", "B[k=1,l=0]"]


# -- building R and first-principles verification ---------------------------


def test_Rz_closed_form(sf2):
    alg, _ = sf2
    field = alg.field
    one = alg.encode((0,), 0)
    k = alg.encode((1,), 0)
    half = field.from_rational(Fraction(1, 2))
    expected = Tensor(alg, 2, {(one, one): half, (one, k): half,
                               (k, one): half, (k, k): -half})
    assert build_Rz(alg, [[1]]) == expected


def test_full_R_coefficients(sf2):
    alg, params = sf2
    field = alg.field
    a = field.param(0)
    r = build_R(alg, params)
    assert len(r.c) == 16
    half = field.from_rational(Fraction(1, 2))
    one = alg.encode((0,), 0)
    k = alg.encode((1,), 0)
    zp = alg.encode((0,), 1)
    zm = alg.encode((0,), 2)
    kzm = alg.encode((1,), 2)
    assert r.c[(one, one)] == half
    assert r.c[(k, k)] == -half
    assert r.c[(zp, zm)] == half * a
    assert r.c[(zp, kzm)] == half * a
    assert (zm, zp) in r.c and (k, zm) not in r.c
    top = alg.encode((0,), 3)
    assert r.c[(top, top)] == -half * a * a


def test_verify_qt_small(sf2):
    alg, params = sf2
    facs = build_r_factors(alg, params)
    rep = verify_qt(product(facs), factors=facs, qt5="exhaustive",
                    inverse=True)
    assert rep["ok"]
    by = checks_by_axiom(rep)
    assert by["QT1"]["mode"] == "factored"
    assert by["QT3"]["mode"] == "factored"
    # and without the factor shortcut the direct evaluation agrees
    rep2 = verify_qt(product(facs), qt5="exhaustive")
    assert rep2["ok"]


def test_verify_qt_paired_presentations(n1, n4):
    for alg, params in (n1, n4):
        facs = build_r_factors(alg, params)
        r = product(facs)
        assert len(r.c) == 256
        rep = verify_qt(r, factors=facs, inverse=True)
        assert rep["ok"]


def test_verify_qt_uq(uq8):
    facs = build_r_factors(uq8)
    r = product(facs)
    assert len(r.c) == 64
    rep = verify_qt(r, factors=facs, qt5="exhaustive", inverse=True)
    assert rep["ok"]


def test_verify_qt_catches_a_plausible_fake(sf2):
    # 1 (x) 1 + Z+ (x) Z+ satisfies both counit axioms but nothing else
    alg, _ = sf2
    zp = alg.encode((0,), 1)
    fake = alg.unit_tensor(2) + Tensor(alg, 2, {(zp, zp): alg.field.one})
    rep = verify_qt(fake)
    by = checks_by_axiom(rep)
    assert by["QT2"]["status"] == "pass"
    assert by["QT4"]["status"] == "pass"
    assert by["QT1"]["status"] == "fail"
    assert by["QT1"]["witness"] == "Z1+ (x) 1 (x) Z1+"
    assert by["QT3"]["status"] == "fail"
    assert by["QT5"]["status"] == "fail"
    assert by["QT5"]["witness"] == "h = Z1+"


# -- monodromy ---------------------------------------------------------------


def test_monodromy_trivial_for_the_paired_structures(n1, n4):
    for alg, params in (n1, n4):
        facs = build_r_factors(alg, params)
        r = product(facs)
        m = monodromy(r, facs)
        assert m == alg.unit_tensor(2)
        assert factorizability_rank(r, monodromy_tensor=m) == 1


def test_monodromy_closed_form(sf2):
    alg, params = sf2
    field = alg.field
    a = field.param(0)
    facs = build_r_factors(alg, params)
    r = product(facs)
    m = monodromy(r, facs)
    # exp(2a (Z+ (x) K Z-  -  Z- (x) K Z+)), expanded independently
    zp = alg.encode((0,), 1)
    zm = alg.encode((0,), 2)
    kzm = alg.encode((1,), 2)
    kzp = alg.encode((1,), 1)
    two_a = field.from_int(2) * a
    x = Tensor(alg, 2, {(zp, kzm): two_a, (zm, kzp): -two_a})
    assert m == exp_nilpotent(x)
    # the factored reduction agrees with the flat product
    assert m == monodromy(r)


def test_drinfeld_element(n1, sf2):
    alg, params = n1
    r = build_R(alg, params)
    u = drinfeld_element(r)
    assert u == alg.basis_element(alg.encode((2, 0), 0))   # K1^2
    assert u * drinfeld_inverse(r) == alg.unit()

    alg2, params2 = sf2
    r2 = build_R(alg2, params2)
    u2 = drinfeld_element(r2)
    assert u2 * drinfeld_inverse(r2) == alg2.unit()
    # conjugation by u squares the antipode
    for _, h in alg2.generators():
        assert u2 * h == h.antipode().antipode() * u2


def test_r_inverse_is_two_sided(sf2):
    alg, params = sf2
    r = build_R(alg, params)
    rinv = r_inverse(r)
    unit = alg.unit_tensor(2)
    assert r * rinv == unit and rinv * r == unit


# -- pivotals, ribbon elements, anomalies ------------------------------------


def test_pivotals(sf2, n1, n4, uq8):
    alg, _ = sf2
    assert [alg.mono_str(g) for g in find_pivotals(alg)] == ["K1"]
    alg, _ = n1
    assert [alg.mono_str(g) for g in find_pivotals(alg)] == ["K1^2"]
    alg, _ = n4
    assert [alg.mono_str(g) for g in find_pivotals(alg)] == \
        ["K2^2", "K1.K2", "K1^2", "K1^3.K2^3"]
    assert [uq8.mono_str(g) for g in find_pivotals(uq8)] == ["K"]


def test_ribbon_sf2(sf2):
    alg, params = sf2
    field = alg.field
    a = field.param(0)
    facs = build_r_factors(alg, params)
    r = product(facs)
    g = alg.encode((1,), 0)
    v, report = make_ribbon(r, g, factors=facs)
    assert report["ok"]
    expected = alg.unit() + alg.basis_element(alg.encode((0,), 3)) * (
        field.from_int(-2) * a)
    assert v == expected
    lam = alg.integral_functional()
    assert anomaly_value(lam, v) == field.from_int(-2) * a


def test_ribbon_trivial_when_alpha_is_zero(n1):
    alg, params = n1
    facs = build_r_factors(alg, params)
    r = product(facs)
    v, report = make_ribbon(r, alg.encode((2, 0), 0), factors=facs)
    assert report["ok"]
    assert v == alg.unit()
    assert anomaly_value(alg.integral_functional(), v) == alg.field.zero


def test_ribbon_choices_on_the_second_paired_presentation(n4):
    # two of the four pivotal grouplikes give ribbon elements
    alg, params = n4
    facs = build_r_factors(alg, params)
    r = product(facs)
    m = monodromy(r, facs)
    lam = alg.integral_functional()
    good = []
    for g in find_pivotals(alg):
        v, report = make_ribbon(r, g, monodromy_tensor=m)
        if report["ok"]:
            good.append(alg.mono_str(g))
            assert anomaly_value(lam, v) == alg.field.zero
    assert good == ["K2^2", "K1^2"]


def test_ribbon_uq(uq8):
    facs = build_r_factors(uq8)
    r = product(facs)
    v, report = make_ribbon(r, uq8.pivotal(), factors=facs)
    assert report["ok"]
    lam = uq8.integral_functional()
    assert anomaly_value(lam, v) == uq8.field.zero   # anomalous
    m = monodromy(r, facs)
    assert len(m.c) == 98
    assert factorizability_rank(r, monodromy_tensor=m) == 32


def test_rank_rejects_formal_alpha(sf2):
    alg, params = sf2
    r = build_R(alg, params)
    with pytest.raises(ValueError):
        factorizability_rank(r)


def test_rank_after_substitution(sf2):
    alg, params = sf2
    facs = build_r_factors(alg, params)
    m = monodromy(product(facs), facs).substitute({0: 1})
    r1 = build_R(alg, RMatrixParams(alg.data, [[1]],
                                    pair_alpha(alg.data, [1])))
    assert factorizability_rank(r1, monodromy_tensor=m) == 4


# -- strong non-factorizability witnesses ------------------------------------


def test_witnesses_vanish_for_the_paired_structures(n1, n4):
    for alg, params in (n1, n4):
        facs = build_r_factors(alg, params)
        r = product(facs)
        lam = alg.integral_functional()
        w1, w2 = strong_nf_witness(r, lam, factors=facs)
        assert w1.is_zero() and w2.is_zero()


def test_witnesses_nonzero_for_sf2(sf2):
    alg, params = sf2
    field = alg.field
    a = field.param(0)
    facs = build_r_factors(alg, params)
    r = product(facs)
    lam = alg.integral_functional()
    w1, w2 = strong_nf_witness(r, lam, factors=facs)
    top = alg.encode((0,), 3)
    expected = alg.basis_element(top) * (field.from_int(-4) * a * a)
    assert w1 == expected
    assert w2 == expected


def test_witnesses_nonzero_for_uq(uq8):
    facs = build_r_factors(uq8)
    r = product(facs)
    lam = uq8.integral_functional()
    assert check_integral(uq8, lam, "left") == (True, None)
    w1, w2 = strong_nf_witness(r, lam, factors=facs)
    assert not w1.is_zero() and not w2.is_zero()


# -- the distinguished grouplike ---------------------------------------------


def test_distinguished_grouplike_agrees_with_the_coproduct_side(n1, uq8):
    alg, _ = n1
    lam = alg.integral_functional()
    assert distinguished_grouplike(alg, lam) == alg.unit_mono
    assert coproduct_side_grouplike(alg, lam) == alg.unit_mono

    lam = uq8.integral_functional()
    ksq = uq8.encode(0, 0, 2)
    assert distinguished_grouplike(uq8, lam) == ksq
    assert coproduct_side_grouplike(uq8, lam) == ksq


# -- the search ---------------------------------------------------------------


def test_search_budget():
    with pytest.raises(BudgetExceededError) as err:
        search_structures(n2_data(), budget=10)
    assert err.value.count == 4 ** 9


# -- biproducts ---------------------------------------------------------------


@pytest.fixture(scope="module")
def bi_sf2():
    field = field_for(8, 2, params=("a",))
    uq = UqSmallAlgebra(8, field)
    nen = NenciuAlgebra(sf2n_data(1), field)
    bi = BiproductAlgebra(uq, nen)
    params = RMatrixParams(nen.data, [[1]],
                           pair_alpha(nen.data, [field.param(0)]))
    return bi, params


def test_biproduct_monodromy_splits(bi_sf2):
    # M = (M of the quantum-group factor, embedded) * (exponential tail)^2
    bi, params = bi_sf2
    facs = build_r_factors(bi, params)
    r = product(facs)
    assert len(r.c) == 1024
    m = monodromy(r, facs)
    uq_facs = build_r_factors(bi.uq)
    m_u = monodromy(product(uq_facs), uq_facs)
    embedded = Tensor(bi, 2, {(bi.combine(x, 0), bi.combine(y, 0)): c
                              for (x, y), c in m_u.c.items()})
    tail = facs[-1]
    assert m == embedded * (tail * tail)


def test_biproduct_witnesses_and_ribbon(bi_sf2):
    bi, params = bi_sf2
    field = bi.field
    a = field.param(0)
    facs = build_r_factors(bi, params)
    r = product(facs)
    m = monodromy(r, facs)
    lam = bi.integral_functional()
    assert check_integral(bi, lam, "left") == (True, None)
    w1, w2 = strong_nf_witness(r, lam, monodromy_tensor=m)
    coeff = (field.zeta(1) + field.zeta(3)) * field.from_int(-4) * a * a
    top = bi.h.encode((0,), 3)
    expected = (
        bi.basis_element(bi.combine(bi.uq.encode(3, 3, 1), top)) +
        bi.basis_element(bi.combine(bi.uq.encode(3, 3, 3), top))) * coeff
    assert w1 == expected
    assert w2 == expected

    assert [bi.mono_str(g) for g in find_pivotals(bi)] == ["K"]
    v, report = make_ribbon(r, bi.pivotal(), monodromy_tensor=m)
    assert report["ok"]
    assert anomaly_value(lam, v) == field.zero   # anomalous, like its factor

    ksq = bi.combine(bi.uq.encode(0, 0, 2), 0)
    assert distinguished_grouplike(bi, lam) == ksq
    assert coproduct_side_grouplike(bi, lam) == ksq


@pytest.mark.slow
def test_biproduct_full_qt(bi_sf2):
    bi, params = bi_sf2
    facs = build_r_factors(bi, params)
    rep = verify_qt(product(facs), factors=facs, inverse=True)
    assert rep["ok"]


@pytest.mark.slow
def test_biproduct_over_the_paired_presentation():
    field = field_for(8, 4, 4)
    uq = UqSmallAlgebra(8, field)
    nen = NenciuAlgebra(n4_data(), field)
    bi = BiproductAlgebra(uq, nen)
    facs = build_r_factors(bi, RMatrixParams(nen.data, Z_PAIR))
    r = product(facs)
    assert len(r.c) == 16384
    m = monodromy(r, facs)
    uq_facs = build_r_factors(uq)
    m_u = monodromy(product(uq_facs), uq_facs)
    assert m == Tensor(bi, 2, {(bi.combine(x, 0), bi.combine(y, 0)): c
                               for (x, y), c in m_u.c.items()})
    lam = bi.integral_functional()
    w1, w2 = strong_nf_witness(r, lam, monodromy_tensor=m)
    assert w1.is_zero() and w2.is_zero()
    assert [bi.mono_str(g) for g in find_pivotals(bi)] == \
        ["K", "K.K1.K2^3", "K.K1^2.K2^2", "K.K1^3.K2"]
    v, report = make_ribbon(r, bi.pivotal(), monodromy_tensor=m)
    assert report["ok"]
    assert anomaly_value(lam, v) == field.zero
    assert distinguished_grouplike(bi, lam) == bi.combine(uq.encode(0, 0, 2), 0)


@pytest.mark.slow
def test_block_presentation_full_reports():
    # the 3x3-block structures, alpha formal on the allowed pair
    for data, avals, pivotal_names in (
            (n2_data(), (0, "a"),
             ["K3^2", "K1.K2", "K1^2.K2^2.K3^2", "K1^3.K2^3"]),
            (n3_data(), (0, "a", 0), ["K3^2"])):
        field = field_for(4, params=("a",))
        a = field.param(0)
        alg = NenciuAlgebra(data, field)
        vals = [a if x == "a" else 0 for x in avals]
        params = RMatrixParams(data, Z_BLOCK, pair_alpha(data, vals))
        assert check_constraints(data, params, field, alg=alg) == []
        facs = build_r_factors(alg, params)
        r = product(facs)
        assert len(r.c) == 4096
        rep = verify_qt(r, factors=facs)
        assert rep["ok"]
        by = checks_by_axiom(rep)
        assert by["QT1"]["mode"] == "factored"
        assert by["QT3"]["mode"] == "factored"

        m = monodromy(r, facs)
        # exp(2a (Z+ (x) K3^2 Z-  -  Z- (x) K3^2 Z+)) in both presentations
        izp = data.labels.index("Z+")
        izm = data.labels.index("Z-")
        zp = alg.basis_element(alg.encode((0, 0, 0), 1 << izp))
        zm = alg.basis_element(alg.encode((0, 0, 0), 1 << izm))
        ell = alg.basis_element(alg.encode((0, 0, 2), 0))
        two_a = field.from_int(2) * a
        x = (zp @ (ell * zm)) * two_a - (zm @ (ell * zp)) * two_a
        assert m == exp_nilpotent(x)

        lam = alg.integral_functional()
        w1, w2 = strong_nf_witness(r, lam, monodromy_tensor=m)
        assert w1.is_zero() and w2.is_zero()

        assert [alg.mono_str(g) for g in find_pivotals(alg)] == pivotal_names
        v, report = make_ribbon(r, alg.encode((0, 0, 2), 0),
                                monodromy_tensor=m)
        assert report["ok"]
        assert anomaly_value(lam, v) == field.zero

        assert distinguished_grouplike(alg, lam) == alg.unit_mono


def test_search_on_the_paired_presentations():
    hits = search_structures(n1_data(), budget=4 ** 4)
    assert len(hits) == 1
    assert hits[0]["z"] == Z_PAIR
    assert hits[0]["alpha_pattern"] == []
    assert hits[0]["triangular"] and hits[0]["snf"]
    assert hits[0]["ribbon"] == "K1^2"
    assert hits[0]["anomaly"] == 0

    hits = search_structures(n4_data(), budget=4 ** 4)
    assert len(hits) == 4
    assert all(h["alpha_pattern"] == [] for h in hits)
    assert any(h["z"] == Z_PAIR for h in hits)
    for h in hits:
        assert h["snf"] and h["ribbon"] == "K2^2" and h["anomaly"] == 0
    # two of the four structures are triangular, two are not
    assert sorted(h["triangular"] for h in hits) == [False, False, True, True]
