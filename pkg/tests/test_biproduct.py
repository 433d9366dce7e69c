"""Biproduct tests: cross relations, twisted coproduct/antipode, embeddings
of the two factors, integrals, and pivotal candidates, on uqsl2(8) paired
with the dim-8 and dim-64 pointed algebras.
"""

import random

import pytest

from hopfbead.biproduct import BiproductAlgebra
from hopfbead.hopfcore import (
    check_cointegral, check_integral, distinguished_grouplike, find_pivotals,
    pair, verify_hopf_axioms,
)
from hopfbead.nenciu import NenciuAlgebra
from hopfbead.scalar import field_for
from hopfbead.uqsl2 import UqSmallAlgebra

from helpers import n4_data, sf2n_data


@pytest.fixture(scope="module")
def bsf2():
    field = field_for(8, 2)
    uq = UqSmallAlgebra(8, field)
    nen = NenciuAlgebra(sf2n_data(1), field)
    return BiproductAlgebra(uq, nen)


@pytest.fixture(scope="module")
def bn4():
    field = field_for(8, 4)
    uq = UqSmallAlgebra(8, field)
    nen = NenciuAlgebra(n4_data(), field)
    return BiproductAlgebra(uq, nen)


def test_shape(bsf2):
    assert bsf2.dim == 512
    assert bsf2.mono_str(bsf2.combine(bsf2.uq.encode(1, 0, 2),
                                      bsf2.h.encode((1,), 0b01))) \
        == "E.K^2.K1.Z1+"
    assert bsf2.mono_str(0) == "1"
    # mismatched fields refused
    with pytest.raises(AssertionError):
        BiproductAlgebra(UqSmallAlgebra(8), NenciuAlgebra(sf2n_data(1)))


def test_cross_relations(bsf2):
    uq, h = bsf2.uq, bsf2.h
    E = bsf2.embed_u(uq.e_gen())
    F = bsf2.embed_u(uq.f_gen())
    K = bsf2.embed_u(uq.k_power(1))
    zp = bsf2.embed_h(h.nilpotent(0))
    zm = bsf2.embed_h(h.nilpotent(1))
    L = bsf2.embed_h(h.grouplike([1]))
    assert K * zp == -(zp * K)
    assert E * zp == -(zp * E)
    assert F * zp == zp * F
    assert L * E == E * L and L * F == F * L and L * K == K * L
    assert zp * zp == bsf2.zero()
    assert zp * zm == -(zm * zp)
    # the sign only sees the parity of e + k
    K2 = bsf2.embed_u(uq.k_power(2))
    EK = bsf2.embed_u(uq.e_gen() * uq.k_power(1))
    assert K2 * zp == zp * K2
    assert EK * zp == zp * EK


def test_embeddings_are_algebra_maps(bsf2):
    uq, h = bsf2.uq, bsf2.h
    for i in range(uq.dim):
        x = uq.basis_element(i)
        # coalgebra map: the U coproduct embeds slotwise
        expect = {(bsf2.combine(a, 0), bsf2.combine(b, 0)): c
                  for a, b, c in uq.mono_coproduct(i)}
        got = bsf2.embed_u(x).coproduct()
        assert got.c == expect
        for j in range(uq.dim):
            y = uq.basis_element(j)
            assert bsf2.embed_u(x * y) == bsf2.embed_u(x) * bsf2.embed_u(y)
    for i in range(h.dim):
        for j in range(h.dim):
            x, y = h.basis_element(i), h.basis_element(j)
            assert bsf2.embed_h(x * y) == bsf2.embed_h(x) * bsf2.embed_h(y)


def test_twisted_coproduct_and_antipode(bsf2):
    h = bsf2.h
    one = bsf2.unit()
    G = bsf2.basis_element(bsf2.coaction_grouplike())
    zp = bsf2.embed_h(h.nilpotent(0))
    L = bsf2.embed_h(h.grouplike([1]))
    assert G * G == one
    assert zp.coproduct() == one @ zp + zp @ (G * L)
    assert zp.antipode() == -(zp * G * L)
    assert zp.antipode_inv() == zp * G * L
    assert L.coproduct() == L @ L
    rng = random.Random(20260817)
    for _ in range(60):
        x = bsf2.basis_element(rng.randrange(bsf2.dim))
        assert x.antipode().antipode_inv() == x
    # anti-homomorphism spot check across the factors
    E = bsf2.embed_u(bsf2.uq.e_gen())
    assert (E * zp).antipode() == zp.antipode() * E.antipode()


def test_hopf_axioms_sampled(bsf2):
    report = verify_hopf_axioms(bsf2, "sampled:4000:20260817")
    assert report["ok"], report


def test_integrals(bsf2):
    F = bsf2.field
    lam = bsf2.integral_functional()
    Lam = bsf2.cointegral()
    assert check_cointegral(bsf2, Lam, "left") == (True, None)
    assert check_cointegral(bsf2, Lam, "right") == (True, None)
    assert check_integral(bsf2, lam, "left") == (True, None)
    ok, witness = check_integral(bsf2, lam, "right")
    assert not ok and witness == "E^3.F^3.K^3.Z1+.Z1-"
    assert pair(lam, Lam) == F.one
    a = distinguished_grouplike(bsf2, lam)
    assert a == bsf2.combine(bsf2.uq.encode(0, 0, 2), 0)  # K^2


def test_grouplikes_and_pivotal(bsf2):
    gls = bsf2.grouplike_monomials()
    assert len(gls) == 8  # K^j K1^v
    assert find_pivotals(bsf2) == [bsf2.pivotal()]
    assert bsf2.mono_str(bsf2.pivotal()) == "K"


def test_n4_biproduct(bn4):
    assert bn4.dim == 4096
    h = bn4.h
    xp = bn4.embed_h(h.nilpotent(0))
    E = bn4.embed_u(bn4.uq.e_gen())
    K = bn4.embed_u(bn4.uq.k_power(1))
    assert K * xp == -(xp * K)
    assert E * xp == -(xp * E)
    lam = bn4.integral_functional()
    Lam = bn4.cointegral()
    assert check_cointegral(bn4, Lam, "left") == (True, None)
    assert check_cointegral(bn4, Lam, "right") == (True, None)
    assert check_integral(bn4, lam, "left") == (True, None)
    assert pair(lam, Lam) == bn4.field.one
    a = distinguished_grouplike(bn4, lam)
    assert bn4.mono_str(a) == "K^2"
    # pivotal candidates: K K1^v1 K2^v2 with v1 + v2 = 0 mod 4
    piv = find_pivotals(bn4)
    assert bn4.pivotal() in piv
    assert [bn4.mono_str(g) for g in piv] == \
        ["K", "K.K1.K2^3", "K.K1^2.K2^2", "K.K1^3.K2"]
