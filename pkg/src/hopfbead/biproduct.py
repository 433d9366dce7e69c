"""Semidirect biproduct of the small quantum group with a pointed
nilpotent algebra.

Given U = uqsl2(r) with r divisible by 8 and a pointed algebra H with
grouplikes K_a and nilpotents X_k, the biproduct B = U |x H has basis
(u, h) = u (x) h over pairs of basis monomials, index u*dim(H) + h.

Cross relations: the K_a commute with all of U; the X_k commute with F
and anticommute with both K and E,

    K X_k = - X_k K,   E X_k = - X_k E,   F X_k = X_k F,

so swapping an H-monomial of nilpotent degree x past a U-monomial
E^e F^f K^k costs the sign (-1)^(x(e+k)).  The sign is well defined
because e+k is additive mod 2 under multiplication in U (each use of the
EF commutation trades one E for one K^(+-1)) and r' = r/2 is even.

The coproduct twists the H-part by the involutive grouplike G = K^(r/4):

    cop(X_k) = 1 (x) X_k + X_k (x) G K^(u_k),

i.e. on monomials, the slot-2 U-part of each coproduct term of h gains
G^a where a is the nilpotent degree of the slot-1 H-part.  G is an even
power of K (this needs 8 | r), so it commutes with all of H.  Antipodes:

    S(X_k) = -X_k G K^(-u_k),     S^(-1)(X_k) = +X_k G K^(-u_k),

and U, the K_a behave as in the factors.  Cointegral and integral
functional are the products of the factors' ones.
"""

from .hopfcore import Element, Presentation

__all__ = ["BiproductAlgebra"]


class BiproductAlgebra(Presentation):

    def __init__(self, uq, nen):
        assert uq.field is nen.field, "factors must share one field"
        assert uq.r % 8 == 0, "coaction grouplike K^(r/4) must be even"
        super().__init__(uq.field, uq.dim * nen.dim,
                         "biprod(%s,%s)" % (uq.name, nen.name))
        self.uq = uq
        self.h = nen
        self._dimh = nen.dim
        self._sx = None
        self._sxinv = None

    # -- encoding ----------------------------------------------------------

    def split(self, i):
        return divmod(i, self._dimh)

    def combine(self, u, h):
        return u * self._dimh + h

    def embed_u(self, el):
        return Element(self, {self.combine(u, 0): c for u, c in el.c.items()})

    def embed_h(self, el):
        return Element(self, dict(el.c))

    def coaction_grouplike(self):
        """Index of G = K^(r/4) as a biproduct monomial."""
        return self.combine(self.uq.encode(0, 0, self.uq.rpp), 0)

    def mono_str(self, i):
        u, h = self.split(i)
        us = self.uq.mono_str(u)
        hs = self.h.mono_str(h)
        if us == "1":
            return hs
        if hs == "1":
            return us
        return us + "." + hs

    def generators(self):
        out = [(n, self.embed_u(g)) for n, g in self.uq.generators()]
        out += [(n, self.embed_h(g)) for n, g in self.h.generators()]
        return out

    def grouplike_monomials(self):
        if self._grouplikes is None:
            self._grouplikes = [self.combine(u, h)
                                for u in self.uq.grouplike_monomials()
                                for h in self.h.grouplike_monomials()]
        return self._grouplikes

    # -- structure maps -----------------------------------------------------

    def _cross_sign(self, h1, u2):
        x = self.h.decode(h1)[1].bit_count()
        e, _, k = self.uq.decode(u2)
        return -1 if (x * (e + k)) & 1 else 1

    def _mono_mul_raw(self, i, j):
        u1, h1 = self.split(i)
        u2, h2 = self.split(j)
        sign = self._cross_sign(h1, u2)
        out = []
        for hp, ch in self.h.mono_mul(h1, h2):
            chs = ch if sign == 1 else -ch
            for up, cu in self.uq.mono_mul(u1, u2):
                out.append((self.combine(up, hp), cu * chs))
        return out

    def _mono_coproduct_raw(self, i):
        u, h = self.split(i)
        uq = self.uq
        rp, rpp = uq.rp, uq.rpp
        out = []
        for h1, h2, ch in self.h.mono_coproduct(h):
            a = self.h.decode(h1)[1].bit_count()
            for u1, u2, cu in uq.mono_coproduct(u):
                if a:
                    e2, f2, k2 = uq.decode(u2)
                    u2 = uq.encode(e2, f2, (k2 + a * rpp) % rp)
                out.append((self.combine(u1, h1), self.combine(u2, h2),
                            cu * ch))
        return out

    def _mono_counit_raw(self, i):
        u, h = self.split(i)
        return self.uq.mono_counit(u) * self.h.mono_counit(h)

    def _nilpotent_antipodes(self):
        if self._sx is None:
            g = self.basis_element(self.coaction_grouplike())
            sx, sxinv = [], []
            for k in range(self.h.t):
                xk = self.embed_h(self.h.nilpotent(k))
                tail = g * self.embed_h(self.h.grouplike(
                    [-e for e in self.h.data.u[k]]))
                sx.append(-(xk * tail))
                sxinv.append(xk * tail)
            self._sx = sx
            self._sxinv = sxinv
        return self._sx, self._sxinv

    def _antipode_like(self, i, inv):
        u, h = self.split(i)
        sx, sxinv = self._nilpotent_antipodes()
        fac = sxinv if inv else sx
        v, rmask = self.h.decode(h)
        acc = None
        for k in reversed(range(self.h.t)):
            if rmask >> k & 1:
                acc = fac[k] if acc is None else acc * fac[k]
        kpart = self.embed_h(self.h.grouplike([-e for e in v]))
        acc = kpart if acc is None else acc * kpart
        su = self.uq.mono_antipode_inv(u) if inv else self.uq.mono_antipode(u)
        acc = acc * Element(self, {self.combine(m, 0): c for m, c in su})
        return tuple(acc.c.items())

    def _mono_antipode_raw(self, i):
        return self._antipode_like(i, False)

    def _mono_antipode_inv_raw(self, i):
        return self._antipode_like(i, True)

    # -- integrals ----------------------------------------------------------

    def cointegral(self, side="left"):
        lu = self.uq.cointegral()
        lh = self.h.cointegral(side)
        return Element(self, {self.combine(mu, mh): cu * ch
                              for mu, cu in lu.c.items()
                              for mh, ch in lh.c.items()})

    def integral_functional(self):
        fu = self.uq.integral_functional()
        fh = self.h.integral_functional()
        return {self.combine(mu, mh): cu * ch
                for mu, cu in fu.items() for mh, ch in fh.items()}

    def pivotal(self):
        return self.combine(self.uq.pivotal(), 0)
