"""The small quantum group of sl2 at a primitive r-th root of unity q,
for r divisible by 4.

Writing r' = r/2 and r'' = r/4, the algebra has basis

    E^e F^f K^k,   0 <= e, f, k < r',      dim = r'^3,

with relations  K^(r') = 1,  E^(r') = F^(r') = 0,

    K E = q^2 E K,   K F = q^(-2) F K,
    E F - F E = (K - K^(-1)) / (q - q^(-1)),

Hopf structure

    cop(E) = 1 (x) E + E (x) K        S(E) = -E K^(-1)     eps(E) = 0
    cop(F) = F (x) 1 + K^(-1) (x) F   S(F) = -K F          eps(F) = 0
    cop(K) = K (x) K                  S(K) = K^(-1)        eps(K) = 1

and quantum integers {n} = q^n - q^(-n), [n] = {n}/{1}, [n]! the
factorial.  Normal ordering uses the exact commutation identity

    F^m E = E F^m + [m] F^(m-1) (q^(m-1) K^(-1) - q^(-(m-1)) K) / {1},

expanded recursively with memoisation; every structure constant is an
exact cyclotomic number.

The two-sided cointegral and left integral functional are

    Lam = ( {1}^(r'-1) / (sqrt(r'') [r'-1]!) ) E^(r'-1) F^(r'-1) sum_a K^a
    lam(E^b F^c K^a) = sqrt(r'') [r'-1]! / {1}^(r'-1)
                       if a = b = c = r'-1, else 0,

normalised so lam(Lam) = 1.  The standard quasitriangular structure is
R = D Theta with

    D     = (1/r') sum_(b,c) q^(-2bc) K^b (x) K^c
    Theta = sum_a ( {1}^a / [a]! ) q^(a(a-1)/2) E^a (x) F^a,

and K is a pivotal element.
"""

from fractions import Fraction

from .hopfcore import Element, Presentation, Tensor
from .scalar import field_for

__all__ = ["UqSmallAlgebra"]


class UqSmallAlgebra(Presentation):

    def __init__(self, r, field=None):
        r = int(r)
        assert r % 4 == 0 and r >= 8, "root order must be a multiple of 4"
        if field is None:
            field = field_for(r)
        assert field.order % r == 0
        self.r = r
        self.rp = r // 2
        self.rpp = r // 4
        rp = self.rp
        super().__init__(field, rp ** 3, "uqsl2(r=%d)" % r)
        self._qstep = field.order // r
        self._fe_memo = {}
        # small power coproducts cached lazily
        self._gen_cop = None

    # -- q-arithmetic ----------------------------------------------------

    def q_power(self, n):
        return self.field.zeta(self._qstep * n % self.field.order)

    def qbrace(self, n):
        """{n} = q^n - q^-n."""
        return self.q_power(n) - self.q_power(-n)

    def qnum(self, n):
        """[n] = {n}/{1}."""
        return self.qbrace(n) / self.qbrace(1)

    def qfact(self, n):
        out = self.field.one
        for j in range(2, n + 1):
            out = out * self.qnum(j)
        return out

    # -- encoding ---------------------------------------------------------

    def encode(self, e, f, k):
        rp = self.rp
        return (e * rp + f) * rp + (k % rp)

    def decode(self, i):
        rp = self.rp
        return (i // (rp * rp), (i // rp) % rp, i % rp)

    def k_power(self, k):
        return self.basis_element(self.encode(0, 0, k))

    def e_gen(self):
        return self.basis_element(self.encode(1, 0, 0))

    def f_gen(self):
        return self.basis_element(self.encode(0, 1, 0))

    def generators(self):
        return [("E", self.e_gen()), ("F", self.f_gen()),
                ("K", self.k_power(1))]

    def grouplike_monomials(self):
        if self._grouplikes is None:
            self._grouplikes = [self.encode(0, 0, k) for k in range(self.rp)]
        return self._grouplikes

    def mono_str(self, i):
        e, f, k = self.decode(i)
        bits = []
        if e:
            bits.append("E" + ("" if e == 1 else "^%d" % e))
        if f:
            bits.append("F" + ("" if f == 1 else "^%d" % f))
        if k:
            bits.append("K" + ("" if k == 1 else "^%d" % k))
        return ".".join(bits) if bits else "1"

    # -- normal ordering ----------------------------------------------------

    def _fe(self, f, e):
        """Normal ordering of F^f E^e: tuple of (e', f', dk, coeff) meaning
        sum coeff * E^(e') F^(f') K^(dk), with dk a small signed integer.
        """
        if f == 0 or e == 0:
            return ((e, f, 0, self.field.one),)
        key = (f, e)
        got = self._fe_memo.get(key)
        if got is not None:
            return got
        rp = self.rp
        acc = {}
        # E * FE(f, e-1)
        for a, b, g, c in self._fe(f, e - 1):
            if a + 1 < rp:
                k2 = (a + 1, b, g)
                acc[k2] = acc.get(k2, self.field.zero) + c
        # [f]/{1} * F^(f-1) (q^(f-1) K^-1 - q^(-(f-1)) K) E^(e-1)
        lead = self.qnum(f) / self.qbrace(1)
        plus = lead * self.q_power(f - 1) * self.q_power(-2 * (e - 1))
        minus = -lead * self.q_power(-(f - 1)) * self.q_power(2 * (e - 1))
        for a, b, g, c in self._fe(f - 1, e - 1):
            k2 = (a, b, g - 1)
            acc[k2] = acc.get(k2, self.field.zero) + c * plus
            k2 = (a, b, g + 1)
            acc[k2] = acc.get(k2, self.field.zero) + c * minus
        got = tuple((a, b, g, c) for (a, b, g), c in acc.items() if c)
        self._fe_memo[key] = got
        return got

    # -- structure maps -----------------------------------------------------

    def _mono_mul_raw(self, i, j):
        e1, f1, k1 = self.decode(i)
        e2, f2, k2 = self.decode(j)
        rp = self.rp
        base = self.q_power(2 * k1 * (e2 - f2))
        acc = {}
        for a, b, g, c in self._fe(f1, e2):
            e = e1 + a
            f = b + f2
            if e >= rp or f >= rp:
                continue
            # distinct K^g can collide once reduced mod r', so accumulate
            key = self.encode(e, f, (g + k1 + k2) % rp)
            acc[key] = acc.get(key, self.field.zero) + base * c * self.q_power(-2 * g * f2)
        return tuple((k, v) for k, v in acc.items() if v)

    def _generator_coproducts(self):
        if self._gen_cop is None:
            one = self.unit()
            E, F, K = self.e_gen(), self.f_gen(), self.k_power(1)
            self._gen_cop = {
                "E": one @ E + E @ K,
                "F": F @ one + self.k_power(-1) @ F,
                "K": K @ K,
            }
        return self._gen_cop

    def _mono_coproduct_raw(self, i):
        e, f, k = self.decode(i)
        cops = self._generator_coproducts()
        t = self.unit_tensor(2)
        for _ in range(e):
            t = t * cops["E"]
        for _ in range(f):
            t = t * cops["F"]
        for _ in range(k):
            t = t * cops["K"]
        return tuple((a, b, c) for (a, b), c in t.c.items())

    def _mono_counit_raw(self, i):
        e, f, _ = self.decode(i)
        return self.field.one if e == 0 and f == 0 else self.field.zero

    def _antipode_like(self, i, fn_e, fn_f, kexp_sign):
        e, f, k = self.decode(i)
        out = self.k_power(kexp_sign * k)
        for _ in range(f):
            out = out * fn_f
        for _ in range(e):
            out = out * fn_e
        return tuple(out.c.items())

    def _mono_antipode_raw(self, i):
        # S(E^e F^f K^k) = K^(-k) (-KF)^f (-EK^(-1))^e
        sE = -(self.e_gen() * self.k_power(-1))
        sF = -(self.k_power(1) * self.f_gen())
        return self._antipode_like(i, sE, sF, -1)

    def _mono_antipode_inv_raw(self, i):
        # S^(-1)(E) = -q^(-2) E K^(-1),  S^(-1)(F) = -F K
        sE = -(self.e_gen() * self.k_power(-1)) * self.q_power(-2)
        sF = -(self.f_gen() * self.k_power(1))
        return self._antipode_like(i, sE, sF, -1)

    # -- integrals ----------------------------------------------------------

    def _lam_norm(self):
        rp = self.rp
        return (self.field.sqrt(self.rpp) * self.qfact(rp - 1)
                / self.qbrace(1) ** (rp - 1))

    def cointegral(self, side="left"):
        """The two-sided cointegral, normalised so lam(Lam) = 1."""
        rp = self.rp
        coeff = self._lam_norm().inverse()
        acc = {}
        for a in range(rp):
            acc[self.encode(rp - 1, rp - 1, a)] = coeff
        return Element(self, acc)

    def integral_functional(self):
        """Left integral functional, supported on E^(r'-1)F^(r'-1)K^(r'-1)."""
        rp = self.rp
        return {self.encode(rp - 1, rp - 1, rp - 1): self._lam_norm()}

    # -- quasitriangular data -------------------------------------------------

    def r_matrix_factors(self):
        """[D, Theta] as 2-slot tensors; their product is R."""
        rp = self.rp
        dacc = {}
        inv = Fraction(1, rp)
        for b in range(rp):
            for c in range(rp):
                dacc[(self.encode(0, 0, b), self.encode(0, 0, c))] = \
                    self.q_power(-2 * b * c) * inv
        D = Tensor(self, 2, dacc)
        tacc = {}
        for a in range(rp):
            coeff = (self.qbrace(1) ** a / self.qfact(a)
                     * self.q_power(a * (a - 1) // 2))
            tacc[(self.encode(a, 0, 0), self.encode(0, a, 0))] = coeff
        Theta = Tensor(self, 2, tacc)
        return [D, Theta]

    def pivotal(self):
        return self.encode(0, 0, 1)
