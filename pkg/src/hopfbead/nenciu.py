"""Pointed Hopf algebras on grouplike generators K_a and nilpotent
skew-primitive generators X_k.

The presentation data is a tuple of group orders m = (m_1, ..., m_s) and
two integer matrices d, u with t rows of length s (rows are read modulo
the m_a).  Writing xi_a = exp(2 pi i / m_a) and, for integer vectors,
xi^(x.y) = prod_a xi_a^(x_a y_a), the algebra has basis

    K^v X^r = K_1^(v_1) ... K_s^(v_s) X_(k_1) ... X_(k_p),
    v_a in Z_(m_a),  r = {k_1 < ... < k_p} a subset of {1..t},

so the dimension is (prod m_a) * 2^t, with relations

    K_a^(m_a) = 1,   K_a K_b = K_b K_a,      X_k^2 = 0,
    X_k K_a = xi_a^(-d_ka) K_a X_k,          X_l X_k = xi^(d_k.u_l) X_k X_l,

coproduct  cop(K_a) = K_a (x) K_a,  cop(X_k) = 1 (x) X_k + X_k (x) K^(u_k),
counit     eps(K_a) = 1, eps(X_k) = 0,  and antipode
           S(K_a) = K_a^(-1),  S(X_k) = -X_k K^(-u_k) = K^(-u_k) X_k.

The data is admissible iff

    xi^(d_k.u_l) * xi^(d_l.u_k) = 1   for all k, l,   and
    xi^(d_k.u_k) = -1                 for all k,

which `NenciuData.validate` checks by exact integer congruences.

Monomials are encoded as ints:  index = v_index * 2^t + r_bitmask, with
v_index mixed-radix over the m_a.  All structure constants are single
roots of unity, so products of basis monomials are again scalar multiples
of basis monomials; coproducts expand over subsets of the nilpotent mask.
"""

from math import gcd, prod

from .hopfcore import Element, Presentation
from .scalar import field_for

__all__ = ["NenciuData", "NenciuAlgebra"]


class NenciuData:
    """Validated presentation data (m, d, u, labels) for the family."""

    def __init__(self, m, d, u, labels=None, name=None):
        self.m = tuple(int(x) for x in m)
        assert all(x >= 1 for x in self.m)
        self.s = len(self.m)
        self.d = tuple(tuple(int(x) % self.m[a] for a, x in enumerate(row))
                       for row in d)
        self.u = tuple(tuple(int(x) % self.m[a] for a, x in enumerate(row))
                       for row in u)
        self.t = len(self.d)
        assert len(self.u) == self.t
        assert all(len(r) == self.s for r in self.d + self.u)
        if labels is None:
            labels = ["X%d" % (k + 1) for k in range(self.t)]
        assert len(labels) == self.t
        self.labels = tuple(labels)
        self.name = name or "pointed(%s;t=%d)" % (",".join(map(str, self.m)),
                                                  self.t)

    @property
    def dim(self):
        return prod(self.m) * 2 ** self.t

    def root_lcm(self):
        out = 1
        for x in self.m:
            g = gcd(out, x)
            out = out // g * x
        return out

    def pairing_exponent(self, x, y, scale=1):
        """Exponent e with xi^(x.y) = zeta_M^e, M = scale * lcm(m)."""
        M = self.root_lcm() * scale
        e = 0
        for a in range(self.s):
            e += (M // self.m[a]) * x[a] * y[a]
        return e % M

    def validate(self):
        """Raise ValueError (with indices) unless the data is admissible."""
        M = self.root_lcm()
        for k in range(self.t):
            e = self.pairing_exponent(self.d[k], self.u[k])
            if M % 2 or e != M // 2:
                raise ValueError(
                    "row %d: xi^(d_%d.u_%d) must be -1 (got exponent %d/%d)"
                    % (k, k, k, e, M))
        for k in range(self.t):
            for l in range(k + 1, self.t):
                e = (self.pairing_exponent(self.d[k], self.u[l])
                     + self.pairing_exponent(self.d[l], self.u[k])) % M
                if e:
                    raise ValueError(
                        "rows %d,%d: xi^(d_%d.u_%d) xi^(d_%d.u_%d) must be 1"
                        % (k, l, k, l, l, k))
        return self

    def dual(self):
        """Data of the dual Hopf algebra: swap the d and u matrices."""
        return NenciuData(self.m, self.u, self.d, labels=self.labels,
                          name=self.name + "^*")

    def unimodular_by_criterion(self):
        """Column-sum criterion: sum_k d_ka = 0 mod m_a for every a."""
        return all(sum(self.d[k][a] for k in range(self.t)) % self.m[a] == 0
                   for a in range(self.s))

    def __repr__(self):
        return "NenciuData(m=%r, t=%d)" % (self.m, self.t)


class NenciuAlgebra(Presentation):
    """The Hopf algebra presented by a NenciuData, over a shared field."""

    def __init__(self, data, field=None):
        data.validate()
        self.data = data
        if field is None:
            field = field_for(*data.m)
        N = field.order
        assert N % max(data.root_lcm(), 1) == 0
        super().__init__(field, data.dim, data.name)
        s, t, m = data.s, data.t, data.m
        self.t = t
        self.full_mask = (1 << t) - 1
        # strides for the grouplike mixed-radix index
        stride = [0] * s
        acc = 1
        for a in range(s - 1, -1, -1):
            stride[a] = acc
            acc *= m[a]
        self._stride = tuple(stride)
        self._gcount = acc
        # decode table: monomial index -> (v tuple, r mask)
        dec = []
        for vi in range(self._gcount):
            v = self._vtuple(vi)
            for r in range(1 << t):
                dec.append((v, r))
        self._dec = dec
        # exponent tables over zeta_N:
        # WD[k][a] = (N/m_a) d_ka   (moving K_a past X_k)
        # XX[l][k] = exponent of xi^(d_l.u_k)   (swap X_k X_l -> X_l X_k)
        # UD[k] = u-row of X_k (for coproduct grouplike shifts)
        self._WD = tuple(tuple((N // m[a]) * data.d[k][a] % N
                               for a in range(s)) for k in range(t))
        self._XX = tuple(tuple(data.pairing_exponent(data.d[l], data.u[k],
                                                     N // data.root_lcm())
                               for k in range(t)) for l in range(t))

    # -- encoding -------------------------------------------------------

    def _vtuple(self, vi):
        return tuple((vi // self._stride[a]) % self.data.m[a]
                     for a in range(self.data.s))

    def encode(self, v, r):
        vi = 0
        for a in range(self.data.s):
            vi += (v[a] % self.data.m[a]) * self._stride[a]
        return (vi << self.t) | r

    def decode(self, i):
        return self._dec[i]

    def grouplike(self, v):
        """The basis element K^v."""
        return self.basis_element(self.encode(v, 0))

    def nilpotent(self, k):
        """The basis element X_k."""
        return self.basis_element(self.encode((0,) * self.data.s, 1 << k))

    def generators(self):
        out = []
        for a in range(self.data.s):
            v = [0] * self.data.s
            v[a] = 1
            out.append(("K%d" % (a + 1), self.grouplike(v)))
        for k in range(self.data.t):
            out.append((self.data.labels[k], self.nilpotent(k)))
        return out

    def grouplike_monomials(self):
        if self._grouplikes is None:
            self._grouplikes = [vi << self.t for vi in range(self._gcount)]
        return self._grouplikes

    def mono_str(self, i):
        v, r = self._dec[i]
        bits = []
        for a, e in enumerate(v):
            if e:
                bits.append("K%d%s" % (a + 1, "" if e == 1 else "^%d" % e))
        for k in range(self.t):
            if r >> k & 1:
                bits.append(self.data.labels[k])
        return ".".join(bits) if bits else "1"

    # -- structure maps --------------------------------------------------

    def _mono_mul_raw(self, i, j):
        v1, r1 = self._dec[i]
        v2, r2 = self._dec[j]
        if r1 & r2:
            return ()
        N = self.field.order
        e = 0
        for k in range(self.t):
            if r1 >> k & 1:
                wd = self._WD[k]
                # X_k K^(v2) = xi^(-v2.d_k) K^(v2) X_k
                for a in range(self.data.s):
                    e -= wd[a] * v2[a]
                if r2:
                    xx = self._XX
                    for l in range(k):
                        if r2 >> l & 1:
                            e += xx[l][k]
        v = tuple((v1[a] + v2[a]) % self.data.m[a]
                  for a in range(self.data.s))
        return ((self.encode(v, r1 | r2), self.field.zeta(e % N)),)

    def _mono_coproduct_raw(self, i):
        v, r = self._dec[i]
        data = self.data
        out = []
        sub = r
        # iterate over all submasks A of r (including 0 and r)
        while True:
            A = sub
            B = r & ~A
            e = 0
            shift = list(v)
            for k in range(self.t):
                if A >> k & 1:
                    for a in range(data.s):
                        shift[a] += data.u[k][a]
                    # moving K^(u_k) left past X_j (j in B, j < k)
                    for j in range(k):
                        if B >> j & 1:
                            e -= self._XX[j][k]
            v2 = tuple(shift[a] % data.m[a] for a in range(data.s))
            out.append((self.encode(v, A), self.encode(v2, B),
                        self.field.zeta(e % self.field.order)))
            if sub == 0:
                break
            sub = (sub - 1) & r
        return out

    def _mono_counit_raw(self, i):
        _, r = self._dec[i]
        return self.field.one if r == 0 else self.field.zero

    def _antipode_like(self, i, inv):
        # S(K^v X_{k1}..X_{kp}) = S(X_kp) ... S(X_k1) S(K^v), with
        # S(X_k) = K^(-u_k) X_k and S^(-1)(X_k) = -K^(-u_k) X_k;
        # every factor is a single monomial so the product is too.
        v, r = self._dec[i]
        data = self.data
        zero_v = (0,) * data.s
        cur = None
        for k in range(self.t - 1, -1, -1):
            if r >> k & 1:
                f = self.encode(tuple(-x for x in data.u[k]), 1 << k)
                if cur is None:
                    cur = (f, self.field.one)
                else:
                    (mono, c), = self.mono_mul(cur[0], f)
                    cur = (mono, cur[1] * c)
        kinv = self.encode(tuple(-x for x in v), 0)
        if cur is None:
            cur = (kinv, self.field.one)
        else:
            (mono, c), = self.mono_mul(cur[0], kinv)
            cur = (mono, cur[1] * c)
        if inv and (bin(r).count("1") % 2):
            cur = (cur[0], -cur[1])
        return (cur,)

    def _mono_antipode_raw(self, i):
        return self._antipode_like(i, inv=False)

    def _mono_antipode_inv_raw(self, i):
        return self._antipode_like(i, inv=True)

    # -- integrals and friends --------------------------------------------

    def cointegral(self, side="left"):
        """Sum over v of K^v X^(all), the (left) integral element.

        The right cointegral carries the extra root of unity from moving
        X^(all) past K^v; the two agree exactly when the column-sum
        criterion holds.
        """
        one = self.field.one
        full = self.full_mask
        if side == "left":
            return Element(self, {vi << self.t | full: one
                                  for vi in range(self._gcount)})
        assert side == "right"
        # X^(all) K^v = xi^(-sum_k v.d_k) K^v X^(all)
        acc = {}
        N = self.field.order
        colsum = [sum(self._WD[k][a] for k in range(self.t)) % N
                  for a in range(self.data.s)]
        for vi in range(self._gcount):
            v = self._vtuple(vi)
            e = -sum(colsum[a] * v[a] for a in range(self.data.s))
            acc[vi << self.t | full] = self.field.zeta(e % N)
        return Element(self, acc)

    def integral_functional(self):
        """lambda with lambda(K^v X^r) = 1 iff v = 0 and r is full."""
        return {self.encode((0,) * self.data.s, self.full_mask):
                self.field.one}

    def top_nilpotent(self):
        """T = X_1 X_2 ... X_t."""
        return self.basis_element(self.encode((0,) * self.data.s,
                                               self.full_mask))

    def is_unimodular_direct(self):
        """Compare the two cointegrals element-by-element."""
        return self.cointegral("left") == self.cointegral("right")
