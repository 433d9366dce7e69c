"""Exact scalar arithmetic: cyclotomic numbers and formal-parameter polynomials.

Every quantity in this package is computed exactly.  The scalar domain is

    Q(zeta_N)[a_0, a_1, ...]

where zeta_N = exp(2*pi*i/N) is a primitive N-th root of unity and the a_i
are formal commuting parameters (used for symbolic R-matrix coefficients).
There are no floats anywhere in the arithmetic; rationals are
``fractions.Fraction`` and a cyclotomic number is a dict mapping exponents
to rationals in the power basis 1, zeta, ..., zeta^(phi(N)-1) reduced modulo
the N-th cyclotomic polynomial.

A ``CycField`` instance is the shared context for one computation session:
it fixes the root order N, precomputes the reduction table for the power
basis, and names the formal parameters in play.  All ``Cyc`` and ``Poly``
values hold a reference to their field and may only be combined with values
from the same field.

Example (N = 8, so zeta^4 = -1 and sqrt(2) = zeta + zeta^7 exists):

    >>> F = CycField(8)
    >>> z = F.zeta(1)
    >>> (z + z**7) ** 2 == F.from_int(2)
    True
    >>> F.zeta(2) * F.zeta(2)      # i^2
    Cyc(8, {0: Fraction(-1, 1)})

The field order must be a multiple of 8 whenever square roots of 2 are
needed (they live in Q(zeta_8)); ``field_for`` takes care of that.
"""

from fractions import Fraction
from math import gcd

__all__ = [
    "CycField",
    "Cyc",
    "Poly",
    "DegreeCapError",
    "field_for",
    "scalar_to_json",
    "scalar_from_json",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


class DegreeCapError(ArithmeticError):
    """A formal-parameter exponent exceeded the field's declared cap."""


def _poly_divide_exact(num, den):
    # Exact division of integer polynomials (ascending coefficient lists).
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, den[dn])
        assert r == 0
        out[i - dn] = q
        for j, dj in enumerate(den):
            num[i - dn + j] -= q * dj
    assert all(c == 0 for c in num)
    return out


_CYCLO_CACHE = {1: [-1, 1]}


def cyclotomic_polynomial(n):
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by exact integer division of x^n - 1 by the product of
    Phi_d over proper divisors d of n.
    """
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    _CYCLO_CACHE[n] = poly
    return poly


def field_for(*orders, params=(), param_cap=None):
    """A CycField whose order is lcm(8, all given root orders).

    The factor 8 guarantees i and sqrt(2) are present, which the ribbon
    normalisations need.
    """
    n = 8
    for m in orders:
        m = int(m)
        assert m >= 1
        n = n * m // gcd(n, m)
    return CycField(n, params=params, param_cap=param_cap)


class CycField:
    """Arithmetic context: root order, reduction table, parameter names."""

    def __init__(self, order, params=(), param_cap=None):
        order = int(order)
        assert order >= 1
        self.order = order
        phi = cyclotomic_polynomial(order)
        self.degree = len(phi) - 1
        self.params = tuple(params)
        self.param_cap = param_cap
        # red[e] = ((exp, int_coeff), ...) meaning x^e = sum coeff * x^exp,
        # for every exponent that the arithmetic can produce:
        # products of reduced elements reach 2*(degree-1), and zeta(k)
        # lookups reach order-1.
        top = max(2 * self.degree - 1, order)
        red = {}
        cur = {i: -phi[i] for i in range(self.degree) if phi[i]}
        red[self.degree] = cur
        for e in range(self.degree + 1, top):
            nxt = {}
            for k, c in cur.items():
                k1 = k + 1
                if k1 < self.degree:
                    nxt[k1] = nxt.get(k1, 0) + c
                else:
                    for k2, c2 in red[self.degree].items():
                        v = nxt.get(k2, 0) + c * c2
                        if v:
                            nxt[k2] = v
                        elif k2 in nxt:
                            del nxt[k2]
            cur = {k: c for k, c in nxt.items() if c}
            red[e] = cur
        self._red = {e: tuple(d.items()) for e, d in red.items()}
        self.zero = Cyc(self, {})
        self.one = Cyc(self, {0: _F1})
        self._zeta_cache = {}
        self.poly_zero = Poly(self, {})
        self.poly_one = Poly(self, {(): self.one})

    def __repr__(self):
        return "CycField(%d)" % self.order

    def zeta(self, k=1):
        """zeta_N^k as a reduced Cyc."""
        k = k % self.order
        got = self._zeta_cache.get(k)
        if got is not None:
            return got
        if k < self.degree:
            out = Cyc(self, {k: _F1})
        else:
            out = Cyc(self, {e: Fraction(c) for e, c in self._red[k]})
        self._zeta_cache[k] = out
        return out

    def root_of_unity(self, m, k=1):
        """zeta_m^k, for m dividing the field order."""
        assert self.order % m == 0, (m, self.order)
        return self.zeta((self.order // m) * k)

    def from_rational(self, q):
        q = Fraction(q)
        return Cyc(self, {0: q} if q else {})

    def from_int(self, n):
        return self.from_rational(n)

    def sqrt(self, n):
        """The positive square root of a positive integer n, if it exists
        in this field.

        sqrt(2) = zeta_8 + zeta_8^-1; for an odd prime p the quadratic
        Gauss sum g_p = sum_a (a|p) zeta_p^a equals sqrt(p) when p = 1
        mod 4 and i*sqrt(p) when p = 3 mod 4.  Composite n is split into
        square part times product of primes.  Raises ValueError when a
        needed root of unity is missing from the field.
        """
        n = int(n)
        assert n > 0
        out = self.one
        s = 1
        # split off the square part
        d = 2
        m = n
        rest = 1
        while d * d <= m:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                rest *= d
            d += 1
        if m > 1:
            rest *= m
        out = self.from_int(s)
        for p in _prime_factors(rest):
            if p == 2:
                if self.order % 8:
                    raise ValueError("sqrt(2) needs a field order divisible by 8")
                out = out * (self.zeta(self.order // 8) + self.zeta(-self.order // 8))
            else:
                if self.order % p:
                    raise ValueError("sqrt(%d) needs zeta_%d" % (p, p))
                g = self.zero
                for a in range(1, p):
                    g = g + self.root_of_unity(p, a) * _legendre(a, p)
                if p % 4 == 3:
                    if self.order % 4:
                        raise ValueError("sqrt(%d) needs i in the field" % p)
                    g = g * -self.zeta(self.order // 4)  # divide out i
                out = out * g
        return out

    def param(self, i):
        """The i-th formal parameter as a Poly."""
        assert 0 <= i < len(self.params)
        return Poly(self, {((i, 1),): self.one})

    def poly(self, x):
        """Promote a Cyc / Fraction / int to a constant Poly."""
        if isinstance(x, Poly):
            assert x.field is self
            return x
        if not isinstance(x, Cyc):
            x = self.from_rational(x)
        assert x.field is self
        return Poly(self, {(): x} if x.c else {})


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _legendre(a, p):
    t = pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


class Cyc:
    """A cyclotomic number: dict {exponent: Fraction}, exponents < phi(N).

    Immutable by convention -- arithmetic returns fresh objects and never
    mutates the coefficient dict of an existing one.
    """

    __slots__ = ("field", "c")

    def __init__(self, field, c):
        self.field = field
        self.c = c

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, Cyc):
            return self.field is other.field and self.c == other.c
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.c
            return self.c == {0: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, tuple(sorted(self.c.items()))))

    def __repr__(self):
        return "Cyc(%d, %r)" % (self.field.order, self.c)

    def __str__(self):
        if not self.c:
            return "0"
        bits = []
        for e in sorted(self.c):
            q = self.c[e]
            if e == 0:
                bits.append(str(q))
            else:
                z = "z" if e == 1 else "z^%d" % e
                if q == 1:
                    bits.append(z)
                elif q == -1:
                    bits.append("-" + z)
                else:
                    bits.append("%s*%s" % (q, z))
        return " + ".join(bits).replace("+ -", "- ")

    def _coerce(self, other):
        if isinstance(other, Cyc):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self.c)
        for e, q in o.c.items():
            v = c.get(e, _F0) + q
            if v:
                c[e] = v
            elif e in c:
                del c[e]
        return Cyc(self.field, c)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.field, {e: -q for e, q in self.c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if not a or not b:
            return self.field.zero
        deg = self.field.degree
        red = self.field._red
        acc = {}
        for e1, q1 in a.items():
            for e2, q2 in b.items():
                q = q1 * q2
                e = e1 + e2
                if e < deg:
                    v = acc.get(e, _F0) + q
                    if v:
                        acc[e] = v
                    elif e in acc:
                        del acc[e]
                else:
                    for e3, r in red[e]:
                        v = acc.get(e3, _F0) + q * r
                        if v:
                            acc[e3] = v
                        elif e3 in acc:
                            del acc[e3]
        return Cyc(self.field, acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0
        out = self.field.one
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse, via an exact linear solve over Q.

        Columns of the matrix are zeta^j * self in the power basis; the
        solution of M y = e_0 gives the coefficients of 1/self.
        """
        if not self.c:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        f = self.field
        deg = f.degree
        cols = []
        for j in range(deg):
            col = self * f.zeta(j)
            cols.append([col.c.get(i, _F0) for i in range(deg)])
        # rows of the augmented system
        mat = [[cols[j][i] for j in range(deg)] + [_F1 if i == 0 else _F0]
               for i in range(deg)]
        sol = _solve_exact(mat, deg)
        return Cyc(f, {j: sol[j] for j in range(deg) if sol[j]})

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self):
        """Complex conjugation zeta -> zeta^-1."""
        f = self.field
        out = f.zero
        for e, q in self.c.items():
            out = out + f.zeta(-e) * q
        return out

    def to_complex(self):
        """Inexact float evaluation -- for display and tests only."""
        import cmath
        z = cmath.exp(2j * cmath.pi / self.field.order)
        return sum(float(q) * z ** e for e, q in self.c.items())


def _solve_exact(mat, n):
    # Gaussian elimination with exact Fractions; mat is n x (n+1), in place.
    for col in range(n):
        piv = None
        for r in range(col, n):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular system")
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        for r in range(n):
            if r != col and mat[r][col]:
                fac = mat[r][col]
                row, prow = mat[r], mat[col]
                mat[r] = [row[k] - fac * prow[k] for k in range(n + 1)]
    return [mat[i][n] for i in range(n)]


class Poly:
    """Sparse polynomial in the field's formal parameters, Cyc coefficients.

    Keys are tuples ((param_index, exponent), ...) sorted by index with
    positive exponents; the empty tuple is the constant term:

        {(): Cyc(...), ((0, 1),): Cyc(...)}        # c0 + c1 * a_0

    Multiplication raises DegreeCapError if any parameter exponent would
    exceed the field's declared cap.  The cap is a validity guard (the
    ribbon computations have a known a-priori degree bound), never a
    silent truncation.
    """

    __slots__ = ("field", "c")

    def __init__(self, field, c):
        self.field = field
        self.c = c

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def is_constant(self):
        return not self.c or set(self.c) == {()}

    def constant_term(self):
        return self.c.get((), self.field.zero)

    def as_cyc(self):
        assert self.is_constant(), "parameter-dependent value: %s" % self
        return self.constant_term()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field is o.field and self.c == o.c

    def __hash__(self):
        return hash((self.field.order,
                     tuple(sorted((k, hash(v)) for k, v in self.c.items()))))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, Cyc)):
            return self.field.poly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self.c)
        for k, v in o.c.items():
            w = c.get(k)
            w = v if w is None else w + v
            if w.c:
                c[k] = w
            elif k in c:
                del c[k]
        return Poly(self.field, c)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, {k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.c or not o.c:
            return self.field.poly_zero
        cap = self.field.param_cap
        acc = {}
        for k1, v1 in self.c.items():
            for k2, v2 in o.c.items():
                k = _merge_keys(k1, k2, cap)
                v = v1 * v2
                w = acc.get(k)
                w = v if w is None else w + v
                if w.c:
                    acc[k] = w
                elif k in acc:
                    del acc[k]
        return Poly(self.field, acc)

    __rmul__ = __mul__

    def alpha_degree(self):
        """Total degree in the formal parameters (0 for constants, -1 for 0)."""
        if not self.c:
            return -1
        return max(sum(e for _, e in k) for k in self.c)

    def subs(self, values):
        """Substitute parameters; values maps param index -> Cyc/Fraction/int.

        Returns a Poly (constant if every parameter in the support is
        assigned).
        """
        f = self.field
        vals = {}
        for i, v in values.items():
            if not isinstance(v, Cyc):
                v = f.from_rational(v)
            vals[i] = v
        out = f.poly_zero
        for k, coeff in self.c.items():
            term = f.poly(coeff)
            for i, e in k:
                if i in vals:
                    term = term * f.poly(vals[i] ** e)
                else:
                    term = term * Poly(f, {((i, e),): f.one})
            out = out + term
        return out

    def __str__(self):
        if not self.c:
            return "0"
        names = self.field.params
        bits = []
        for k in sorted(self.c):
            coeff = str(self.c[k])
            mono = "*".join(
                (names[i] if i < len(names) else "a%d" % i) +
                ("" if e == 1 else "^%d" % e)
                for i, e in k)
            if not mono:
                bits.append("(%s)" % coeff)
            else:
                bits.append("(%s)*%s" % (coeff, mono))
        return " + ".join(bits)

    def __repr__(self):
        return "Poly(%s)" % self


def _merge_keys(k1, k2, cap):
    if not k1:
        return k2
    if not k2:
        return k1
    d = dict(k1)
    for i, e in k2:
        d[i] = d.get(i, 0) + e
    if cap is not None:
        for i, e in d.items():
            if e > cap:
                raise DegreeCapError(
                    "parameter %d exceeds degree cap %d" % (i, cap))
    return tuple(sorted(d.items()))


def scalar_to_json(x):
    """JSON form of a Cyc or Poly.

    Cyc:  {"order": N, "terms": [[exp, "p/q"], ...]}
    Poly: {"order": N, "poly": [[[[param, exp], ...], terms], ...]}
    """
    if isinstance(x, Cyc):
        return {"order": x.field.order,
                "terms": [[e, str(q)] for e, q in sorted(x.c.items())]}
    assert isinstance(x, Poly)
    return {"order": x.field.order,
            "poly": [[[list(p) for p in k],
                      [[e, str(q)] for e, q in sorted(v.c.items())]]
                     for k, v in sorted(x.c.items())]}


def scalar_from_json(field, obj):
    assert obj["order"] == field.order, "field order mismatch"
    if "terms" in obj:
        return Cyc(field, {int(e): Fraction(q) for e, q in obj["terms"]
                           if Fraction(q)})
    c = {}
    for k, terms in obj["poly"]:
        key = tuple(sorted((int(i), int(e)) for i, e in k))
        val = Cyc(field, {int(e): Fraction(q) for e, q in terms if Fraction(q)})
        if val.c:
            c[key] = val
    return Poly(field, c)
