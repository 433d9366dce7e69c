"""Generic machinery for finite-dimensional Hopf algebras given by basis
presentations.

A *presentation* names a distinguished monomial basis 0..dim-1 and gives
the structure maps on monomials:

    mono_mul(i, j)        -> ((mono, Cyc), ...)          product expansion
    mono_coproduct(i)     -> ((mono, mono, Cyc), ...)    coproduct expansion
    mono_counit(i)        -> Cyc
    mono_antipode(i)      -> ((mono, Cyc), ...)
    mono_antipode_inv(i)  -> ((mono, Cyc), ...)

Everything else -- elements, tensors, iterated coproducts, exponentials,
axiom verification, integrals, pivotal elements -- is derived here and
works uniformly for every algebra family in the package.  Structure
constants are pure cyclotomic numbers; element coefficients may also be
polynomials in formal parameters, and the two mix freely.

An Element is a dict {monomial_index: coefficient}:

    >>> x = alg.basis_element(3) * 2 + alg.unit()
    >>> x.c                                # {0: Cyc(... 1), 3: Cyc(... 2)}

A Tensor over n slots is a dict {(m_1, ..., m_n): coefficient} with the
componentwise algebra structure.  Tensor factors always come from one
algebra; mixed-algebra tensors never occur here because every construction
(R-matrices, monodromies, coproducts) lives in tensor powers of a single
Hopf algebra.
"""

import itertools
import random
from fractions import Fraction

from .scalar import Cyc, Poly

__all__ = [
    "Presentation", "Element", "Tensor",
    "exp_nilpotent", "iterated_coproduct", "adjoint_action", "pair",
    "verify_hopf_axioms", "parse_policy", "InternTable",
    "check_integral", "check_cointegral", "distinguished_grouplike",
    "find_pivotals", "element_to_json",
]


class Presentation:
    """Base class: caching and element factories over a monomial basis.

    Subclasses must set ``field``, ``dim``, ``name``, ``unit_mono`` and
    implement the ``_raw`` structure maps on monomial indices.
    """

    def __init__(self, field, dim, name, unit_mono=0):
        self.field = field
        self.dim = dim
        self.name = name
        self.unit_mono = unit_mono
        self._mul_cache = {}
        self._cop_cache = {}
        self._eps_cache = {}
        self._S_cache = {}
        self._Sinv_cache = {}
        self._S2_cache = None
        self._grouplikes = None

    # -- structure maps on monomials (cached) --------------------------

    def mono_mul(self, i, j):
        key = (i, j)
        got = self._mul_cache.get(key)
        if got is None:
            got = tuple((m, c) for m, c in self._mono_mul_raw(i, j) if c)
            self._mul_cache[key] = got
        return got

    def mono_coproduct(self, i):
        got = self._cop_cache.get(i)
        if got is None:
            got = tuple((a, b, c) for a, b, c in self._mono_coproduct_raw(i)
                        if c)
            self._cop_cache[i] = got
        return got

    def mono_counit(self, i):
        got = self._eps_cache.get(i)
        if got is None:
            got = self._mono_counit_raw(i)
            self._eps_cache[i] = got
        return got

    def mono_antipode(self, i):
        got = self._S_cache.get(i)
        if got is None:
            got = tuple((m, c) for m, c in self._mono_antipode_raw(i) if c)
            self._S_cache[i] = got
        return got

    def mono_antipode_inv(self, i):
        got = self._Sinv_cache.get(i)
        if got is None:
            got = tuple((m, c) for m, c in self._mono_antipode_inv_raw(i)
                        if c)
            self._Sinv_cache[i] = got
        return got

    # -- element factories ---------------------------------------------

    def zero(self):
        return Element(self, {})

    def unit(self):
        return Element(self, {self.unit_mono: self.field.one})

    def basis_element(self, i):
        assert 0 <= i < self.dim
        return Element(self, {i: self.field.one})

    def element(self, coeffs):
        return Element(self, {m: c for m, c in coeffs.items() if c})

    def unit_tensor(self, n):
        return Tensor(self, n,
                      {(self.unit_mono,) * n: self.field.one})

    def zero_tensor(self, n):
        return Tensor(self, n, {})

    # -- derived structure ---------------------------------------------

    def grouplike_monomials(self):
        """Monomials m with coproduct m (x) m and counit 1 (cached scan)."""
        if self._grouplikes is None:
            out = []
            for m in range(self.dim):
                cop = self.mono_coproduct(m)
                if (len(cop) == 1 and cop[0][0] == m and cop[0][1] == m
                        and cop[0][2] == self.field.one
                        and self.mono_counit(m) == self.field.one):
                    out.append(m)
            self._grouplikes = out
        return self._grouplikes

    def mono_antipode_squared(self, i):
        if self._S2_cache is None:
            self._S2_cache = {}
        got = self._S2_cache.get(i)
        if got is None:
            acc = {}
            for m, c in self.mono_antipode(i):
                for m2, c2 in self.mono_antipode(m):
                    _accum(acc, m2, c * c2)
            got = tuple(acc.items())
            self._S2_cache[i] = got
        return got

    def generators(self):
        """[(label, Element), ...] -- override in subclasses."""
        raise NotImplementedError

    def mono_str(self, i):
        return "e%d" % i

    def __repr__(self):
        return "<%s dim=%d>" % (self.name, self.dim)


def _accum(acc, key, val):
    w = acc.get(key)
    if w is None:
        acc[key] = val
    else:
        w = w + val
        if w:
            acc[key] = w
        else:
            del acc[key]


class Element:
    """A sparse algebra element: dict {monomial: Cyc-or-Poly coefficient}."""

    __slots__ = ("alg", "c")

    def __init__(self, alg, c):
        self.alg = alg
        self.c = c

    def is_zero(self):
        return not self.c

    def terms(self):
        return self.c.items()

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        assert other.alg is self.alg
        return (self - other).is_zero()

    def __add__(self, other):
        assert isinstance(other, Element) and other.alg is self.alg
        c = dict(self.c)
        for m, v in other.c.items():
            _accum(c, m, v)
        return Element(self.alg, c)

    def __neg__(self):
        return Element(self.alg, {m: -v for m, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if isinstance(s, (int, Fraction)):
            s = self.alg.field.from_rational(s)
        if not s:
            return self.alg.zero()
        return Element(self.alg, {m: v * s for m, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc, Poly)):
            return self.scale(other)
        assert isinstance(other, Element) and other.alg is self.alg
        alg = self.alg
        acc = {}
        for m1, c1 in self.c.items():
            for m2, c2 in other.c.items():
                c = c1 * c2
                if not c:
                    continue
                for m3, s in alg.mono_mul(m1, m2):
                    _accum(acc, m3, c * s)
        return Element(alg, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyc, Poly)):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, other):
        """Tensor product: a @ b is a 2-slot Tensor (b may be a Tensor)."""
        if isinstance(other, Tensor):
            me = Tensor(self.alg, 1, {(m,): c for m, c in self.c.items()})
            return me @ other
        assert isinstance(other, Element) and other.alg is self.alg
        acc = {}
        for m1, c1 in self.c.items():
            for m2, c2 in other.c.items():
                v = c1 * c2
                if v:
                    acc[(m1, m2)] = v
        return Tensor(self.alg, 2, acc)

    def coproduct(self):
        alg = self.alg
        acc = {}
        for m, c in self.c.items():
            for a, b, s in alg.mono_coproduct(m):
                _accum(acc, (a, b), c * s)
        return Tensor(alg, 2, acc)

    def counit(self):
        out = self.alg.field.zero
        for m, c in self.c.items():
            e = self.alg.mono_counit(m)
            if e:
                out = out + c * e
        return out

    def antipode(self):
        return self._map_mono(self.alg.mono_antipode)

    def antipode_inv(self):
        return self._map_mono(self.alg.mono_antipode_inv)

    def _map_mono(self, fn):
        acc = {}
        for m, c in self.c.items():
            for m2, s in fn(m):
                _accum(acc, m2, c * s)
        return Element(self.alg, acc)

    def substitute(self, values):
        """Substitute formal parameters in all coefficients."""
        out = {}
        for m, c in self.c.items():
            if isinstance(c, Poly):
                c = c.subs(values)
                if c.is_constant():
                    c = c.constant_term()
            if c:
                out[m] = c
        return Element(self.alg, out)

    def __str__(self):
        if not self.c:
            return "0"
        bits = []
        for m in sorted(self.c):
            bits.append("(%s)*%s" % (self.c[m], self.alg.mono_str(m)))
        return " + ".join(bits)

    def __repr__(self):
        return "Element<%s>" % self


class Tensor:
    """Sparse tensor over n slots of one algebra: {(m_1..m_n): coeff}."""

    __slots__ = ("alg", "n", "c")

    def __init__(self, alg, n, c):
        self.alg = alg
        self.n = n
        self.c = c

    def is_zero(self):
        return not self.c

    def terms(self):
        return self.c.items()

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        assert other.alg is self.alg and other.n == self.n
        return (self - other).is_zero()

    def __add__(self, other):
        assert isinstance(other, Tensor) and other.n == self.n
        c = dict(self.c)
        for m, v in other.c.items():
            _accum(c, m, v)
        return Tensor(self.alg, self.n, c)

    def __neg__(self):
        return Tensor(self.alg, self.n,
                      {m: -v for m, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if isinstance(s, (int, Fraction)):
            s = self.alg.field.from_rational(s)
        if not s:
            return Tensor(self.alg, self.n, {})
        return Tensor(self.alg, self.n,
                      {m: v * s for m, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc, Poly)):
            return self.scale(other)
        assert isinstance(other, Tensor) and other.n == self.n
        alg = self.alg
        n = self.n
        mono_mul = alg.mono_mul
        acc = {}
        for m1, c1 in self.c.items():
            for m2, c2 in other.c.items():
                base = c1 * c2
                if not base:
                    continue
                parts = [mono_mul(m1[s], m2[s]) for s in range(n)]
                if any(not p for p in parts):
                    continue
                for combo in itertools.product(*parts):
                    coeff = base
                    for _, s in combo:
                        coeff = coeff * s
                    if coeff:
                        _accum(acc, tuple(m for m, _ in combo), coeff)
        return Tensor(alg, n, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyc, Poly)):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, other):
        """Concatenation: (n-slot) @ (Element or m-slot) -> (n+m)-slot."""
        if isinstance(other, Element):
            other = Tensor(other.alg, 1, {(m,): c for m, c in other.c.items()})
        assert isinstance(other, Tensor) and other.alg is self.alg
        acc = {}
        for m1, c1 in self.c.items():
            for m2, c2 in other.c.items():
                v = c1 * c2
                if v:
                    acc[m1 + m2] = v
        return Tensor(self.alg, self.n + other.n, acc)

    def permute(self, perm):
        """Slot permutation: new slot s holds old slot perm[s].

        ``t.permute((1, 0))`` is the flip tau(x (x) y) = y (x) x.
        """
        assert sorted(perm) == list(range(self.n))
        acc = {}
        for m, c in self.c.items():
            _accum(acc, tuple(m[p] for p in perm), c)
        return Tensor(self.alg, self.n, acc)

    def map_slot(self, slot, mono_fn):
        """Apply a monomial->terms linear map in one slot."""
        acc = {}
        for m, c in self.c.items():
            for m2, s in mono_fn(m[slot]):
                _accum(acc, m[:slot] + (m2,) + m[slot + 1:], c * s)
        return Tensor(self.alg, self.n, acc)

    def antipode_slot(self, slot):
        return self.map_slot(slot, self.alg.mono_antipode)

    def coproduct_slot(self, slot):
        """Replace one slot by its coproduct, yielding n+1 slots."""
        acc = {}
        for m, c in self.c.items():
            for a, b, s in self.alg.mono_coproduct(m[slot]):
                _accum(acc, m[:slot] + (a, b) + m[slot + 1:], c * s)
        return Tensor(self.alg, self.n + 1, acc)

    def counit_slot(self, slot):
        """Contract one slot with the counit, yielding n-1 slots."""
        acc = {}
        for m, c in self.c.items():
            e = self.alg.mono_counit(m[slot])
            if e:
                _accum(acc, m[:slot] + m[slot + 1:], c * e)
        return Tensor(self.alg, self.n - 1, acc)

    def slots_to_element(self):
        assert self.n == 1
        return Element(self.alg, {m[0]: c for m, c in self.c.items()})

    def multiply_slots(self):
        """Multiply all slots together into a single Element."""
        out = {}
        alg = self.alg
        for m, c in self.c.items():
            cur = {m[0]: c}
            for s in range(1, self.n):
                nxt = {}
                for mm, cc in cur.items():
                    for m3, s3 in alg.mono_mul(mm, m[s]):
                        _accum(nxt, m3, cc * s3)
                cur = nxt
            for mm, cc in cur.items():
                _accum(out, mm, cc)
        return Element(alg, out)

    def substitute(self, values):
        out = {}
        for m, c in self.c.items():
            if isinstance(c, Poly):
                c = c.subs(values)
                if c.is_constant():
                    c = c.constant_term()
            if c:
                out[m] = c
        return Tensor(self.alg, self.n, out)

    def __str__(self):
        if not self.c:
            return "0"
        bits = []
        for m in sorted(self.c):
            word = " (x) ".join(self.alg.mono_str(x) for x in m)
            bits.append("(%s)*[%s]" % (self.c[m], word))
        return " + ".join(bits)

    def __repr__(self):
        return "Tensor<%d slots, %d terms>" % (self.n, len(self.c))


# -- generic operations ------------------------------------------------


def exp_nilpotent(x, max_steps=64):
    """exp of a nilpotent Element or Tensor, summed exactly.

    Terminates when the running power vanishes; raises if it has not
    vanished after max_steps (i.e. the argument was not nilpotent).
    """
    if isinstance(x, Element):
        out = x.alg.unit()
    else:
        out = x.alg.unit_tensor(x.n)
    term = out
    k = 0
    while True:
        k += 1
        term = term * x
        term = term.scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
        if k > max_steps:
            raise ArithmeticError("exp argument is not nilpotent")


def iterated_coproduct(x, slots):
    """The (slots-1)-fold coproduct of an Element, as a slots-tensor.

    slots=1 returns x itself (as a 1-tensor), slots=2 is the coproduct,
    and higher values expand the last slot repeatedly (coassociativity
    makes any expansion order equal; the suite checks that).
    """
    assert slots >= 1
    t = Tensor(x.alg, 1, {(m,): c for m, c in x.c.items()})
    while t.n < slots:
        t = t.coproduct_slot(t.n - 1)
    return t


def adjoint_action(a, b):
    """The (left) adjoint action: sum a_(1) * b * S(a_(2))."""
    alg = a.alg
    acc = {}
    for m, c in a.c.items():
        for m1, m2, s in alg.mono_coproduct(m):
            cs = c * s
            for ms, sS in alg.mono_antipode(m2):
                for mb, cb in b.c.items():
                    c2 = cs * sS * cb
                    for p1, s1 in alg.mono_mul(m1, mb):
                        for p2, s2 in alg.mono_mul(p1, ms):
                            _accum(acc, p2, c2 * s1 * s2)
    return Element(alg, acc)


def pair(functional, x):
    """Apply a functional given as {monomial: Cyc} to an Element."""
    out = x.alg.field.zero
    for m, c in x.c.items():
        v = functional.get(m)
        if v:
            out = out + c * v
    return out


# -- axiom verification ------------------------------------------------


class InternTable:
    """Exact-scalar interning for hot verification loops.

    Field elements get small integer ids; products, sums and negations of
    ids are memoised.  The distinct scalars among an algebra's structure
    constants (together with the partial sums a verification pass runs
    into) form a small, nearly closed set, so after warm-up every scalar
    operation is a dict lookup instead of Fraction arithmetic.  Exactness
    is untouched: the tables are filled by the ordinary field operations.
    """

    def __init__(self, field):
        self.field = field
        self._ids = {}
        self._vals = []
        self._mul = {}
        self._add = {}
        self._neg = {}
        self.zero_id = self.intern(field.zero)
        self.one_id = self.intern(field.one)

    def intern(self, c):
        key = tuple(sorted(c.c.items()))
        got = self._ids.get(key)
        if got is None:
            got = len(self._vals)
            self._ids[key] = got
            self._vals.append(c)
        return got

    def value(self, i):
        return self._vals[i]

    def times(self, i, j):
        if i > j:
            i, j = j, i
        if i == self.zero_id:
            return self.zero_id
        if i == self.one_id:
            return j
        key = (i, j)
        got = self._mul.get(key)
        if got is None:
            got = self.intern(self._vals[i] * self._vals[j])
            self._mul[key] = got
        return got

    def plus(self, i, j):
        if i > j:
            i, j = j, i
        if i == self.zero_id:
            return j
        key = (i, j)
        got = self._add.get(key)
        if got is None:
            got = self.intern(self._vals[i] + self._vals[j])
            self._add[key] = got
        return got

    def neg(self, i):
        got = self._neg.get(i)
        if got is None:
            got = self.intern(-self._vals[i])
            self._neg[i] = got
        return got


def parse_policy(policy):
    """Parse 'exhaustive' or 'sampled:<count>:<seed>' into a tuple."""
    if policy in (None, "exhaustive"):
        return ("exhaustive", 0, 0)
    if isinstance(policy, tuple):
        return policy
    parts = policy.split(":")
    if parts[0] == "sampled":
        count = int(parts[1]) if len(parts) > 1 else 10000
        seed = int(parts[2]) if len(parts) > 2 else 0
        return ("sampled", count, seed)
    raise ValueError("unknown policy %r" % policy)


def verify_hopf_axioms(alg, policy="exhaustive", assoc_exhaustive_limit=64,
                       sample_default=10000):
    """Run the Hopf axiom suite on a presentation; returns a report dict.

    Exhaustive policy: every axiom that is linear in basis monomials is
    checked on all of them, pair axioms (associativity inputs fixed to
    monomials, multiplicativity of the coproduct and counit) on all
    monomial pairs.  Associativity triples are enumerated fully up to
    ``assoc_exhaustive_limit`` dimensions and pseudo-randomly sampled
    (seeded, reproducible) above that, since dim^3 basis triples stop
    being enumerable long before dim^2 pairs do.

    Sampled policy 'sampled:<count>:<seed>': per-monomial axioms still run
    on every basis monomial (they are cheap), pair and triple axioms on
    <count> seeded samples.
    """
    mode, count, seed = parse_policy(policy)
    dim = alg.dim
    field = alg.field
    one = field.one
    unit = alg.unit_mono
    checks = []

    def record(axiom, fail_witness, checked, how):
        checks.append({
            "axiom": axiom,
            "status": "fail" if fail_witness else "pass",
            "checked": checked,
            "mode": how,
            **({"witness": fail_witness} if fail_witness else {}),
        })

    def witness(kind, monos, detail=""):
        return {"kind": kind,
                "monomials": [alg.mono_str(m) for m in monos],
                **({"detail": detail} if detail else {})}

    # unit axiom on all monomials
    bad = None
    for m in range(dim):
        if (alg.mono_mul(unit, m) != ((m, one),)
                or alg.mono_mul(m, unit) != ((m, one),)):
            bad = witness("unit", [m])
            break
    record("unit", bad, dim, "exhaustive")

    # counit axiom (eps (x) id) cop = id = (id (x) eps) cop
    bad = None
    for m in range(dim):
        left = {}
        right = {}
        for a, b, c in alg.mono_coproduct(m):
            ea = alg.mono_counit(a)
            if ea:
                _accum(left, b, c * ea)
            eb = alg.mono_counit(b)
            if eb:
                _accum(right, a, c * eb)
        if left != {m: one} or right != {m: one}:
            bad = witness("counit", [m])
            break
    record("counit", bad, dim, "exhaustive")

    # coassociativity on all monomials
    bad = None
    for m in range(dim):
        acc = {}
        for a, b, c in alg.mono_coproduct(m):
            for a1, a2, c2 in alg.mono_coproduct(a):
                _accum(acc, (a1, a2, b), c * c2)
        for a, b, c in alg.mono_coproduct(m):
            for b1, b2, c2 in alg.mono_coproduct(b):
                _accum(acc, (a, b1, b2), -(c * c2))
        if acc:
            bad = witness("coassociativity", [m])
            break
    record("coassociativity", bad, dim, "exhaustive")

    # antipode axiom mu (S (x) id) cop = eps(.) 1 = mu (id (x) S) cop
    bad = None
    for m in range(dim):
        eps = alg.mono_counit(m)
        target = {unit: eps} if eps else {}
        acc = {}
        for a, b, c in alg.mono_coproduct(m):
            for sa, cs in alg.mono_antipode(a):
                cc = c * cs
                for p, cp in alg.mono_mul(sa, b):
                    _accum(acc, p, cc * cp)
        if acc != target:
            bad = witness("antipode-left", [m])
            break
        acc = {}
        for a, b, c in alg.mono_coproduct(m):
            for sb, cs in alg.mono_antipode(b):
                cc = c * cs
                for p, cp in alg.mono_mul(a, sb):
                    _accum(acc, p, cc * cp)
        if acc != target:
            bad = witness("antipode-right", [m])
            break
    record("antipode", bad, dim, "exhaustive")

    # antipode inverse really inverts
    bad = None
    for m in range(dim):
        acc = {}
        for a, c in alg.mono_antipode(m):
            for b, c2 in alg.mono_antipode_inv(a):
                _accum(acc, b, c * c2)
        if acc != {m: one}:
            bad = witness("antipode-inverse", [m])
            break
    record("antipode-inverse", bad, dim, "exhaustive")

    # bialgebra: coproduct/counit of the unit
    cop1 = alg.mono_coproduct(unit)
    bad = None
    if cop1 != ((unit, unit, one),) or alg.mono_counit(unit) != one:
        bad = witness("unit-comultiplicative", [unit])
    record("unit-comultiplicative", bad, 1, "exhaustive")

    # pair/triple enumerations
    rng = random.Random(seed if mode == "sampled" else 20260817)
    if mode == "exhaustive":
        pair_iter = itertools.product(range(dim), repeat=2)
        pair_count = dim * dim
        pair_how = "exhaustive"
    else:
        pair_iter = ((rng.randrange(dim), rng.randrange(dim))
                     for _ in range(count))
        pair_count = count
        pair_how = "sampled"

    # The pair and triple loops dominate at large dim, so they run on
    # interned scalar ids (memoised products/sums, see InternTable)
    # instead of raw field elements.
    table = InternTable(field)
    times, plus, neg = table.times, table.plus, table.neg
    zero_id = table.zero_id
    cop_int = [tuple((a, b, table.intern(c))
                     for a, b, c in alg.mono_coproduct(m))
               for m in range(dim)]
    eps_int = [table.intern(alg.mono_counit(m)) for m in range(dim)]
    mul_cache = {}

    def mul_int(i, j):
        key = i * dim + j
        got = mul_cache.get(key)
        if got is None:
            got = tuple((m, table.intern(c))
                        for m, c in alg._mono_mul_raw(i, j) if c)
            mul_cache[key] = got
        return got

    # counit and coproduct multiplicativity, one pass over the pairs
    bad_eps = None
    bad_cop = None
    for i, j in pair_iter:
        prod = mul_int(i, j)
        if bad_eps is None:
            s = zero_id
            for m, cid in prod:
                e = eps_int[m]
                if e != zero_id:
                    s = plus(s, times(cid, e))
            if s != times(eps_int[i], eps_int[j]):
                bad_eps = witness("counit-multiplicative", [i, j])
        if bad_cop is None:
            acc = {}
            for m, cid in prod:
                for a, b, c2 in cop_int[m]:
                    key = (a, b)
                    cur = acc.get(key)
                    val = times(cid, c2)
                    if cur is None:
                        if val != zero_id:
                            acc[key] = val
                    else:
                        cur = plus(cur, val)
                        if cur == zero_id:
                            del acc[key]
                        else:
                            acc[key] = cur
            for a1, a2, ca in cop_int[i]:
                for b1, b2, cb in cop_int[j]:
                    cc = neg(times(ca, cb))
                    for x, cx in mul_int(a1, b1):
                        cxx = times(cc, cx)
                        for y, cy in mul_int(a2, b2):
                            key = (x, y)
                            cur = acc.get(key)
                            val = times(cxx, cy)
                            if cur is None:
                                if val != zero_id:
                                    acc[key] = val
                            else:
                                cur = plus(cur, val)
                                if cur == zero_id:
                                    del acc[key]
                                else:
                                    acc[key] = cur
            if acc:
                bad_cop = witness("coproduct-multiplicative", [i, j])
        if bad_eps is not None and bad_cop is not None:
            break
    record("counit-multiplicative", bad_eps, pair_count, pair_how)
    record("coproduct-multiplicative", bad_cop, pair_count, pair_how)

    # associativity
    if mode == "exhaustive" and dim <= assoc_exhaustive_limit:
        triple_iter = itertools.product(range(dim), repeat=3)
        triple_count = dim ** 3
        triple_how = "exhaustive"
    else:
        n = count if mode == "sampled" else sample_default
        triple_iter = ((rng.randrange(dim), rng.randrange(dim),
                        rng.randrange(dim)) for _ in range(n))
        triple_count = n
        triple_how = "sampled"
    bad = None
    for i, j, k in triple_iter:
        acc = {}
        for m, cid in mul_int(i, j):
            for m2, c2 in mul_int(m, k):
                key = m2
                cur = acc.get(key)
                val = times(cid, c2)
                if cur is None:
                    if val != zero_id:
                        acc[key] = val
                else:
                    cur = plus(cur, val)
                    if cur == zero_id:
                        del acc[key]
                    else:
                        acc[key] = cur
        for m, cid in mul_int(j, k):
            ncid = neg(cid)
            for m2, c2 in mul_int(i, m):
                key = m2
                cur = acc.get(key)
                val = times(ncid, c2)
                if cur is None:
                    if val != zero_id:
                        acc[key] = val
                else:
                    cur = plus(cur, val)
                    if cur == zero_id:
                        del acc[key]
                    else:
                        acc[key] = cur
        if acc:
            bad = witness("associativity", [i, j, k])
            break
    record("associativity", bad, triple_count, triple_how)

    return {
        "algebra": alg.name,
        "dim": dim,
        "policy": mode if mode == "exhaustive" else
                  "sampled:%d:%d" % (count, seed),
        "ok": all(ch["status"] == "pass" for ch in checks),
        "checks": checks,
    }


# -- integrals, cointegrals, distinguished grouplikes, pivotals ---------


def check_integral(alg, lam, side="left"):
    """Check the (left/right) integral axiom for a functional.

    left:  (id (x) lam) cop(h) = lam(h) 1   for every basis monomial h
    right: (lam (x) id) cop(h) = lam(h) 1
    """
    unit = alg.unit_mono
    for m in range(alg.dim):
        acc = {}
        for a, b, c in alg.mono_coproduct(m):
            if side == "left":
                v = lam.get(b)
                tgt = a
            else:
                v = lam.get(a)
                tgt = b
            if v:
                _accum(acc, tgt, c * v)
        want = {}
        lm = lam.get(m)
        if lm:
            want[unit] = lm
        if acc != want:
            return False, alg.mono_str(m)
    return True, None


def check_cointegral(alg, el, side="left"):
    """Check h * el = eps(h) el (left) or el * h = eps(h) el (right)."""
    for m in range(alg.dim):
        h = alg.basis_element(m)
        got = h * el if side == "left" else el * h
        want = el.scale(alg.mono_counit(m))
        if got != want:
            return False, alg.mono_str(m)
    return True, None


def distinguished_grouplike(alg, lam):
    """The grouplike a with (lam (x) id) cop(h) = lam(h) a for all h.

    For a left integral lam this exists and is unique; returns the
    monomial index, or None if no grouplike satisfies the relation.
    """
    candidates = None
    for m in range(alg.dim):
        acc = {}
        for a, b, c in alg.mono_coproduct(m):
            v = lam.get(a)
            if v:
                _accum(acc, b, c * v)
        lm = lam.get(m)
        if lm:
            # acc must equal lm * basis(g) for the right grouplike g
            if len(acc) != 1:
                return None
            (g, coeff), = acc.items()
            if coeff != lm:
                return None
            if candidates is None:
                candidates = g
            elif candidates != g:
                return None
        else:
            if acc:
                return None
    if candidates is not None and candidates in alg.grouplike_monomials():
        return candidates
    return None


def is_pivotal(alg, g):
    """True if the grouplike monomial g satisfies S^2(x) g = g x for all x."""
    for m in range(alg.dim):
        lhs = {}
        for m2, c in alg.mono_antipode_squared(m):
            for m3, c2 in alg.mono_mul(m2, g):
                _accum(lhs, m3, c * c2)
        for m3, c2 in alg.mono_mul(g, m):
            _accum(lhs, m3, -c2)
        if lhs:
            return False
    return True


def find_pivotals(alg):
    """All grouplikes g with S^2(x) = g x g^{-1} for every basis monomial.

    Returned as a list of monomial indices (there may be several; the
    choice matters for which ribbon element a quasitriangular structure
    produces).
    """
    return [g for g in alg.grouplike_monomials() if is_pivotal(alg, g)]


def element_to_json(el):
    from .scalar import scalar_to_json
    return {"terms": [{"monomial": el.alg.mono_str(m),
                       "coeff": scalar_to_json(c)}
                      for m, c in sorted(el.c.items())]}
