# Quasitriangular, ribbon, and strong-non-factorizability structure on
# two small algebras, with the alpha coefficient kept formal so every
# identity holds as a polynomial.

from hopfbead.nenciu import NenciuAlgebra, NenciuData
from hopfbead.qtribbon import (
    RMatrixParams, anomaly_value, build_r_factors, check_constraints,
    make_ribbon, monodromy, pair_alpha, strong_nf_witness, verify_qt,
)
from hopfbead.scalar import field_for


def product(factors):
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


# -- the 8-dimensional algebra, alpha formal ---------------------------

field = field_for(2, params=("a",))
a = field.param(0)
sf2 = NenciuAlgebra(NenciuData([2], [[1], [1]], [[1], [1]],
                               labels=["Z+", "Z-"], name="sf2"), field)
params = RMatrixParams(sf2.data, [[1]], pair_alpha(sf2.data, [a]))

# the congruence checker accepts the structure...
print("constraint violations:", check_constraints(sf2.data, params,
                                                  field, alg=sf2))

# ...and the R-matrix axioms hold identically in a
facs = build_r_factors(sf2, params)
r = product(facs)
report = verify_qt(r, factors=facs)
for check in report["checks"]:
    print("  %-4s %-6s (%s)" % (check["axiom"], check["status"],
                                check["mode"]))
assert report["ok"]

# the monodromy R21 R is not trivial, and the integral does not kill
# it: this structure is factorizable to some degree
m = monodromy(r, facs)
print("monodromy has", len(m.c), "terms")
lam = sf2.integral_functional()
w1, w2 = strong_nf_witness(r, lam, monodromy_tensor=m)
print("lambda(S(M')) M'' =", w1)

# ribbon element from the pivotal grouplike K1
v, rib = make_ribbon(r, sf2.encode((1,), 0), monodromy_tensor=m)
print("ribbon checks:", ", ".join("%s %s" % (c["axiom"], c["status"])
                                  for c in rib["checks"]))
print("ribbon element v =", v)
print("lambda(v) =", anomaly_value(lam, v), " (nonzero: anomaly-free)")

# specialising a to 0 degenerates it to the triangular structure
print("at a=0, lambda(v) =", anomaly_value(lam, v.substitute({0: 0})))

# -- the 64-dimensional paired presentation ----------------------------

n4 = NenciuAlgebra(NenciuData([4, 4], [[1, 1], [-1, -1]],
                              [[1, 1], [-1, -1]],
                              labels=["X+", "X-"], name="n4"))
params = RMatrixParams(n4.data, [[2, 3], [1, 0]])
facs = build_r_factors(n4, params)
r = product(facs)
m = monodromy(r, facs)

print("\nn4 monodromy is trivial:", m == n4.unit_tensor(2))

# trivial monodromy means the integral certainly kills it on both
# sides: strongly non-factorizable
lam = n4.integral_functional()
w1, w2 = strong_nf_witness(r, lam, monodromy_tensor=m)
print("witnesses vanish:", w1.is_zero() and w2.is_zero())

v, rib = make_ribbon(r, n4.encode((0, 2), 0), monodromy_tensor=m)
assert rib["ok"]
print("lambda(v) =", anomaly_value(lam, v), " (zero: anomalous)")
print("Done.")
