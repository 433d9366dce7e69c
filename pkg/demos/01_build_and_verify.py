# Build the four worked algebras and run the Hopf axiom suite on each.

from hopfbead.biproduct import BiproductAlgebra
from hopfbead.hopfcore import verify_hopf_axioms
from hopfbead.nenciu import NenciuAlgebra, NenciuData
from hopfbead.scalar import field_for
from hopfbead.uqsl2 import UqSmallAlgebra

# The 8-dimensional diagonal algebra: one group generator of order 2,
# two nilpotent generators that pair with it.
sf2 = NenciuAlgebra(NenciuData(
    [2], [[1], [1]], [[1], [1]], labels=["Z+", "Z-"], name="sf2"))
print("sf2 has dimension", sf2.dim)
print("generators:", ", ".join(label for label, _ in sf2.generators()))

# A grouplike squared, a nilpotent squared, a coproduct -- exact output.
k = sf2.grouplike([1])
z = sf2.nilpotent(0)
print("K * K =", k * k)
print("Z+ * Z+ =", z * z)
print("coproduct of Z+:", z.coproduct())

# The 64-dimensional paired presentation.
n4 = NenciuAlgebra(NenciuData(
    [4, 4], [[1, 1], [-1, -1]], [[1, 1], [-1, -1]],
    labels=["X+", "X-"], name="n4"))
print("\nn4 has dimension", n4.dim)

# The small quantum group at an 8th root of unity, and the semidirect
# biproduct of the two -- they must share one coefficient field.
field = field_for(8, 2)
uq = UqSmallAlgebra(8, field)
big = BiproductAlgebra(UqSmallAlgebra(8, field),
                       NenciuAlgebra(sf2.data, field))
print("uq has dimension", uq.dim)
print("uq semidirect sf2 has dimension", big.dim)

# Run the axiom suite on each algebra.  "exhaustive" checks every
# monomial pair (and triple, up to the associativity cutoff); the
# sampled policy keeps the per-monomial checks exhaustive and draws
# seeded random pairs for the rest, which keeps the 512-dimensional
# biproduct quick here.
for alg, policy in ((sf2, "exhaustive"), (n4, "exhaustive"),
                    (uq, "exhaustive"), (big, "sampled:2000:0")):
    report = verify_hopf_axioms(alg, policy)
    print("\n%s  (dim %d, %s)" % (report["algebra"], report["dim"],
                                  report["policy"]))
    for check in report["checks"]:
        print("  %-24s %s" % (check["axiom"], check["status"]))
    assert report["ok"]

# Integrals and cointegrals.  sf2 is unimodular (its cointegral is
# two-sided), the Sweedler-type algebra below is not.
print("\nsf2 unimodular:", sf2.is_unimodular_direct())
sweedler = NenciuAlgebra(NenciuData([2], [[1]], [[1]]))
print("sweedler-type unimodular:", sweedler.is_unimodular_direct())
print("sweedler-type left cointegral: ", sweedler.cointegral("left"))
print("sweedler-type right cointegral:", sweedler.cointegral("right"))
print("Done.")
