# Evaluate the handlebody invariant on the shipped diagram corpus.
#
# A diagram is a dotted unlink (1-handles) plus framed attaching
# circles (2-handles).  The evaluator walks each attaching circle,
# placing R-matrix components at crossings, cointegral coproduct legs
# where the circle runs through a 1-handle, and pivotal grouplikes at
# kinks, then applies the integral to each finished circle.

from hopfbead.catalog import load_entry
from hopfbead.kirby import (
    euler_counts, evaluate, insert_cancelling_pair, load_shipped,
    shipped_diagrams, vanishing_notes,
)

# a 1024-dimensional bundle from the catalog, alpha kept formal
bundle = load_entry("n2").bundle()
print("bundle:", bundle.alg.name, "dim", bundle.alg.dim)

print("\n%-26s %7s  J" % ("diagram", "(k1,k2)"))
for name in shipped_diagrams():
    diagram = load_shipped(name)
    value = evaluate(diagram, bundle)
    print("%-26s %7s  %s" % (name, euler_counts(diagram), value))

# the structural vanishing reasons the evaluator can explain
for name in ("isolated_one_handle", "unbalanced_underfed"):
    print("\n%s:" % name)
    for note in vanishing_notes(load_shipped(name), snf=True):
        print("  ", note)

# J is invariant under inserting a cancelling 1-/2-handle pair
base = load_shipped("double_pierce")
bigger = insert_cancelling_pair(base)
print("\ndouble_pierce            J =", evaluate(base, bundle))
print("with a cancelling pair   J =", evaluate(bigger, bundle))

# and under the shipped handle-slide pair
print("slide_before             J =",
      evaluate(load_shipped("slide_before"), bundle))
print("slide_after              J =",
      evaluate(load_shipped("slide_after"), bundle))
print("Done.")
