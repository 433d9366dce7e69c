# Search a diagonal presentation for all quasitriangular structures.
#
# A structure is a matrix z of root-of-unity exponents (the grouplike
# part of R) together with a choice of alpha coefficients, one per pair
# of nilpotent generators of opposite type.  The search sieves every z
# candidate through the congruence constraints, then verifies the
# surviving structures axiom by axiom and classifies each hit.

import time

from hopfbead.nenciu import NenciuData
from hopfbead.qtribbon import search_structures

# The 64-dimensional paired presentation: two group generators of
# order 4, two nilpotent generators, no opposite-type pairs with a
# free alpha -- so every structure found is forced to alpha = 0.
n4 = NenciuData([4, 4], [[1, 1], [-1, -1]], [[1, 1], [-1, -1]],
                labels=["X+", "X-"], name="n4")

t0 = time.time()
hits = search_structures(n4)
print("n4: %d structures found in %.1fs" % (len(hits), time.time() - t0))
for hit in hits:
    print("  z=%s  alpha=%s  triangular=%s  ribbon=%s  anomaly=%s"
          % (hit["z"], hit["alpha_pattern"], hit["triangular"],
             hit["ribbon"], hit["anomaly"]))

# The 8-dimensional algebra has one opposite-type pair, so its
# structures carry a free parameter; the search reports the pattern
# (which generator pairs carry an alpha) rather than a value.
sf2 = NenciuData([2], [[1], [1]], [[1], [1]],
                 labels=["Z+", "Z-"], name="sf2")

t0 = time.time()
hits = search_structures(sf2)
print("\nsf2: %d structures found in %.1fs" % (len(hits), time.time() - t0))
for hit in hits:
    print("  z=%s  alpha=%s  triangular=%s  ribbon=%s  anomaly=%s"
          % (hit["z"], hit["alpha_pattern"], hit["triangular"],
             hit["ribbon"], hit["anomaly"]))

print("\nthe anomaly column is the integral evaluated on the ribbon")
print("element: zero means the structure is anomalous.")
print("Done.")
