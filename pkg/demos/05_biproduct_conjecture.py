# Does the invariant of the semidirect biproduct factor as the product
# of the two constituents' invariants?  Expected answer: the difference
# is 0 on every diagram tried; this script records it, diagram by
# diagram, without presuming it.

from hopfbead.biproduct import BiproductAlgebra
from hopfbead.kirby import (
    RibbonBundle, conjecture_experiment, euler_counts, load_shipped,
    shipped_diagrams,
)
from hopfbead.nenciu import NenciuAlgebra, NenciuData
from hopfbead.qtribbon import RMatrixParams, build_R, pair_alpha
from hopfbead.scalar import field_for
from hopfbead.uqsl2 import UqSmallAlgebra

# all three algebras must live over one field: 8th roots of unity for
# the quantum group, 2nd for the diagonal factor, one formal parameter
field = field_for(8, 2, params=("a",))
uq = UqSmallAlgebra(8, field)
nen = NenciuAlgebra(NenciuData([2], [[1], [1]], [[1], [1]],
                               labels=["Z+", "Z-"], name="sf2"), field)
both = BiproductAlgebra(uq, nen)
params = RMatrixParams(nen.data, [[1]], pair_alpha(nen.data, [field.param(0)]))

bundles = {
    "U": RibbonBundle(uq, uq.cointegral(), uq.integral_functional(),
                      build_R(uq), uq.pivotal()),
    "H": RibbonBundle(nen, nen.cointegral("left"),
                      nen.integral_functional(),
                      build_R(nen, params), nen.encode((1,), 0),
                      integral_two_sided=True),
    "UH": RibbonBundle(both, both.cointegral(), both.integral_functional(),
                       build_R(both, params), both.pivotal()),
}

# only balanced diagrams (as many 1-handles as 2-handles) are
# interesting: the invariant vanishes identically otherwise
balanced = [name for name in shipped_diagrams()
            if len(set(euler_counts(load_shipped(name)))) == 1]

print("%-26s %-9s %-9s %-9s difference" % ("diagram", "J_U", "J_H", "J_UH"))
for name in balanced:
    rep = conjecture_experiment(load_shipped(name), bundles)
    print("%-26s %-9s %-9s %-9s %s" % (name, rep["J_U"], rep["J_H"],
                                       rep["J_UH"], rep["difference"]))
print("Done.")
