"""Exact computer algebra for pointed finite-dimensional Hopf algebras.

Capabilities:

* build a family of pointed Hopf algebras presented by grouplike and
  nilpotent skew-primitive generators, the small quantum group of sl2 at
  an even root of unity, and their semidirect biproducts (`nenciu`,
  `uqsl2`, `biproduct`);
* verify the full Hopf algebra axiom suite, integrals/cointegrals and
  distinguished grouplikes in exact arithmetic (`hopfcore`);
* construct and verify quasitriangular and ribbon structures, monodromy
  matrices, non-factorizability witnesses and anomaly values, and search
  the finite parameter space for such structures (`qtribbon`);
* evaluate the bead invariant of a 4-dimensional 2-handlebody given by a
  Kirby-diagram file (`kirby`);
* load shipped example algebras and diagrams (`catalog`) and drive it all
  from the command line (`cli`).

All arithmetic is exact, over cyclotomic fields with formal parameters
(`scalar`); no floating point enters any verified statement.
"""

from .scalar import CycField, Cyc, Poly, field_for, DegreeCapError
from .hopfcore import (
    Element, Tensor, exp_nilpotent, iterated_coproduct, pair,
    verify_hopf_axioms, check_integral, check_cointegral,
    distinguished_grouplike, find_pivotals, is_pivotal,
)
from .nenciu import NenciuData, NenciuAlgebra
from .uqsl2 import UqSmallAlgebra
from .biproduct import BiproductAlgebra
from .qtribbon import (
    BudgetExceededError, RMatrixParams, anomaly_value, build_R, build_Rz,
    build_r_factors, check_constraints, drinfeld_element, drinfeld_inverse,
    factorizability_rank, make_ribbon, monodromy, opposite_type_pairs,
    pair_alpha, r_inverse, search_structures, strong_nf_witness, verify_qt,
)
from .kirby import (
    DiagramError, KirbyDiagram, RibbonBundle, conjecture_experiment,
    delete_crossings, euler_counts, evaluate, insert_cancelling_pair,
    load_diagram, load_shipped, parse_diagram, shipped_diagrams,
    vanishing_notes,
)
from .catalog import CatalogEntry, catalog_names, load_entry

__version__ = "0.1.0"

__all__ = [
    "CycField", "Cyc", "Poly", "field_for", "DegreeCapError",
    "Element", "Tensor", "exp_nilpotent", "iterated_coproduct", "pair",
    "verify_hopf_axioms", "check_integral", "check_cointegral",
    "distinguished_grouplike", "find_pivotals", "is_pivotal",
    "NenciuData", "NenciuAlgebra", "UqSmallAlgebra", "BiproductAlgebra",
    "BudgetExceededError", "RMatrixParams", "anomaly_value", "build_R",
    "build_Rz", "build_r_factors", "check_constraints", "drinfeld_element",
    "drinfeld_inverse", "factorizability_rank", "make_ribbon", "monodromy",
    "opposite_type_pairs", "pair_alpha", "r_inverse", "search_structures",
    "strong_nf_witness", "verify_qt",
    "DiagramError", "KirbyDiagram", "RibbonBundle", "conjecture_experiment",
    "delete_crossings", "euler_counts", "evaluate", "insert_cancelling_pair",
    "load_diagram", "load_shipped", "parse_diagram", "shipped_diagrams",
    "vanishing_notes",
    "CatalogEntry", "catalog_names", "load_entry",
]
