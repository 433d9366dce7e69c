"""The shipped catalog of worked examples.

Each entry is a TOML file under ``data/catalog`` naming a presentation,
one verified quasitriangular structure over it (the structure matrix z,
the slots that carry a formal parameter, the ribbon-compatible pivotal
grouplike, the sidedness of the integral), and the findings a full
verification is expected to reproduce.  Entries come in three kinds:

    nenciu     -- a diagonal presentation (group part plus nilpotents);
    uqsl2      -- the small quantum group for sl2 at a root of unity;
    biproduct  -- the semidirect biproduct of the quantum group acting
                  on a diagonal presentation.

``load_entry`` accepts either a catalog name or a path to a TOML file
with the same schema, so external presentations can be fed to the same
tooling.  An entry builds its algebra, its R-matrix (with the formal
parameter, a numeric substitution, or zero) and a ready bundle for the
diagram evaluator.
"""

try:
    import tomllib
except ImportError:                                    # Python < 3.11
    import tomli as tomllib

import os
from fractions import Fraction
from importlib import resources

from .biproduct import BiproductAlgebra
from .kirby import RibbonBundle
from .nenciu import NenciuAlgebra, NenciuData
from .qtribbon import RMatrixParams, build_R, opposite_type_pairs, pair_alpha
from .scalar import field_for
from .uqsl2 import UqSmallAlgebra

__all__ = ["CatalogEntry", "catalog_dir", "catalog_names", "load_entry"]

KINDS = ("nenciu", "uqsl2", "biproduct")

# display order: the diagonal presentations by size of their family,
# then the quantum group, then the biproducts
_ORDER = ["sf2n", "n1", "n2", "n3", "n4", "uqsl2_r8",
          "biprod_sf2_r8", "biprod_n4_r8", "biprod_n2_r8"]


def catalog_dir():
    return resources.files("hopfbead").joinpath("data", "catalog")


def catalog_names():
    names = [p.name[:-5] for p in catalog_dir().iterdir()
             if p.name.endswith(".toml")]
    known = [n for n in _ORDER if n in names]
    return known + sorted(n for n in names if n not in _ORDER)


class CatalogEntry:
    """One catalog record: presentation + structure + expected findings."""

    def __init__(self, doc, source=None):
        self.source = source
        try:
            self.name = doc["name"]
            self.kind = doc["kind"]
            self.dim = doc["dim"]
        except KeyError as exc:
            raise ValueError("catalog entry needs a %s field" % exc) from None
        if self.kind not in KINDS:
            raise ValueError("unknown catalog kind %r (one of %s)"
                             % (self.kind, ", ".join(KINDS)))
        self.summary = doc.get("summary", "")
        self.note = doc.get("note", "")
        self.verify_policy = doc.get("verify_policy", "exhaustive")
        self.r = doc.get("r")
        if self.kind != "nenciu" and not self.r:
            raise ValueError("%s entry %r needs the root order r"
                             % (self.kind, self.name))

        pres = doc.get("presentation")
        self.data = None
        if self.kind == "nenciu" or self.kind == "biproduct":
            if pres is None:
                raise ValueError("entry %r needs a [presentation] table"
                                 % self.name)
            self.data = NenciuData(pres["m"], pres["d"], pres["u"],
                                   labels=pres.get("labels"),
                                   name=self.name if self.kind == "nenciu"
                                   else self.name + "_h")
            self.data.validate()

        st = doc.get("structure", {})
        self.z = st.get("z")
        self.alpha_pairs = [tuple(p) for p in st.get("alpha_pairs", [])]
        self.pivotal_exponents = st.get("pivotal")
        self.integral_two_sided = st.get("integral_two_sided", False)
        self.expect = dict(doc.get("expect", {}))

        if self.data is not None:
            known = set(opposite_type_pairs(self.data))
            for p in self.alpha_pairs:
                if p not in known:
                    raise ValueError(
                        "entry %r: alpha pair %r is not an opposite-type"
                        " pair of the presentation" % (self.name, list(p)))
        dim = 1
        if self.r:
            dim *= (self.r // 2) ** 3
        if self.data is not None:
            dim *= self.data.dim
        if dim != self.dim:
            raise ValueError("entry %r declares dim %d but the presentation"
                             " gives %d" % (self.name, self.dim, dim))

    # -- builders ----------------------------------------------------------

    def field(self, formal=True):
        """The smallest field the entry needs; ``formal`` adds one
        polynomial parameter per declared alpha pair."""
        if formal and self.alpha_pairs:
            if len(self.alpha_pairs) == 1:
                params = ("a",)
            else:
                params = tuple("a%d" % (i + 1)
                               for i in range(len(self.alpha_pairs)))
        else:
            params = ()
        orders = []
        if self.r:
            orders.append(self.r)
        if self.data is not None:
            orders.extend(self.data.m)
        return field_for(*orders, params=params)

    def algebra(self, field=None):
        if field is None:
            field = self.field()
        if self.kind == "nenciu":
            return NenciuAlgebra(self.data, field)
        if self.kind == "uqsl2":
            return UqSmallAlgebra(self.r, field)
        return BiproductAlgebra(UqSmallAlgebra(self.r, field),
                                NenciuAlgebra(self.data, field))

    def alpha_values(self, field, alpha="formal"):
        """One value per opposite-type pair of the presentation: the
        field parameters (``"formal"``), zero (``None``), or the given
        rationals assigned to the declared pairs in order."""
        pairs = opposite_type_pairs(self.data)
        declared = {p: i for i, p in enumerate(self.alpha_pairs)}
        if alpha is None:
            return [0] * len(pairs)
        if alpha == "formal":
            return [field.param(declared[p]) if p in declared else 0
                    for p in pairs]
        if len(alpha) != len(self.alpha_pairs):
            raise ValueError("entry %r takes %d alpha value(s), got %d"
                             % (self.name, len(self.alpha_pairs),
                                len(alpha)))
        vals = [field.from_rational(Fraction(a)) for a in alpha]
        return [vals[declared[p]] if p in declared else 0 for p in pairs]

    def rmatrix_params(self, field, alpha="formal"):
        """RMatrixParams for the entry's structure; None for the quantum
        group, whose R-matrix is canonical."""
        if self.kind == "uqsl2":
            return None
        return RMatrixParams(self.data, self.z,
                             pair_alpha(self.data,
                                        self.alpha_values(field, alpha)))

    def build_r(self, alg, alpha="formal"):
        return build_R(alg, self.rmatrix_params(alg.field, alpha))

    def pivotal_mono(self, alg):
        e = self.pivotal_exponents
        if self.kind == "nenciu":
            return alg.encode(tuple(e), 0)
        if self.kind == "uqsl2":
            return alg.encode(0, 0, e[0])
        return alg.combine(alg.uq.encode(0, 0, e[0]), 0)

    def cointegral(self, alg):
        if self.kind == "nenciu":
            return alg.cointegral("left")
        return alg.cointegral()

    def bundle(self, field=None, alpha="formal"):
        """Algebra, R-matrix and integrals packed for the evaluator."""
        alg = self.algebra(field)
        return RibbonBundle(alg, self.cointegral(alg),
                            alg.integral_functional(),
                            self.build_r(alg, alpha),
                            self.pivotal_mono(alg), name=self.name,
                            integral_two_sided=self.integral_two_sided)


def load_entry(name_or_path):
    """A CatalogEntry from a shipped name or a path to a TOML file."""
    text = None
    source = name_or_path
    if name_or_path.endswith(".toml") or os.sep in name_or_path:
        try:
            with open(name_or_path, "rb") as fh:
                doc = tomllib.load(fh)
        except OSError as exc:
            raise ValueError("cannot read %s: %s" % (name_or_path, exc)) \
                from None
        except tomllib.TOMLDecodeError as exc:
            raise ValueError("%s is not valid TOML: %s"
                             % (name_or_path, exc)) from None
    else:
        path = catalog_dir().joinpath(name_or_path + ".toml")
        try:
            text = path.read_text()
        except (OSError, FileNotFoundError):
            raise ValueError("no catalog entry %r (shipped: %s)"
                             % (name_or_path,
                                ", ".join(catalog_names()))) from None
        try:
            doc = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            raise ValueError("%s is not valid TOML: %s"
                             % (name_or_path, exc)) from None
    return CatalogEntry(doc, source=source)
