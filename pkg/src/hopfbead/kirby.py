"""Handle diagrams for 4-dimensional 2-handlebodies and the bead-algorithm
evaluator.

A diagram is a dotted unlink of 1-handles, each with an ordered list of
legs, plus framed 2-handle components given as cyclic event words read
from a basepoint.  Diagrams are kept in bottom normal form: all the
1-handles below, all the beads of a component on one ascending arc, so a
component is exactly its event word.  Events are

    ("through", handle_id, leg_index, direction)
    ("cross",   label, "over"|"under", sign)
    ("kink",    sign)

and the evaluator places on them, in traversal order,

    through  -- factor ``leg_index`` of the (n-1)-fold coproduct of the
                cointegral of an n-leg handle, with the antipode applied
                on legs traversed against their direction;
    cross    -- the slot-2 part of R on the over strand and the slot-1
                part on the under strand for a positive crossing, the
                same parts of the exact inverse (S (x) id) R for a
                negative one;
    kink     -- the pivotal grouplike g (sign +1) or its inverse.

A 1-handle with no legs contributes the scalar counit(cointegral).  The
invariant is the product over components of the integral applied to the
component's bead product, summed over all tensor indices.  Everything is
exact; with formal parameters in the R-matrix the result is an exact
polynomial.

The contraction never materialises the full index sum.  Components are
folded one at a time; within a component the state is a sparse map from
(partial product monomial, outstanding far-half beads) to a scalar, and
the integral is applied as soon as the component closes, which collapses
the partial product away (the integral vanishes off a single monomial
for every shipped bundle).  For the diagonal presentations the unique
complement trick fills in the final bead of a component by division
instead of enumeration.
"""

import json

from .hopfcore import Element, iterated_coproduct, pair
from .nenciu import NenciuAlgebra
from .qtribbon import BudgetExceededError, r_inverse

__all__ = [
    "DiagramError", "OneHandle", "Component", "KirbyDiagram",
    "parse_diagram", "load_diagram", "euler_counts",
    "insert_cancelling_pair", "delete_crossings",
    "RibbonBundle", "evaluate", "conjecture_experiment", "vanishing_notes",
    "diagram_dir", "shipped_diagrams", "load_shipped",
]


class DiagramError(ValueError):
    """A diagram file failed parsing or validation."""


class OneHandle:
    """A dotted-circle 1-handle with an ordered, contiguous leg list."""

    def __init__(self, hid, legs):
        self.id = hid
        self.legs = legs

    def __repr__(self):
        return "OneHandle(%r, legs=%d)" % (self.id, self.legs)


class Component:
    """One 2-handle attaching circle: an event word read from the
    basepoint, plus an integer framing shorthand (``framing_kinks`` n
    appends |n| kink events of sign(n) at the end of the word)."""

    def __init__(self, cid, events, framing_kinks=0):
        self.id = cid
        self.events = list(events)
        self.framing_kinks = framing_kinks

    def bead_events(self):
        tail = []
        n = self.framing_kinks
        if n:
            sign = 1 if n > 0 else -1
            tail = [("kink", sign)] * abs(n)
        return self.events + tail

    def __repr__(self):
        return "Component(%r, %d events)" % (self.id, len(self.events))


class KirbyDiagram:
    """A validated diagram; construction checks the global invariants."""

    def __init__(self, one_handles, components):
        self.one_handles = list(one_handles)
        self.components = list(components)
        self._validate()

    def handle(self, hid):
        for h in self.one_handles:
            if h.id == hid:
                return h
        raise KeyError(hid)

    def _validate(self):
        handles = {}
        for h in self.one_handles:
            if h.id in handles:
                raise DiagramError("duplicate 1-handle id %r" % h.id)
            if not isinstance(h.legs, int) or h.legs < 0:
                raise DiagramError("1-handle %r: legs must be a"
                                   " non-negative integer" % h.id)
            handles[h.id] = h
        seen_c = set()
        legs_used = {}
        crossings = {}
        for comp in self.components:
            if comp.id in seen_c:
                raise DiagramError("duplicate component id %r" % comp.id)
            seen_c.add(comp.id)
            if not isinstance(comp.framing_kinks, int):
                raise DiagramError("component %r: framing_kinks must be an"
                                   " integer" % comp.id)
            for pos, ev in enumerate(comp.events):
                where = "component %r, event %d" % (comp.id, pos)
                kind = ev[0]
                if kind == "through":
                    _, hid, leg, direction = ev
                    if hid not in handles:
                        raise DiagramError(
                            "%s: through undeclared 1-handle %r"
                            % (where, hid))
                    if not isinstance(leg, int) or \
                            not 0 <= leg < handles[hid].legs:
                        raise DiagramError(
                            "%s: leg %r out of range for 1-handle %r"
                            " with %d legs" % (where, leg, hid,
                                               handles[hid].legs))
                    if direction not in (1, -1):
                        raise DiagramError("%s: direction must be +1 or -1"
                                           % where)
                    if (hid, leg) in legs_used:
                        raise DiagramError(
                            "%s: leg %d of 1-handle %r already used at %s"
                            % (where, leg, hid, legs_used[hid, leg]))
                    legs_used[hid, leg] = where
                elif kind == "cross":
                    _, label, role, sign = ev
                    if role not in ("over", "under"):
                        raise DiagramError("%s: crossing role must be"
                                           " 'over' or 'under'" % where)
                    if sign not in (1, -1):
                        raise DiagramError("%s: crossing sign must be"
                                           " +1 or -1" % where)
                    crossings.setdefault(label, []).append(
                        (role, sign, where))
                elif kind == "kink":
                    if ev[1] not in (1, -1):
                        raise DiagramError("%s: kink sign must be +1 or -1"
                                           % where)
                else:
                    raise DiagramError("%s: unknown event kind %r"
                                       % (where, kind))
        for h in self.one_handles:
            for leg in range(h.legs):
                if (h.id, leg) not in legs_used:
                    raise DiagramError(
                        "leg %d of 1-handle %r is never traversed"
                        % (leg, h.id))
        for label, halves in crossings.items():
            if len(halves) != 2:
                raise DiagramError(
                    "crossing %r has %d halves (need exactly an over and"
                    " an under): %s" % (label, len(halves),
                                        "; ".join(w for _, _, w in halves)))
            (r1, s1, w1), (r2, s2, w2) = halves
            if {r1, r2} != {"over", "under"}:
                raise DiagramError(
                    "crossing %r needs one over and one under half"
                    " (%s; %s)" % (label, w1, w2))
            if s1 != s2:
                raise DiagramError(
                    "crossing %r has mismatched signs (%s; %s)"
                    % (label, w1, w2))

    def to_dict(self):
        comps = []
        for c in self.components:
            events = []
            for ev in c.events:
                if ev[0] == "through":
                    events.append({"through": [ev[1], ev[2]], "dir": ev[3]})
                elif ev[0] == "cross":
                    events.append({"cross": [ev[1], ev[2], ev[3]]})
                else:
                    events.append({"kink": ev[1]})
            entry = {"id": c.id, "events": events}
            if c.framing_kinks:
                entry["framing_kinks"] = c.framing_kinks
            comps.append(entry)
        return {"one_handles": [{"id": h.id, "legs": h.legs}
                                for h in self.one_handles],
                "components": comps}

    def __repr__(self):
        return "KirbyDiagram(k1=%d, k2=%d)" % euler_counts(self)


def _event_from_dict(obj, where):
    if not isinstance(obj, dict):
        raise DiagramError("%s: events must be objects" % where)
    if "through" in obj:
        ref = obj["through"]
        if not (isinstance(ref, list) and len(ref) == 2):
            raise DiagramError("%s: through must be [handle_id, leg]"
                               % where)
        return ("through", ref[0], ref[1], obj.get("dir", 1))
    if "cross" in obj:
        ref = obj["cross"]
        if not (isinstance(ref, list) and len(ref) == 3):
            raise DiagramError("%s: cross must be [label, role, sign]"
                               % where)
        return ("cross", ref[0], ref[1], ref[2])
    if "kink" in obj:
        return ("kink", obj["kink"])
    raise DiagramError("%s: event needs a 'through', 'cross' or 'kink' key"
                       % where)


def parse_diagram(text):
    """Parse and validate a diagram from JSON text.

    An empty (or whitespace-only) body is the empty diagram.  Raises
    DiagramError with the offending location on any malformed input.
    """
    if not text.strip():
        return KirbyDiagram([], [])
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError("not valid JSON: %s" % exc) from None
    if not isinstance(doc, dict):
        raise DiagramError("top level must be an object")
    handles = []
    for i, h in enumerate(doc.get("one_handles", [])):
        if not isinstance(h, dict) or "id" not in h or "legs" not in h:
            raise DiagramError("one_handles[%d] needs 'id' and 'legs'" % i)
        handles.append(OneHandle(h["id"], h["legs"]))
    comps = []
    for i, c in enumerate(doc.get("components", [])):
        if not isinstance(c, dict) or "id" not in c:
            raise DiagramError("components[%d] needs an 'id'" % i)
        events = [_event_from_dict(ev, "component %r, event %d"
                                   % (c["id"], j))
                  for j, ev in enumerate(c.get("events", []))]
        comps.append(Component(c["id"], events,
                               c.get("framing_kinks", 0)))
    return KirbyDiagram(handles, comps)


def load_diagram(path):
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def diagram_dir():
    from importlib import resources
    return resources.files("hopfbead").joinpath("data", "diagrams")


def shipped_diagrams():
    return sorted(p.name[:-5] for p in diagram_dir().iterdir()
                  if p.name.endswith(".json"))


def load_shipped(name):
    return parse_diagram(diagram_dir().joinpath(name + ".json").read_text())


def euler_counts(d):
    """(k1, k2); the handlebody has Euler characteristic 1 - k1 + k2."""
    return len(d.one_handles), len(d.components)


def insert_cancelling_pair(d):
    """A copy of d with one fresh 1-handle pierced once by one fresh
    component; a 2-deformation, so the invariant is unchanged."""
    used = {h.id for h in d.one_handles}
    n = 1
    while "h%d" % n in used:
        n += 1
    hid = "h%d" % n
    used = {c.id for c in d.components}
    n = 1
    while "c%d" % n in used:
        n += 1
    cid = "c%d" % n
    return KirbyDiagram(d.one_handles + [OneHandle(hid, 1)],
                        d.components + [Component(cid,
                                                  [("through", hid, 0, 1)])])


def delete_crossings(d):
    """The diagram with every crossing event removed (both halves)."""
    comps = [Component(c.id,
                       [ev for ev in c.events if ev[0] != "cross"],
                       c.framing_kinks)
             for c in d.components]
    return KirbyDiagram(d.one_handles, comps)


def vanishing_notes(d, snf=True):
    """Predictions that the invariant vanishes, from the diagram shape.

    Zero-leg 1-handles and isolated components force zero over every
    non-(co)semisimple bundle; an unbalanced diagram whose components all
    pierce some 1-handle forces zero over strongly non-factorizable
    bundles (pass snf=False when the bundle is not known to be one).
    """
    notes = []
    for h in d.one_handles:
        if h.legs == 0:
            notes.append("1-handle %r has no legs: factor"
                         " counit(cointegral) = 0" % h.id)
    pierced = True
    for c in d.components:
        if not any(ev[0] == "through" for ev in c.events):
            pierced = False
            if not any(ev[0] == "cross" for ev in c.events):
                notes.append("component %r is isolated: factor"
                             " integral(1) = 0" % c.id)
    k1, k2 = euler_counts(d)
    if snf and k1 != k2 and d.components and pierced:
        kind = "underfed" if k1 < k2 else "overfed"
        notes.append("k1=%d, k2=%d (%s): vanishes for strongly"
                     " non-factorizable bundles" % (k1, k2, kind))
    return notes


# -- bundles ---------------------------------------------------------------


class RibbonBundle:
    """Everything the evaluator needs about one algebra: the presentation,
    a two-sided cointegral, the integral functional, the R-matrix and a
    pivotal grouplike.

    The cointegral is renormalised so integral(cointegral) = 1 (it must
    not vanish).  When the integral is declared two-sided the pivotal
    must square to 1; that is checked at load, as is grouplikeness.
    """

    def __init__(self, alg, cointegral, integral, r, pivotal, name=None,
                 integral_two_sided=False):
        self.alg = alg
        self.name = name or alg.name
        self.integral = dict(integral)
        scale = pair(self.integral, cointegral)
        if not scale:
            raise ValueError("integral vanishes on the cointegral")
        if scale != alg.field.one:
            cointegral = cointegral.scale(scale.inverse())
        self.cointegral = cointegral
        self.r = r
        self.integral_two_sided = integral_two_sided
        if pivotal not in alg.grouplike_monomials():
            raise ValueError("pivotal %s is not grouplike"
                             % alg.mono_str(pivotal))
        self.pivotal = pivotal
        self.pivotal_inv = self._grouplike_inverse(pivotal)
        if integral_two_sided:
            sq = alg.mono_mul(pivotal, pivotal)
            if sq != ((alg.unit_mono, alg.field.one),) and \
                    list(sq) != [(alg.unit_mono, alg.field.one)]:
                raise ValueError("two-sided integral but pivotal %s does"
                                 " not square to 1" % alg.mono_str(pivotal))
        self._r_terms = None
        self._rinv_terms = None
        self._cross_index = {}
        self._handle_cache = {}

    def _grouplike_inverse(self, g):
        unit = self.alg.unit_mono
        one = self.alg.field.one
        for h in self.alg.grouplike_monomials():
            got = self.alg.mono_mul(g, h)
            if len(got) == 1 and got[0][0] == unit and got[0][1] == one:
                return h
        raise ValueError("no inverse for grouplike %s"
                         % self.alg.mono_str(g))

    def r_terms(self, sign):
        """[(slot-1 mono, slot-2 mono, coeff)] of R (sign +1) or of the
        exact inverse (S (x) id) R (sign -1)."""
        if sign == 1:
            if self._r_terms is None:
                self._r_terms = [(a, b, c)
                                 for (a, b), c in self.r.c.items()]
            return self._r_terms
        if self._rinv_terms is None:
            self._rinv_terms = [(a, b, c)
                                for (a, b), c in r_inverse(self.r).c.items()]
        return self._rinv_terms

    def cross_index(self, sign, role):
        """bead monomial -> [(far-half monomial, coeff)] for the complement
        lookup; the bead is slot 2 on an over strand, slot 1 on an under."""
        key = (sign, role)
        got = self._cross_index.get(key)
        if got is None:
            got = {}
            for a, b, c in self.r_terms(sign):
                bead, far = (b, a) if role == "over" else (a, b)
                got.setdefault(bead, []).append((far, c))
            self._cross_index[key] = got
        return got

    def handle_terms(self, legs, directions):
        """[(monomial per leg, coeff)] of the (legs-1)-fold coproduct of
        the cointegral, antipoded on the legs with direction -1."""
        key = (legs, tuple(directions))
        got = self._handle_cache.get(key)
        if got is None:
            t = iterated_coproduct(self.cointegral, legs)
            for leg in range(legs):
                if directions[leg] == -1:
                    t = t.antipode_slot(leg)
            got = list(t.c.items())
            self._handle_cache[key] = got
        return got


# -- the evaluator ---------------------------------------------------------


def _nenciu_complement(alg, mono, target):
    """The unique monomial b with mono * b = scalar * target, or None.

    Only diagonal presentations have unique single-term division: the
    group part inverts and the nilpotent mask complements (a repeated
    nilpotent would square to zero).
    """
    v1, r1 = alg.decode(mono)
    vt, rt = alg.decode(target)
    if r1 & ~rt:
        return None
    m = alg.data.m
    v = tuple((vt[a] - v1[a]) % m[a] for a in range(alg.data.s))
    return alg.encode(v, rt ^ r1)


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.ops = 0

    def spend(self, n):
        self.ops += n
        if self.limit is not None and self.ops > self.limit:
            raise BudgetExceededError(self.ops, self.limit)


def _fold_bead(alg, state, choices, far_entry, budget):
    """Multiply every state entry by every bead choice.

    choices: [(bead mono, far mono or None, coeff)]; a non-None far mono
    is appended to the pending key under far_entry = (tag, ident).
    """
    budget.spend(len(state) * len(choices))
    out = {}
    for (mono, pend), coeff in state.items():
        for bead, far, c in choices:
            cc = coeff * c
            if far is not None:
                newpend = tuple(sorted(pend + (far_entry + (far,),)))
            else:
                newpend = pend
            for pm, pc in alg.mono_mul(mono, bead):
                key = (pm, newpend)
                cur = out.get(key)
                val = cc * pc
                cur = val if cur is None else cur + val
                if cur:
                    out[key] = cur
                elif key in out:
                    del out[key]
    return out


def _pop_pending(pend, tag, ident):
    for i, entry in enumerate(pend):
        if entry[0] == tag and entry[1] == ident:
            return entry, pend[:i] + pend[i + 1:]
    return None, pend


def evaluate(diagram, bundle, budget=None):
    """The bead invariant of the diagram over the bundle, as an exact
    scalar (a polynomial when the R-matrix has formal parameters).

    ``budget`` caps the number of bead multiplications; exceeding it
    raises BudgetExceededError.
    """
    alg = bundle.alg
    field = alg.field
    budget = _Budget(budget)

    prefactor = field.one
    for h in diagram.one_handles:
        if h.legs == 0:
            prefactor = prefactor * bundle.cointegral.counit()
    if not prefactor:
        return field.zero

    # leg directions, collected across components
    legdir = {}
    for comp in diagram.components:
        for ev in comp.events:
            if ev[0] == "through":
                legdir[(ev[1], ev[2])] = ev[3]

    lam = bundle.integral
    lam_mono = next(iter(lam)) if len(lam) == 1 else None
    divisible = lam_mono is not None and isinstance(alg, NenciuAlgebra)

    # state: pending far-half beads -> coefficient
    state = {(): field.one}
    touched_h = set()
    touched_x = set()
    for comp in diagram.components:
        events = comp.bead_events()
        inner = {(alg.unit_mono, pend): c for pend, c in state.items()}
        for pos, ev in enumerate(events):
            last = pos == len(events) - 1
            if ev[0] == "kink":
                bead = bundle.pivotal if ev[1] == 1 else bundle.pivotal_inv
                inner = _fold_bead(alg, inner, [(bead, None, field.one)],
                                   None, budget)
            elif ev[0] == "through":
                _, hid, leg, _ = ev
                if hid in touched_h:
                    out = {}
                    for (mono, pend), coeff in inner.items():
                        entry, rest = _pop_pending(pend, "h", hid)
                        assert entry is not None, "lost 1-handle beads"
                        remaining = dict(entry[2])
                        bead = remaining.pop(leg)
                        if remaining:
                            rest = tuple(sorted(
                                rest + (("h", hid,
                                         tuple(sorted(remaining.items()))),)))
                        budget.spend(1)
                        for pm, pc in alg.mono_mul(mono, bead):
                            key = (pm, rest)
                            cur = out.get(key)
                            val = coeff * pc
                            cur = val if cur is None else cur + val
                            if cur:
                                out[key] = cur
                            elif key in out:
                                del out[key]
                    inner = out
                else:
                    touched_h.add(hid)
                    h = diagram.handle(hid)
                    dirs = [legdir[(hid, i)] for i in range(h.legs)]
                    choices = []
                    for monos, c in bundle.handle_terms(h.legs, dirs):
                        rest = tuple((i, m) for i, m in enumerate(monos)
                                     if i != leg)
                        choices.append((monos[leg], rest or None, c))
                    inner = _fold_bead(alg, inner, choices, ("h", hid),
                                       budget)
            else:
                _, label, role, sign = ev
                if label in touched_x:
                    out = {}
                    for (mono, pend), coeff in inner.items():
                        entry, rest = _pop_pending(pend, "x", label)
                        assert entry is not None, "lost crossing bead"
                        budget.spend(1)
                        for pm, pc in alg.mono_mul(mono, entry[2]):
                            key = (pm, rest)
                            cur = out.get(key)
                            val = coeff * pc
                            cur = val if cur is None else cur + val
                            if cur:
                                out[key] = cur
                            elif key in out:
                                del out[key]
                    inner = out
                else:
                    touched_x.add(label)
                    if last and divisible:
                        # the closing bead is forced: look it up instead
                        # of enumerating the whole R-matrix
                        index = bundle.cross_index(sign, role)
                        out = {}
                        for (mono, pend), coeff in inner.items():
                            bead = _nenciu_complement(alg, mono, lam_mono)
                            if bead is None:
                                continue
                            hits = index.get(bead)
                            if not hits:
                                continue
                            budget.spend(len(hits))
                            prods = alg.mono_mul(mono, bead)
                            for far, c in hits:
                                newpend = tuple(sorted(
                                    pend + (("x", label, far),)))
                                for pm, pc in prods:
                                    key = (pm, newpend)
                                    cur = out.get(key)
                                    val = coeff * c * pc
                                    cur = val if cur is None else cur + val
                                    if cur:
                                        out[key] = cur
                                    elif key in out:
                                        del out[key]
                        inner = out
                    else:
                        choices = []
                        for a, b, c in bundle.r_terms(sign):
                            bead, far = (b, a) if role == "over" else (a, b)
                            choices.append((bead, far, c))
                        inner = _fold_bead(alg, inner, choices,
                                           ("x", label), budget)
        # close the component with the integral
        nxt = {}
        for (mono, pend), coeff in inner.items():
            val = lam.get(mono)
            if val:
                cur = nxt.get(pend)
                v = coeff * val
                cur = v if cur is None else cur + v
                if cur:
                    nxt[pend] = cur
                elif pend in nxt:
                    del nxt[pend]
        state = nxt
        if not state:
            return field.zero
    assert set(state) <= {()}, "unresolved far-half beads"
    return prefactor * state.get((), field.zero)


def conjecture_experiment(diagram, bundles, budget=None):
    """Evaluate over the two factors and their biproduct; the difference
    J_UH - J_U * J_H is reported, never asserted.

    bundles: {"U": ..., "H": ..., "UH": ...} built over one shared field.
    """
    ju = evaluate(diagram, bundles["U"], budget)
    jh = evaluate(diagram, bundles["H"], budget)
    juh = evaluate(diagram, bundles["UH"], budget)
    return {"J_U": ju, "J_H": jh, "J_UH": juh,
            "difference": juh - ju * jh}
