"""Almost split sequences in the morphism category H(Gprj-Λ) and the A_n knitting.

Objects are maps (X -> Y) of Gorenstein projectives.  For a catalog
non-projective A with Ω(A) ↪ P = P(A) and Q = P(Ω(A)) the objects met by
the templates are (0 A), (A = A), (A 0), (ΩA ↪ P), (P ↠ A) and the
composite (Q -> P); the projective-injective ones are (0 P_v), (P_v = P_v)
and (P_v 0).
"""

from __future__ import annotations

from ..errors import NotSelfInjective
from ..gpclass import is_self_injective
from ..library import cyclic_nakayama
from ..presentation import QuadraticPresentation
from ..repcalc import generic
from ..repcalc.modules import compose, identity_map, syzygy_sequence, zero_module
from ..repcalc.morph import MorphObject
from .gprj import Names, ass_gprj, names
from .quiver import AlmostSplitSeq, ARQuiver, HPair, ObjectDescriptor, knit
from .sub import assemble, id_obj, morph, zero_obj


class HNames:
    """Descriptors of the H-objects attached to a catalog module A."""

    def __init__(self, nm: Names):
        self.nm = nm

    def zero_top(self, a: str) -> ObjectDescriptor:
        return HPair("", a, "zero")

    def zero_bottom(self, a: str) -> ObjectDescriptor:
        return HPair(a, "", "zero")

    def ident(self, a: str) -> ObjectDescriptor:
        return HPair(a, a, "identity")

    def mono(self, a: str) -> ObjectDescriptor:
        return HPair(self.nm.omega(a), self.nm.cover(a), "inclusion")

    def cover(self, a: str) -> ObjectDescriptor:
        return HPair(self.nm.cover(a), a, "cover")

    def composite(self, a: str) -> ObjectDescriptor:
        return HPair(self.nm.cover(self.nm.omega(a)), self.nm.cover(a), "composite", via=a)


def _quot(m) -> MorphObject:
    """(M 0)."""
    return MorphObject(m, zero_module(m.pres), name=f"{m.name}⊕0")


def _obj(x, y, f) -> MorphObject:
    return MorphObject(x, y, f)


def h_indecomposables(pres: QuadraticPresentation, seed: int = 0) -> list[ObjectDescriptor]:
    """Template-reachable indecomposables of H(Gprj-Λ) with the projective-injectives."""
    nm = names(pres, seed)
    h = HNames(nm)
    out = []
    for p in nm.projectives:
        out += [HPair("", p, "zero"), HPair(p, p, "identity"), HPair(p, "", "zero")]
    for a in nm.nonprojectives:
        out += [h.zero_top(a), h.ident(a), h.zero_bottom(a), h.mono(a), h.cover(a), h.composite(a)]
    return out


def materialize_h(pres: QuadraticPresentation, d: ObjectDescriptor, seed: int = 0) -> MorphObject:
    nm = names(pres, seed)
    if d.shape == "zero":
        return zero_obj(nm.module(d.bottom)) if not d.top else _quot(nm.module(d.top))
    if d.shape == "identity":
        return id_obj(nm.module(d.top))
    if d.shape == "inclusion":
        _, i0, p, _ = syzygy_sequence(nm.module(nm.sigma(d.top)))
        return _obj(i0.source, p, i0)
    if d.shape == "cover":
        _, _, p, p0 = syzygy_sequence(nm.module(d.bottom))
        return _obj(p, p0.target, p0)
    if d.shape == "composite":
        om, i0, p, _ = syzygy_sequence(nm.module(d.via))
        _, _, q, p1 = syzygy_sequence(om)
        return _obj(q, p, compose(i0, p1))
    raise ValueError(f"cannot materialize {d}")


def h_ass_templates(pres: QuadraticPresentation, delta: AlmostSplitSeq, which: str, seed: int = 0) -> AlmostSplitSeq:
    """0 -> (A=A) -> (A ↪ B) -> (0 C) -> 0 or 0 -> (A 0) -> (B ↠ C) -> (C=C) -> 0."""
    f, g = delta.maps
    a, b, c = f.source, f.target, g.target
    da, db, dc = delta.left.bottom, delta.middles[0].bottom, delta.right.bottom
    if which == "end_at_0C":
        left, mid, right = id_obj(a), _obj(a, b, f), zero_obj(c)
        phi = morph(left, mid, identity_map(a), f)
        psi = morph(mid, right, None, g)
        descr = (HPair(da, da, "identity"), [HPair(da, db, "inclusion")], HPair("", dc, "zero"))
        return assemble(which, descr, left, [mid], right, [phi], [psi])
    if which == "end_at_CC":
        left, mid, right = _quot(a), _obj(b, c, g), id_obj(c)
        phi = morph(left, mid, f, None)
        psi = morph(mid, right, g, identity_map(c))
        descr = (HPair(da, "", "zero"), [HPair(db, dc, "cover")], HPair(dc, dc, "identity"))
        return assemble(which, descr, left, [mid], right, [phi], [psi])
    raise ValueError(f"unknown template {which!r}")


def _resolution(nm: Names, a: str):
    om, i0, p, p0 = syzygy_sequence(nm.module(a))
    _, _, q, p1 = syzygy_sequence(om)
    return om, i0, p, p0, q, p1


def h_ass_monic(pres: QuadraticPresentation, a: str, seed: int = 0) -> AlmostSplitSeq:
    """0 -> (Q ↠ ΩA) -> (Q -> P) ⊕ (ΩA = ΩA) -> (ΩA ↪ P) -> 0."""
    nm = names(pres, seed)
    h = HNames(nm)
    om, i0, p, _, q, p1 = _resolution(nm, a)
    left = _obj(q, om, p1)
    comp_obj = _obj(q, p, compose(i0, p1))
    omom = id_obj(om)
    right = _obj(om, p, i0)
    phis = [morph(left, comp_obj, identity_map(q), i0), morph(left, omom, p1, identity_map(om))]
    psis = [morph(comp_obj, right, p1, identity_map(p)), morph(omom, right, identity_map(om).scaled(-1), i0.scaled(-1))]
    w = nm.omega(a)
    descr = (h.cover(w), [h.composite(a), h.ident(w)], h.mono(a))
    return assemble("monic", descr, left, [comp_obj, omom], right, phis, psis)


def h_ass_selfinjective(pres: QuadraticPresentation, m: str, which: str, seed: int = 0) -> AlmostSplitSeq:
    """The four sequences in H(Λ) attached to M for self-injective Λ, with P⁰ = P(M), P¹ = P(ΩM)."""
    if not is_self_injective(pres):
        raise NotSelfInjective(pres.name or "presentation")
    nm = names(pres, seed)
    h = HNames(nm)
    om, i0, p0m, p0, p1m, p1 = _resolution(nm, m)
    w = nm.omega(m)
    P0, P1 = nm.cover(m), nm.cover(w)
    mod = p0.target
    one = identity_map
    if which == "a":
        left = _obj(om, p0m, i0)
        parts = [zero_obj(mod), id_obj(p0m), _quot(om)]
        right = _obj(p0m, mod, p0)
        phis = [morph(left, parts[0], None, p0), morph(left, parts[1], i0, one(p0m)), morph(left, parts[2], one(om), None)]
        psis = [
            morph(parts[0], right, None, one(mod).scaled(-1)),
            morph(parts[1], right, one(p0m), p0),
            morph(parts[2], right, i0.scaled(-1), None),
        ]
        descr = (h.mono(m), [h.zero_top(m), HPair(P0, P0, "identity"), h.zero_bottom(w)], h.cover(m))
    elif which == "b":
        left = _obj(p1m, p0m, compose(i0, p1))
        parts = [_quot(p1m), _obj(om, p0m, i0)]
        right = _quot(om)
        phis = [morph(left, parts[0], one(p1m), None), morph(left, parts[1], p1, one(p0m))]
        psis = [morph(parts[0], right, p1, None), morph(parts[1], right, one(om).scaled(-1), None)]
        descr = (h.composite(m), [HPair(P1, "", "zero"), h.mono(m)], h.zero_bottom(w))
    elif which == "c":
        left = zero_obj(om)
        parts = [zero_obj(p0m), _obj(p1m, om, p1)]
        right = _obj(p1m, p0m, compose(i0, p1))
        phis = [morph(left, parts[0], None, i0), morph(left, parts[1], None, one(om))]
        psis = [morph(parts[0], right, None, one(p0m)), morph(parts[1], right, one(p1m).scaled(-1), i0.scaled(-1))]
        descr = (h.zero_top(w), [HPair("", P0, "zero"), h.cover(w)], h.composite(m))
    elif which == "e":
        left = zero_obj(p0m)
        mid = _obj(p1m, p0m, compose(i0, p1))
        right = _quot(p1m)
        phis = [morph(left, mid, None, one(p0m))]
        psis = [morph(mid, right, one(p1m), None)]
        descr = (HPair("", P0, "zero"), [h.composite(m)], HPair(P1, "", "zero"))
        return assemble(which, descr, left, [mid], right, phis, psis)
    else:
        raise ValueError(f"unknown shape {which!r}")
    return assemble(which, descr, left, parts, right, phis, psis)


SELFINJ_SHAPES = ("a", "b", "c", "e")


def h_sequences(pres: QuadraticPresentation, seed: int = 0) -> list[AlmostSplitSeq]:
    """Every template instance over the catalog non-projectives."""
    nm = names(pres, seed)
    selfinj = is_self_injective(pres)
    out = []
    for a in nm.nonprojectives:
        delta = ass_gprj(pres, a, seed, verify=False)
        out += [h_ass_templates(pres, delta, w, seed) for w in ("end_at_0C", "end_at_CC")]
        out.append(h_ass_monic(pres, a, seed))
        if selfinj:
            out += [h_ass_selfinjective(pres, a, w, seed) for w in SELFINJ_SHAPES]
    return out


def _projective_injective(d: ObjectDescriptor) -> bool:
    """(P = P), (0 P) and (P 0) for an indecomposable projective P."""
    ends = [x for x in (d.top, d.bottom) if x]
    return d.shape in ("zero", "identity") and all(not x.endswith("Λ") for x in ends)


def _phi_vanishes(d: ObjectDescriptor) -> bool:
    """Objects sent to 0 by X -> Y ↦ Coker Hom(-, X) -> Hom(-, Y): (M = M) and (M 0)."""
    return d.shape == "identity" or (d.shape == "zero" and not d.bottom)


def h_ar_quiver(pres: QuadraticPresentation, seed: int = 0) -> ARQuiver:
    nm = names(pres, seed)
    q = knit(h_sequences(pres, seed), name=f"H {pres.name}".strip())
    for p in nm.projectives:
        q.add_vertex(HPair(p, p, "identity"))
        q.projective |= {HPair("", p, "zero"), HPair(p, p, "identity")}
        q.injective |= {HPair(p, p, "identity"), HPair(p, "", "zero")}
    return q


def h_ar_quiver_An(n: int, seed: int = 0) -> dict[str, ARQuiver]:
    """Full, ss and Auslander-stable quivers for A_n = kZ_n/I²."""
    pres = cyclic_nakayama(n)
    full = h_ar_quiver(pres, seed)
    full.name = f"Gamma_H(A_{n})"
    ss = full.subquiver([x for x in full.vertices if not _projective_injective(x)], name=f"Gamma_H^ss(A_{n})")
    keep = [x for x in full.vertices if not _phi_vanishes(x) and not (x.shape == "zero" and _projective_injective(x))]
    aus = full.subquiver(keep, name=f"Gamma_B^s(A_{n})")
    n_cycle = len(aus.vertices)
    aus.notes.append(f"single oriented cycle on {n_cycle} vertices, so of type tilde A_{n_cycle - 1}; the name tilde A_{n_cycle} would need {n_cycle + 1}")
    return {"full": full, "ss": ss, "auslander_stable": aus}


def h_catalog_objects(pres: QuadraticPresentation, seed: int = 0) -> list[MorphObject]:
    return [materialize_h(pres, d, seed) for d in h_indecomposables(pres, seed)]


def check_monic(pres: QuadraticPresentation, a: str, seed: int = 0, catalog=None) -> list[str]:
    """Failures of the monic template at A: exactness, non-split, right almost split, local middle."""
    seq = h_ass_monic(pres, a, seed)
    catalog = h_catalog_objects(pres, seed) if catalog is None else catalog
    res = seq.check(catalog, seed)
    fails = list(res.failures)
    if not generic.is_local(seq.parts[0]):
        fails.append("(Q -> P) has non-local endomorphism ring")
    return fails
