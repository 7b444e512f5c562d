"""The monomorphism category S(Gprj-Λ): templates, indecomposables, AR quivers.

Objects are monomorphisms (X ↪ Y) in Gprj-Λ with Gorenstein projective
cokernel, stored as MorphObjects.  Indecomposables come in three families
per non-projective G, namely (0 G), (G = G) and (ΩG ↪ P(G)), plus (0 P_v)
and (P_v = P_v).
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from ..errors import SinkUnsupported, TemplatePreconditionFailed
from ..gpclass import SyzygyClass, gp_indecomposables, syzygy_classes
from ..presentation import QuadraticPresentation
from ..repcalc import generic
from ..repcalc.modules import (
    ModuleMap,
    Representation,
    identity_map,
    is_projective,
    path_ideal_module,
    syzygy_sequence,
    zero_map,
    zero_module,
)
from ..repcalc.morph import ChainMap, MorphObject, chain_direct_sum
from .gprj import Names, ass_gprj, names
from .quiver import AlmostSplitSeq, ARQuiver, ObjectDescriptor, Sub0, SubId, SubMono, knit


def morph(x: MorphObject, y: MorphObject, top: ModuleMap | None, bottom: ModuleMap | None) -> ChainMap:
    """A square (top, bottom) from x to y; None means the zero map."""
    top = top if top is not None else zero_map(x.A, y.A)
    bottom = bottom if bottom is not None else zero_map(x.B, y.B)
    return ChainMap(x, y, [top, bottom])


def assemble(
    template: str,
    descr: tuple[ObjectDescriptor, Sequence[ObjectDescriptor], ObjectDescriptor],
    left: MorphObject,
    parts: Sequence[MorphObject],
    right: MorphObject,
    phis: Sequence[ChainMap],
    psis: Sequence[ChainMap],
) -> AlmostSplitSeq:
    """Build f = Σ ι_k φ_k and g = Σ ψ_k π_k through the direct sum of ``parts``."""
    mid, incs, projs = chain_direct_sum(parts)
    f = None
    for i, phi in zip(incs, phis):
        t = generic.comp(i, phi)
        f = t if f is None else f + t
    g = None
    for p, psi in zip(projs, psis):
        t = generic.comp(psi, p)
        g = t if g is None else g + t
    return AlmostSplitSeq(
        descr[0], tuple(descr[1]), descr[2], template, terms=(left, mid, right), maps=(f, g), parts=tuple(parts)
    )


def zero_obj(m: Representation) -> MorphObject:
    """(0 M)."""
    return MorphObject(zero_module(m.pres), m, name=f"0⊕{m.name}")


def id_obj(m: Representation) -> MorphObject:
    return MorphObject(m, m, identity_map(m), name=f"{m.name}={m.name}")


def mono_obj(inc: ModuleMap) -> MorphObject:
    return MorphObject(inc.source, inc.target, inc, name=f"{inc.source.name}↪{inc.target.name}")


def _split(delta: AlmostSplitSeq):
    if delta.maps is None or len(delta.middles) != 1:
        raise TemplatePreconditionFailed("templates need a materialized sequence with one middle term")
    f, g = delta.maps
    b = delta.terms[1]
    if not is_projective(b):
        raise TemplatePreconditionFailed("the middle term must be projective")
    return f, g


def sub_ass_template(pres: QuadraticPresentation, delta: AlmostSplitSeq, which: str) -> AlmostSplitSeq:
    """Instantiate one of the three S-templates for δ: 0 -> A -f-> B -g-> C -> 0 in Gprj.

    Here B = P(C) is projective, so the injective envelope of A is f itself
    and the projective cover of C is g.
    """
    f, g = _split(delta)
    a, b, c = f.source, f.target, g.target
    da, db, dc = delta.left.bottom, delta.middles[0].bottom, delta.right.bottom
    if which == "end_at_0C":
        left, mid, right = id_obj(a), mono_obj(f), zero_obj(c)
        phi = morph(left, mid, identity_map(a), f)
        psi = morph(mid, right, None, g)
        return assemble(which, (SubId(da), [SubMono(da, db)], Sub0(dc)), left, [mid], right, [phi], [psi])
    if which == "end_at_CC":
        left, pp, zc, right = mono_obj(f), id_obj(b), zero_obj(c), id_obj(c)
        phis = [morph(left, pp, f, identity_map(b)), morph(left, zc, None, g.scaled(-1))]
        psis = [morph(pp, right, g, g), morph(zc, right, None, identity_map(c))]
        return assemble(which, (SubMono(da, db), [SubId(db), Sub0(dc)], SubId(dc)), left, [pp, zc], right, phis, psis)
    if which == "start_at_0A":
        left, aa, zp, right = zero_obj(a), id_obj(a), zero_obj(b), mono_obj(f)
        phis = [morph(left, aa, None, identity_map(a).scaled(-1)), morph(left, zp, None, f)]
        psis = [morph(aa, right, identity_map(a), f), morph(zp, right, None, identity_map(b))]
        return assemble(which, (Sub0(da), [SubId(da), Sub0(db)], SubMono(da, db)), left, [aa, zp], right, phis, psis)
    raise ValueError(f"unknown template {which!r}")


SUB_TEMPLATES = ("end_at_0C", "end_at_CC", "start_at_0A")


def sub_indecomposables(pres: QuadraticPresentation, seed: int = 0) -> list[ObjectDescriptor]:
    nm = names(pres, seed)
    out = []
    for p in nm.projectives:
        out += [Sub0(p), SubId(p)]
    for g in nm.nonprojectives:
        out += [Sub0(g), SubId(g), SubMono(nm.omega(g), nm.cover(g))]
    return out


def _sub_mono_for(nm: Names, d: ObjectDescriptor) -> str:
    """The G with d = (ΩG ↪ P(G))."""
    return nm.sigma(d.top)


def materialize_sub(pres: QuadraticPresentation, d: ObjectDescriptor, seed: int = 0) -> MorphObject:
    nm = names(pres, seed)
    if d.kind == "sub0":
        return zero_obj(nm.module(d.bottom))
    if d.kind == "subid":
        return id_obj(nm.module(d.bottom))
    if d.kind == "submono":
        g = nm.module(_sub_mono_for(nm, d))
        _, inc, _, _ = syzygy_sequence(g)
        return mono_obj(inc)
    raise ValueError(f"{d} is not an object of the monomorphism category")


def _class_sequences(pres: QuadraticPresentation, members: Sequence[str], seed: int) -> list[AlmostSplitSeq]:
    out = []
    for g in members:
        delta = ass_gprj(pres, g, seed, verify=False)
        out += [sub_ass_template(pres, delta, w) for w in SUB_TEMPLATES]
    return out


def sub_sequences(pres: QuadraticPresentation, seed: int = 0) -> list[AlmostSplitSeq]:
    return _class_sequences(pres, names(pres, seed).nonprojectives, seed)


def _stable_vertices(nm: Names, members: Sequence[str]) -> list[ObjectDescriptor]:
    out = []
    for x in members:
        out += [Sub0(x), SubId(x), SubMono(nm.omega(x), nm.cover(x))]
    return out


def sub_stable_component(pres: QuadraticPresentation, cls: SyzygyClass, seed: int = 0) -> ARQuiver:
    """Stable AR component of S(Gprj-Λ) attached to one syzygy class.

    With K^{-1} = G and K^i = Ω^{i+1} G, the arrows are
    0K^i -> K^iK^i -> (K^i ↪ P^i) -> 0K^{i-1}.
    """
    nm = names(pres, seed)
    members = [nm.of(e) for e in cls.members]
    q = knit(_class_sequences(pres, members, seed), name=f"S-stable class {cls.component}")
    keep = _stable_vertices(nm, members)
    out = q.subquiver(keep)
    out.vertices = [x for x in keep]
    return out


def sub_stable_components(pres: QuadraticPresentation, seed: int = 0) -> list[ARQuiver]:
    return [sub_stable_component(pres, c, seed) for c in syzygy_classes(pres, seed).classes]


def _sink_arrows(pres: QuadraticPresentation, nm: Names) -> tuple[list[tuple[str, str]], list[str]]:
    """Arrows (0 P_w) -> (0 P_v), one per projective summand αΛ ≅ P_w of rad P_v.

    Summands that are neither perfect nor projective need a Gorenstein
    projective approximation; those vertices are reported instead.
    """
    perfect = {e.arrow for e in nm.cat.nonprojectives}
    arrows, unsupported = [], []
    for a in pres.arrows:
        if a.name in perfect:
            continue
        m = path_ideal_module(pres, a.name)
        if is_projective(m):
            arrows.append((f"P{a.target}", f"P{a.source}"))
        else:
            unsupported.append(a.name)
    return arrows, unsupported


def sub_full_ar_quiver(pres: QuadraticPresentation, seed: int = 0, strict: bool = False) -> ARQuiver:
    nm = names(pres, seed)
    seqs = sub_sequences(pres, seed)
    extra = []
    for p in nm.projectives:
        extra += [Sub0(p), SubId(p)]
    q = knit(seqs, extra, name=f"S(Gprj) {pres.name}".strip())
    arrows, unsupported = _sink_arrows(pres, nm)
    for (w, v), m in Counter(arrows).items():
        q.add_arrow(Sub0(w), Sub0(v), m)
        q.add_arrow(SubId(w), SubId(v), m)
    # (0 P) -> (P P) is irreducible unless it factors through some (K ↪ P)
    covers = {nm.cover(g) for g in nm.nonprojectives}
    for p in nm.projectives:
        if p not in covers:
            q.add_arrow(Sub0(p), SubId(p))
    for a in unsupported:
        src = pres.arrow(a).source
        msg = f"sink map into 0⊕P{src} needs an approximation of {a}Λ; arrows omitted"
        if strict:
            raise SinkUnsupported(msg)
        q.notes.append(msg)
    q.projective = {x for p in nm.projectives for x in (Sub0(p), SubId(p))}
    q.injective = set(q.projective)
    return q


def sub_ar_quiver_oracle(pres: QuadraticPresentation, seed: int = 0) -> ARQuiver:
    """Irreducible maps among the S-indecomposables from rad/rad² (no templates)."""
    descr = sub_indecomposables(pres, seed)
    objs = [materialize_sub(pres, d, seed) for d in descr]
    table = generic.HomTable(objs)
    q = ARQuiver(name=f"S(Gprj) oracle {pres.name}".strip(), vertices=list(descr))
    for i in range(len(objs)):
        for j in range(len(objs)):
            m = table.irreducible(i, j)
            if m:
                q.arrows[(descr[i], descr[j])] = m
    return q
