"""Almost split sequences and the AR quiver of Gprj-Λ."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import OracleDisagreement
from ..gpclass import GpCatalog, GpEntry, gp_indecomposables
from ..presentation import QuadraticPresentation
from ..repcalc import generic
from ..repcalc.modules import Representation, syzygy_sequence
from .quiver import AlmostSplitSeq, ARQuiver, Mod


@dataclass
class Names:
    """Symbolic view of a catalog: names, Ω, its inverse Σ and projective covers."""

    cat: GpCatalog

    def of(self, e: GpEntry) -> str:
        return f"{e.arrow}Λ"

    def entry(self, name: str) -> GpEntry:
        return self.cat.entry(name.removesuffix("Λ"))

    @property
    def nonprojectives(self) -> list[str]:
        return [self.of(e) for e in self.cat.nonprojectives]

    @property
    def projectives(self) -> list[str]:
        return [f"P{v}" for v in self.cat.projectives]

    def omega(self, name: str) -> str:
        return f"{self.cat.successor(self.entry(name).arrow)}Λ"

    def sigma(self, name: str) -> str:
        return f"{self.cat.predecessor(self.entry(name).arrow)}Λ"

    def cover(self, name: str) -> str:
        """P(αΛ) = P_t(α)."""
        return f"P{self.cat.pres.arrow(self.entry(name).arrow).target}"

    def module(self, name: str) -> Representation:
        if name.endswith("Λ"):
            return self.entry(name).module
        return self.cat.projective_modules[name[1:]]


def names(pres: QuadraticPresentation, seed: int = 0) -> Names:
    return Names(gp_indecomposables(pres, seed))


def ass_gprj(pres: QuadraticPresentation, g: str | GpEntry, seed: int = 0, verify: bool = True) -> AlmostSplitSeq:
    """0 -> Ω(G) -> P(G) -> G -> 0, checked against the catalog."""
    nm = names(pres, seed)
    e = g if isinstance(g, GpEntry) else nm.entry(g)
    om, inc, p, epi = syzygy_sequence(e.module)
    gname = nm.of(e)
    seq = AlmostSplitSeq(
        Mod(nm.omega(gname)),
        (Mod(nm.cover(gname)),),
        Mod(gname),
        "gprj",
        terms=(om, p, e.module),
        maps=(inc, epi),
        parts=(p,),
    )
    if verify:
        res = seq.check(nm.cat.modules(), seed)
        if not res.ok:
            raise OracleDisagreement(f"{seq.describe()}: {', '.join(res.failures)}")
    return seq


def ar_quiver_gprj(pres: QuadraticPresentation, seed: int = 0) -> ARQuiver:
    """Gabriel quiver of the Cohen-Macaulay Auslander algebra, arrows from rad/rad²."""
    nm = names(pres, seed)
    labels = nm.projectives + nm.nonprojectives
    mods = nm.cat.modules()
    table = generic.HomTable(mods)
    q = ARQuiver(name=f"Gprj {pres.name}".strip())
    verts = [Mod(x) for x in labels]
    q.vertices = list(verts)
    for i in range(len(mods)):
        for j in range(len(mods)):
            m = table.irreducible(i, j)
            if m:
                q.arrows[(verts[i], verts[j])] = m
    for x in nm.nonprojectives:
        q.tau[Mod(x)] = Mod(nm.omega(x))
    q.projective = {Mod(x) for x in nm.projectives}
    q.injective = set(q.projective)
    q.notes.append(f"dim End = {table.end_dim()}")
    return q


def gprj_end_dim(pres: QuadraticPresentation, seed: int = 0) -> int:
    return generic.HomTable(gp_indecomposables(pres, seed).modules()).end_dim()
