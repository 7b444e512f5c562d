"""Combinatorial classification of Gorenstein projectives, checked by the oracle.

For a quadratic monomial algebra the non-projective indecomposable
Gorenstein projectives are the ideals αΛ for the arrows α lying on a
connected component of the relation quiver that is a single oriented
cycle.  Everything reported here is cross-checked on explicit modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from .errors import BoundExceeded, ExtNonVanishing, NonPeriodic, OracleDisagreement
from .presentation import QuadraticPresentation, enumerate_nonzero_paths
from .repcalc import generic
from .repcalc.homological import (
    GpCertificate,
    gp_certificate_periodic,
    is_injective,
    stable_hom_dim,
)
from .repcalc.modules import (
    Representation,
    is_projective,
    path_ideal_module,
    projective,
    projective_cover,
)


@dataclass(frozen=True)
class RelationQuiver:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def successors(self, a: str) -> list[str]:
        return [y for x, y in self.edges if x == a]

    def predecessors(self, a: str) -> list[str]:
        return [x for x, y in self.edges if y == a]


@dataclass(frozen=True)
class PerfectComponent:
    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def successor(self, a: str) -> str:
        i = self.arrows.index(a)
        return self.arrows[(i + 1) % len(self.arrows)]

    def predecessor(self, a: str) -> str:
        i = self.arrows.index(a)
        return self.arrows[(i - 1) % len(self.arrows)]


def relation_quiver(pres: QuadraticPresentation) -> RelationQuiver:
    names = tuple(a.name for a in pres.arrows)
    order = {n: i for i, n in enumerate(names)}
    edges = tuple(sorted(pres.relations, key=lambda e: (order[e[0]], order[e[1]])))
    return RelationQuiver(names, edges)


def perfect_components(rq: RelationQuiver) -> list[PerfectComponent]:
    """Connected components of R in which every vertex has in- and out-degree 1."""
    succ: dict[str, list[str]] = {v: [] for v in rq.vertices}
    pred: dict[str, list[str]] = {v: [] for v in rq.vertices}
    for x, y in rq.edges:
        succ[x].append(y)
        pred[y].append(x)
    seen: set[str] = set()
    out = []
    for start in rq.vertices:
        if start in seen:
            continue
        comp, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in succ[v] + pred[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        if not all(len(succ[v]) == 1 and len(pred[v]) == 1 for v in comp):
            continue
        cyc = [start]
        nxt = succ[start][0]
        while nxt != start:
            cyc.append(nxt)
            nxt = succ[nxt][0]
        out.append(PerfectComponent(tuple(cyc)))
    return out


def perfect_arrows(pres: QuadraticPresentation) -> dict[str, tuple[int, int]]:
    """arrow -> (component id, index in cycle)."""
    out = {}
    for cid, comp in enumerate(perfect_components(relation_quiver(pres))):
        for i, a in enumerate(comp.arrows):
            out[a] = (cid, i)
    return out


@dataclass
class GpEntry:
    arrow: str
    module: Representation
    component: int
    index: int
    certificate: GpCertificate


@dataclass
class GpCatalog:
    pres: QuadraticPresentation
    projectives: list[str]
    projective_modules: dict[str, Representation]
    nonprojectives: list[GpEntry]
    components: list[PerfectComponent]
    rejected: dict[str, str] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.projectives) + len(self.nonprojectives)

    def entry(self, arrow: str) -> GpEntry:
        for e in self.nonprojectives:
            if e.arrow == arrow:
                return e
        raise KeyError(arrow)

    def modules(self) -> list[Representation]:
        return [self.projective_modules[v] for v in self.projectives] + [e.module for e in self.nonprojectives]

    def successor(self, arrow: str) -> str:
        e = self.entry(arrow)
        return self.components[e.component].successor(arrow)

    def predecessor(self, arrow: str) -> str:
        e = self.entry(arrow)
        return self.components[e.component].predecessor(arrow)


def _dimension_cap(pres: QuadraticPresentation) -> int:
    return 4 * pres.dimension


def _certify(m: Representation, bound: int, seed: int) -> tuple[GpCertificate | None, str]:
    try:
        return gp_certificate_periodic(m, bound, seed, dim_cap=_dimension_cap(m.pres)), ""
    except (NonPeriodic, ExtNonVanishing, BoundExceeded) as exc:
        return None, f"{type(exc).__name__}: {exc}"


@lru_cache(maxsize=256)
def gp_indecomposables(
    pres: QuadraticPresentation, seed: int = 0, bound: int | None = None, check_nonperfect: bool = True
) -> GpCatalog:
    enumerate_nonzero_paths(pres)  # raises InfiniteDimensional
    bound = bound if bound is not None else max(2 * len(pres.arrows), 1)
    comps = perfect_components(relation_quiver(pres))
    perfect = {a: (cid, i) for cid, c in enumerate(comps) for i, a in enumerate(c.arrows)}
    projs = list(pres.vertices)
    pmods = {v: projective(pres, v) for v in projs}
    entries = []
    rejected = {}
    for cid, comp in enumerate(comps):
        for i, a in enumerate(comp.arrows):
            m = path_ideal_module(pres, a)
            cert, why = _certify(m, bound, seed)
            if cert is None:
                raise OracleDisagreement(f"perfect arrow {a} fails certification ({why})")
            if cert.period != comp.length:
                raise OracleDisagreement(f"{a}Λ has period {cert.period}, component length {comp.length}")
            succ = path_ideal_module(pres, comp.successor(a))
            if not generic.is_isomorphic(cert.syzygies[1], succ, seed):
                raise OracleDisagreement(f"Ω({a}Λ) is not isomorphic to {comp.successor(a)}Λ")
            entries.append(GpEntry(a, m, cid, i, cert))
    if check_nonperfect:
        for arr in pres.arrows:
            if arr.name in perfect:
                continue
            m = path_ideal_module(pres, arr.name)
            if is_projective(m):
                rejected[arr.name] = "projective"
                continue
            cert, why = _certify(m, bound, seed)
            if cert is not None:
                raise OracleDisagreement(f"non-perfect arrow {arr.name}: {arr.name}Λ certifies")
            rejected[arr.name] = why
    _check_pairwise_distinct(entries, seed)
    return GpCatalog(pres, projs, pmods, entries, comps, rejected)


def _check_pairwise_distinct(entries: list[GpEntry], seed: int) -> None:
    for i, e in enumerate(entries):
        for f in entries[i + 1 :]:
            if e.module.dims != f.module.dims:
                continue
            if generic.local_iso_test(e.module, f.module).status == "yes":
                raise OracleDisagreement(f"{e.arrow}Λ ≅ {f.arrow}Λ")


@dataclass
class SyzygyClass:
    component: int
    period: int
    members: list[GpEntry]


@dataclass
class SyzygyClasses:
    classes: list[SyzygyClass]


def syzygy_classes(pres: QuadraticPresentation, seed: int = 0) -> SyzygyClasses:
    cat = gp_indecomposables(pres, seed)
    out = []
    for cid, comp in enumerate(cat.components):
        members = [e for e in cat.nonprojectives if e.component == cid]
        members.sort(key=lambda e: e.index)
        for e in members:
            nxt = members[(e.index + 1) % len(members)]
            if not generic.is_isomorphic(e.certificate.syzygies[1], nxt.module, seed):
                raise OracleDisagreement(f"Ω({e.arrow}Λ) ≇ {nxt.arrow}Λ")
        out.append(SyzygyClass(cid, comp.length, members))
    return SyzygyClasses(out)


def stable_hom_matrix(cat: GpCatalog) -> list[list[int]]:
    mods = [e.module for e in cat.nonprojectives]
    return [[stable_hom_dim(m, n) for n in mods] for m in mods]


@dataclass
class OmegaGReport:
    is_omega_g: bool
    stable_hom: list[list[int]]
    right_almost_split: dict[str, bool]
    failures: list[str]


def gprj_objects(cat: GpCatalog) -> list[Representation]:
    return cat.modules()


def verify_omega_g(pres: QuadraticPresentation, seed: int = 0) -> OmegaGReport:
    cat = gp_indecomposables(pres, seed)
    mat = stable_hom_matrix(cat)
    failures = []
    n = len(mat)
    for i in range(n):
        for j in range(n):
            want = 1 if i == j else 0
            if mat[i][j] != want:
                a, b = cat.nonprojectives[i].arrow, cat.nonprojectives[j].arrow
                failures.append(f"stable Hom({a}Λ, {b}Λ) has dimension {mat[i][j]}")
    catalog = gprj_objects(cat)
    ras = {}
    for e in cat.nonprojectives:
        _, epi = projective_cover(e.module)
        ok = generic.is_right_almost_split(epi, catalog, seed)
        ras[e.arrow] = ok
        if not ok:
            failures.append(f"the cover of {e.arrow}Λ is not right almost split in Gprj")
    return OmegaGReport(not failures, mat, ras, failures)


@dataclass
class StableAuslander:
    factors: list[tuple[str, int]]

    @property
    def dimension(self) -> int:
        return sum(d for _, d in self.factors)


def stable_cm_auslander(pres: QuadraticPresentation, seed: int = 0) -> StableAuslander:
    cat = gp_indecomposables(pres, seed)
    return StableAuslander([(e.arrow, stable_hom_dim(e.module, e.module)) for e in cat.nonprojectives])


@dataclass
class OneGorensteinReport:
    holds: bool
    witness: list[str]


def is_one_gorenstein_omega(pres: QuadraticPresentation, seed: int = 0) -> OneGorensteinReport:
    """rad Λ is Gorenstein projective: each arrow is perfect or has projective ideal."""
    perfect = perfect_arrows(pres)
    bad = []
    for arr in pres.arrows:
        if arr.name in perfect:
            continue
        m = path_ideal_module(pres, arr.name)
        target = projective(pres, arr.target)
        if not generic.is_isomorphic(m, target, seed):
            bad.append(arr.name)
    return OneGorensteinReport(not bad, bad)


def is_self_injective(pres: QuadraticPresentation) -> bool:
    return all(is_injective(projective(pres, v)) for v in pres.vertices)
