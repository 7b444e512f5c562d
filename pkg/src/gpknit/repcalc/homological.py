"""Ext^1, stable Hom, injectivity and the periodicity certificate."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .. import linalg as la
from ..errors import BoundExceeded, ExtNonVanishing, NonPeriodic, ZeroModule
from .generic import IsoResult, is_isomorphic
from .modules import (
    ModuleMap,
    Representation,
    compose,
    hom_dim,
    hom_system_rows,
    hom_space,
    is_projective,
    module_hom_equations,
    projective,
    projective_cover,
    regular_module,
    simple,
    span_rank,
    syzygy_sequence,
    top_dims,
)


def ext1_dims(m: Representation, targets: Sequence[Representation], seq=None) -> list[int]:
    """dim Ext^1(M, N) for several N from the cover sequence 0 -> ΩM -> P -> M -> 0.

    Exactness of 0 -> Hom(M,N) -> Hom(P,N) -> Hom(ΩM,N) -> Ext^1(M,N) -> 0
    gives dim Ext^1 = dim Hom(ΩM,N) - dim Hom(P,N) + dim Hom(M,N), and
    dim Hom(P_v, N) = dim N_v.
    """
    if m.is_zero():
        return [0] * len(targets)
    om, inc, p, _ = seq or syzygy_sequence(m)
    if om.is_zero():
        return [0] * len(targets)
    tops = top_dims(m)
    out = []
    for n in targets:
        h = hom_dim(om, n)
        if h == 0:
            out.append(0)
            continue
        hp = sum(tops[v] * n.dims[v] for v in m.pres.vertices)
        out.append(h - hp + hom_dim(m, n))
    return out


def _ext1_against(m: Representation, projs: Sequence[Representation], seq) -> int:
    """Ext^1(M, P_v) summed over v, stopping at the first nonzero term."""
    for p in projs:
        (d,) = ext1_dims(m, [p], seq)
        if d:
            return d
    return 0


def ext1_dim_restriction(m: Representation, n: Representation) -> int:
    """Ext^1 as the cokernel of restriction Hom(P, N) -> Hom(ΩM, N), with explicit maps."""
    if m.is_zero():
        return 0
    om, inc, p, _ = syzygy_sequence(m)
    if om.is_zero():
        return 0
    h = hom_dim(om, n)
    restricted = [compose(phi, inc) for phi in hom_space(p, n)]
    return h - span_rank(restricted)


def ext1_dim(m: Representation, n: Representation) -> int:
    return ext1_dims(m, [n])[0]


def ext1_dim_cocycles(m: Representation, n: Representation) -> int:
    """Ext^1 by counting extension cocycles modulo coboundaries.

    An extension 0 -> N -> E -> M -> 0 has E_v = N_v ⊕ M_v and arrow
    matrices [[N_a, d_a], [0, M_a]].  The relations hold iff
    N_b d_a + d_b M_a = 0 for every relation (a, b); changing the
    splitting by h moves d_a by N_a h_s - h_t M_a.  This is independent of
    projective covers and syzygies.
    """
    pres = m.pres
    arrows = pres.arrows
    unknowns = [(n.dims[a.target], m.dims[a.source]) for a in arrows]
    idx = {a.name: i for i, a in enumerate(arrows)}
    eqs = []
    for a, b in pres.relations:
        eqs.append([(n.action[b], idx[a], None, la.ONE), (None, idx[b], m.action[a], la.ONE)])
    rows, nvar = hom_system_rows(unknowns, eqs)
    z = nvar - la.echelon(rows, nvar).rank
    # coboundary map h -> (N_a h_s - h_t M_a)_a: its image dimension is
    # dim(h-space) - dim Hom(M, N)
    hdim = sum(n.dims[v] * m.dims[v] for v in pres.vertices)
    verts = {v: i for i, v in enumerate(pres.vertices)}
    hrows, _ = hom_system_rows(
        [(n.dims[v], m.dims[v]) for v in pres.vertices], module_hom_equations(m, n, verts)
    )
    b = la.echelon(hrows, hdim).rank
    return z - b


def stable_hom_dim(m: Representation, n: Representation) -> int:
    h = hom_space(m, n)
    if not h or n.is_zero():
        return len(h)
    p, epi = projective_cover(n)
    through = [compose(epi, g) for g in hom_space(m, p)]
    return len(h) - span_rank(through)


def is_injective(m: Representation) -> bool:
    sims = [simple(m.pres, v) for v in m.pres.vertices]
    return all(ext1_dim(s, m) == 0 for s in sims)


@dataclass
class GpCertificate:
    """Ω^period(M) ≅ M together with Ext^1(Ω^j M, Λ) = 0 for j < period.

    ``ext_record[j]`` is 0 when Ext^1(Ω^j M, Λ) vanished during the search.
    """

    module: Representation
    period: int
    syzygies: list[Representation]
    witness: ModuleMap
    ext_record: list[int] = field(default_factory=list)

    def verify(self) -> bool:
        if not self.witness.is_invertible() or not self.witness.is_well_formed():
            return False
        if self.witness.source.dims != self.syzygies[self.period].dims:
            return False
        pres = self.module.pres
        projs = [projective(pres, v) for v in pres.vertices]
        for j in range(self.period):
            if any(ext1_dims(self.syzygies[j], projs)):
                return False
        return True


def gp_certificate_periodic(
    m: Representation, bound: int | None = None, seed: int = 0, dim_cap: int | None = None
) -> GpCertificate:
    """Look for the least m with Ω^m(M) ≅ M, checking Ext^1 against Λ on the way.

    Raises NonPeriodic if some syzygy is projective, ExtNonVanishing if
    Ext^1(Ω^j M, Λ) ≠ 0 for some j before the period closes, and
    BoundExceeded if no period shows up within ``bound`` steps (or a syzygy
    grows past ``dim_cap``).  The Ext test runs at every step because it
    rejects most non-Gorenstein-projective modules long before their
    syzygies stop growing.
    """
    if m.is_zero():
        raise ZeroModule("certificate for the zero module")
    pres = m.pres
    if bound is None:
        bound = max(2 * len(pres.arrows), 1)
    if is_projective(m):
        raise NonPeriodic("M is projective")
    projs = [projective(pres, v) for v in pres.vertices]
    syz = [m]
    record = []
    cur = m
    for step in range(1, bound + 1):
        seq = syzygy_sequence(cur)
        nxt = seq[0]
        if nxt.is_zero() or is_projective(nxt):
            raise NonPeriodic(f"Ω^{step} is projective")
        d = _ext1_against(cur, projs, seq)
        record.append(d)
        if d:
            raise ExtNonVanishing(f"Ext^1(Ω^{step - 1} M, Λ) ≠ 0")
        cur = nxt
        syz.append(cur)
        if dim_cap is not None and cur.total_dim > dim_cap:
            raise BoundExceeded(f"Ω^{step} has dimension {cur.total_dim} > {dim_cap}")
        if cur.dims == m.dims:
            res: IsoResult = is_isomorphic(cur, m, seed=seed)
            if res.status == "yes":
                return GpCertificate(m, step, syz, res.witness, record)
    raise BoundExceeded(f"no period up to {bound}")


def try_gp_certificate(m: Representation, bound: int | None = None, seed: int = 0, dim_cap: int | None = None):
    """(certificate or None, failure reason)."""
    try:
        return gp_certificate_periodic(m, bound, seed, dim_cap), ""
    except (NonPeriodic, ExtNonVanishing, BoundExceeded) as exc:
        return None, f"{type(exc).__name__}: {exc}"
