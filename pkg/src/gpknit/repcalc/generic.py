"""Category-agnostic helpers that work for modules and for chains alike.

The local-ring tests use the trace form: over a field of characteristic 0
the radical of a finite-dimensional algebra A acting faithfully on a space
V is exactly ``{x : tr(xy) = 0 for all y in A}``.  So ``dim End(X)/rad`` is
the rank of the Gram matrix of the trace pairing, and X is indecomposable
with residue field Q iff that rank is 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Sequence

from .. import linalg as la
from .modules import (
    ModuleMap,
    Representation,
    combine_any,
    compose,
    direct_sum,
    hom_space,
    identity_map,
    random_combination,
    zero_map,
)
from .morph import (
    Chain,
    ChainMap,
    chain_compose,
    chain_direct_sum,
    chain_hom_space,
    chain_identity,
    chain_zero_map,
)

Obj = Any  # Representation | Chain
Map = Any  # ModuleMap | ChainMap


def hom(x: Obj, y: Obj) -> list:
    if isinstance(x, Representation):
        return hom_space(x, y)
    return chain_hom_space(x, y)


def comp(g: Map, f: Map) -> Map:
    if isinstance(f, ModuleMap):
        return compose(g, f)
    return chain_compose(g, f)


def ident(x: Obj) -> Map:
    return identity_map(x) if isinstance(x, Representation) else chain_identity(x)


def zero(x: Obj, y: Obj) -> Map:
    return zero_map(x, y) if isinstance(x, Representation) else chain_zero_map(x, y)


def dsum(objs: Sequence[Obj], name: str = ""):
    if isinstance(objs[0], Representation):
        return direct_sum(objs, name)
    return chain_direct_sum(objs, name)


def dims_signature(x: Obj) -> tuple:
    if isinstance(x, Representation):
        return x.dim_vector
    return tuple(x.dim_vectors)


def total_dim(x: Obj) -> int:
    return x.total_dim


def span_echelon(maps: Sequence[Map]) -> la.Echelon:
    e = la.Echelon(10**12)
    for f in maps:
        e.add(f.vector())
    return e


def span_rank(maps: Sequence[Map]) -> int:
    return span_echelon(maps).rank


def in_span(f: Map, maps: Sequence[Map]) -> bool:
    return span_echelon(maps).contains(f.vector())


# -- isomorphism ---------------------------------------------------------------


@dataclass
class IsoResult:
    status: str  # "yes" | "no" | "inconclusive"
    witness: Map | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == "yes"


def is_isomorphic(x: Obj, y: Obj, seed: int = 0, draws: int = 32, basis: Sequence[Map] | None = None) -> IsoResult:
    if dims_signature(x) != dims_signature(y):
        return IsoResult("no", reason="dimension vectors differ")
    if total_dim(x) == 0:
        return IsoResult("yes", witness=zero(x, y))
    basis = hom(x, y) if basis is None else basis
    if not basis:
        return IsoResult("no", reason="Hom(X, Y) = 0")
    for f in basis:
        if f.is_invertible():
            return IsoResult("yes", witness=f)
    rng = random.Random(seed)
    if len(basis) > 1:
        for _ in range(draws):
            f = random_combination(basis, rng)
            if f.is_invertible():
                return IsoResult("yes", witness=f)
    dx, dy, dxy = len(hom(x, x)), len(hom(y, y)), len(hom(y, x))
    if len({dx, dy, dxy, len(basis)}) > 1:
        return IsoResult("no", reason=f"Hom dimensions asymmetric ({len(basis)}, {dxy}, {dx}, {dy})")
    return IsoResult("inconclusive", reason=f"no invertible map in {draws} draws")


def local_iso_test(x: Obj, y: Obj) -> IsoResult:
    """Deterministic test for objects with local endomorphism rings.

    If some g ∘ f (f: X -> Y, g: Y -> X) has nonzero trace it is an
    automorphism of X, so f is a split mono and, dimensions being equal,
    an isomorphism.  Otherwise every such composite is nilpotent and X ≇ Y.
    """
    if dims_signature(x) != dims_signature(y):
        return IsoResult("no", reason="dimension vectors differ")
    hxy = hom(x, y)
    if not hxy:
        return IsoResult("no", reason="Hom(X, Y) = 0")
    hyx = hom(y, x)
    for f in hxy:
        for g in hyx:
            if comp(g, f).trace() != 0:
                return IsoResult("yes", witness=f)
    return IsoResult("no", reason="trace pairing of Hom(X, Y) and Hom(Y, X) vanishes")


# -- radicals -------------------------------------------------------------------


def trace_gram(basis: Sequence[Map], dual: Sequence[Map]) -> list[list]:
    """Matrix of tr(k ∘ h) for h in basis (rows), k in dual (columns)."""
    return [[comp(k, h).trace() for k in dual] for h in basis]


def end_semisimple_rank(x: Obj, basis: Sequence[Map] | None = None) -> int:
    """dim End(X)/rad End(X)."""
    basis = hom(x, x) if basis is None else basis
    if not basis:
        return 0
    g = trace_gram(basis, basis)
    return la.rank(la.matrix(g, (len(basis), len(basis))))


def is_local(x: Obj) -> bool:
    """End(X) is local with residue field Q (X indecomposable and nonzero)."""
    return end_semisimple_rank(x) == 1


def radical_basis(x: Obj, y: Obj, hxy: Sequence[Map] | None = None, hyx: Sequence[Map] | None = None) -> list:
    """Basis of rad(X, Y) for objects with local endomorphism rings.

    h lies in the radical iff k ∘ h is non-invertible for all k: Y -> X,
    which for local End(X) with residue field Q is tr(k ∘ h) = 0 for all k.
    """
    hxy = hom(x, y) if hxy is None else hxy
    if not hxy:
        return []
    hyx = hom(y, x) if hyx is None else hyx
    if not hyx:
        return list(hxy)
    g = la.matrix(trace_gram(hxy, hyx), (len(hxy), len(hyx)))
    if la.is_zero(g):
        return list(hxy)
    # coefficient vectors c with sum_i c_i g[i, :] = 0
    ns = la.nullspace(g.T.copy())
    return [combine_any(hxy, ns[:, j]) for j in range(ns.shape[1])]


@dataclass
class HomTable:
    """Hom spaces and radicals among a finite list of indecomposables."""

    objects: list
    homs: dict = field(default_factory=dict)
    rads: dict = field(default_factory=dict)

    def hom(self, i: int, j: int) -> list:
        if (i, j) not in self.homs:
            self.homs[(i, j)] = hom(self.objects[i], self.objects[j])
        return self.homs[(i, j)]

    def rad(self, i: int, j: int) -> list:
        if (i, j) not in self.rads:
            self.rads[(i, j)] = radical_basis(self.objects[i], self.objects[j], self.hom(i, j), self.hom(j, i))
        return self.rads[(i, j)]

    def irreducible(self, i: int, j: int) -> int:
        """dim rad(X_i, X_j) / rad^2(X_i, X_j)."""
        r = self.rad(i, j)
        if not r:
            return 0
        comps = []
        for k in range(len(self.objects)):
            first = self.rad(i, k)
            if not first:
                continue
            second = self.rad(k, j)
            comps += [comp(s, f) for f in first for s in second]
        return len(r) - span_rank(comps) if comps else len(r)

    def end_dim(self) -> int:
        n = len(self.objects)
        return sum(len(self.hom(i, j)) for i in range(n) for j in range(n))


# -- almost split checks ---------------------------------------------------------


def is_retraction(g: Map) -> bool:
    """g: Y -> Z has a section."""
    z = g.target
    if not g.is_surjective():
        return False
    sec = hom(z, g.source)
    if not sec:
        return total_dim(z) == 0
    comps = [comp(g, s) for s in sec]
    return in_span(ident(z), comps)


def is_section(f: Map) -> bool:
    x = f.source
    if not f.is_injective():
        return False
    ret = hom(f.target, x)
    if not ret:
        return total_dim(x) == 0
    return in_span(ident(x), [comp(r, f) for r in ret])


def is_right_almost_split(g: Map, catalog: Sequence[Obj], seed: int = 0) -> bool:
    """g: Y -> Z (Z indecomposable) is not a retraction and every
    non-retraction from a catalog object to Z factors through g."""
    z = g.target
    if total_dim(z) == 0 or is_retraction(g):
        return False
    for x in catalog:
        hxz = hom(x, z)
        if not hxz:
            continue
        rad = radical_basis(x, z, hxz)
        if not rad:
            continue
        through = [comp(g, t) for t in hom(x, g.source)]
        e = span_echelon(through)
        if any(not e.contains(h.vector()) for h in rad):
            return False
    return True


def is_left_almost_split(f: Map, catalog: Sequence[Obj], seed: int = 0) -> bool:
    x = f.source
    if total_dim(x) == 0 or is_section(f):
        return False
    for w in catalog:
        hxw = hom(x, w)
        if not hxw:
            continue
        rad = radical_basis(x, w, hxw)
        if not rad:
            continue
        through = [comp(t, f) for t in hom(f.target, w)]
        e = span_echelon(through)
        if any(not e.contains(h.vector()) for h in rad):
            return False
    return True


def is_exact_short(f: Map, g: Map) -> bool:
    """0 -> X -f-> Y -g-> Z -> 0 is exact (checked pointwise)."""
    if not (f.is_injective() and g.is_surjective()):
        return False
    if not comp(g, f).is_zero():
        return False
    return total_dim(f.target) == total_dim(f.source) + total_dim(g.target)


def is_split_short(f: Map, g: Map) -> bool:
    return is_retraction(g)
