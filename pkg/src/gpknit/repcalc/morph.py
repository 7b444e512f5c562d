"""Chains of module maps: the morphism category H(Λ) (length 2) and T_n(Λ)-modules.

A chain X_1 -> X_2 -> ... -> X_n is a representation of the linear quiver
over Λ.  Morphisms are tuples of module maps with commuting squares.
"""

from __future__ import annotations

from typing import Sequence

from .. import linalg as la
from ..errors import PresentationMismatch
from .modules import (
    ModuleMap,
    Representation,
    compose,
    direct_sum,
    identity_map,
    module_hom_equations,
    solve_blocks,
    zero_map,
    zero_module,
)


class Chain:
    __slots__ = ("modules", "maps", "name")

    def __init__(self, modules: Sequence[Representation], maps: Sequence[ModuleMap], name: str = ""):
        if len(maps) != len(modules) - 1:
            raise ValueError("a chain of n modules needs n-1 maps")
        pres = modules[0].pres
        for m in modules:
            if m.pres != pres:
                raise PresentationMismatch("chain modules over different presentations")
        for i, f in enumerate(maps):
            if f.source.dims != modules[i].dims or f.target.dims != modules[i + 1].dims:
                raise ValueError(f"map {i} does not connect positions {i} and {i + 1}")
        self.modules = tuple(modules)
        self.maps = tuple(maps)
        self.name = name

    def __repr__(self) -> str:
        return f"<Chain {self.name or '?'} {[m.dim_vector for m in self.modules]}>"

    @property
    def pres(self):
        return self.modules[0].pres

    @property
    def length(self) -> int:
        return len(self.modules)

    @property
    def total_dim(self) -> int:
        return sum(m.total_dim for m in self.modules)

    @property
    def dim_vectors(self) -> list[tuple[int, ...]]:
        return [m.dim_vector for m in self.modules]

    def is_well_formed(self) -> bool:
        return all(f.is_well_formed() for f in self.maps)


class MorphObject(Chain):
    """An object (A -f-> B) of the morphism category."""

    __slots__ = ()

    def __init__(self, A: Representation, B: Representation, f: ModuleMap | None = None, name: str = ""):
        if f is None:
            f = zero_map(A, B)
        super().__init__((A, B), (f,), name)

    @property
    def A(self) -> Representation:
        return self.modules[0]

    @property
    def B(self) -> Representation:
        return self.modules[1]

    @property
    def f(self) -> ModuleMap:
        return self.maps[0]


class ChainMap:
    __slots__ = ("source", "target", "components")

    def __init__(self, source: Chain, target: Chain, components: Sequence[ModuleMap]):
        if len(components) != source.length or source.length != target.length:
            raise ValueError("chain lengths differ")
        self.source = source
        self.target = target
        self.components = tuple(components)

    def __repr__(self) -> str:
        return f"<ChainMap {self.source.name or '?'} -> {self.target.name or '?'}>"

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        return chain_compose(self, other)

    def is_well_formed(self) -> bool:
        if not all(c.is_well_formed() for c in self.components):
            return False
        for i in range(self.source.length - 1):
            lhs = compose(self.target.maps[i], self.components[i])
            rhs = compose(self.components[i + 1], self.source.maps[i])
            if any(not la.equal(lhs.blocks[v], rhs.blocks[v]) for v in lhs.blocks):
                return False
        return True

    def vector(self) -> la.SparseRow:
        out = {}
        k = 0
        for c in self.components:
            for v in c.source.pres.vertices:
                for x in c.blocks[v].flat:
                    if x != 0:
                        out[k] = x
                    k += 1
        return out

    def trace(self):
        return sum((c.trace() for c in self.components), la.ZERO)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_injective(self) -> bool:
        return all(c.is_injective() for c in self.components)

    def is_surjective(self) -> bool:
        return all(c.is_surjective() for c in self.components)

    def is_invertible(self) -> bool:
        return all(c.is_invertible() for c in self.components)

    def scaled(self, c) -> "ChainMap":
        return ChainMap(self.source, self.target, [x.scaled(c) for x in self.components])

    def __add__(self, other: "ChainMap") -> "ChainMap":
        return ChainMap(self.source, self.target, [x + y for x, y in zip(self.components, other.components)])

    def __neg__(self) -> "ChainMap":
        return self.scaled(-1)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        return self + (-other)


def chain_compose(g: ChainMap, f: ChainMap) -> ChainMap:
    return ChainMap(f.source, g.target, [compose(x, y) for x, y in zip(g.components, f.components)])


def chain_identity(x: Chain) -> ChainMap:
    return ChainMap(x, x, [identity_map(m) for m in x.modules])


def chain_zero_map(x: Chain, y: Chain) -> ChainMap:
    return ChainMap(x, y, [zero_map(a, b) for a, b in zip(x.modules, y.modules)])


def chain_hom_space(x: Chain, y: Chain) -> list[ChainMap]:
    if x.pres != y.pres:
        raise PresentationMismatch("chains over different presentations")
    if x.length != y.length:
        raise ValueError("chains of different lengths")
    verts = x.pres.vertices
    nv = len(verts)
    unknowns = []
    for i in range(x.length):
        unknowns += [(y.modules[i].dims[v], x.modules[i].dims[v]) for v in verts]
    eqs = []
    for i in range(x.length):
        index = {v: i * nv + j for j, v in enumerate(verts)}
        eqs += module_hom_equations(x.modules[i], y.modules[i], index)
    for i in range(x.length - 1):
        for j, v in enumerate(verts):
            eqs.append(
                [
                    (y.maps[i].blocks[v], i * nv + j, None, la.ONE),
                    (None, (i + 1) * nv + j, x.maps[i].blocks[v], -la.ONE),
                ]
            )
    out = []
    for sol in solve_blocks(unknowns, eqs):
        comps = [
            ModuleMap(x.modules[i], y.modules[i], dict(zip(verts, sol[i * nv : (i + 1) * nv])))
            for i in range(x.length)
        ]
        out.append(ChainMap(x, y, comps))
    return out


def morph_hom_space(x: MorphObject, y: MorphObject) -> list[ChainMap]:
    return chain_hom_space(x, y)


def chain_direct_sum(chains: Sequence[Chain], name: str = "") -> tuple[Chain, list[ChainMap], list[ChainMap]]:
    n = chains[0].length
    mods, incs, projs = [], [], []
    for i in range(n):
        s, inc, pr = direct_sum([c.modules[i] for c in chains])
        mods.append(s)
        incs.append(inc)
        projs.append(pr)
    maps = []
    for i in range(n - 1):
        blocks = {}
        for v in chains[0].pres.vertices:
            blocks[v] = la.block_diag([c.maps[i].blocks[v] for c in chains])
        maps.append(ModuleMap(mods[i], mods[i + 1], blocks))
    cls = MorphObject if n == 2 and all(isinstance(c, MorphObject) for c in chains) else Chain
    nm = name or "⊕".join(c.name or "?" for c in chains)
    if cls is MorphObject:
        s = MorphObject(mods[0], mods[1], maps[0], nm)
    else:
        s = Chain(mods, maps, nm)
    inclusions = [ChainMap(c, s, [incs[i][k] for i in range(n)]) for k, c in enumerate(chains)]
    projections = [ChainMap(s, c, [projs[i][k] for i in range(n)]) for k, c in enumerate(chains)]
    return s, inclusions, projections


def constant_chain(m: Representation, n: int, name: str = "") -> Chain:
    return Chain([m] * n, [identity_map(m)] * (n - 1), name)


def zero_chain(pres, n: int) -> Chain:
    z = zero_module(pres)
    return Chain([z] * n, [zero_map(z, z)] * (n - 1), "0")
