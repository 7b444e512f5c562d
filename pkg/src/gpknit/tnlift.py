"""Gorenstein projective modules over T_n(Λ), the linear A_n quiver over Λ.

A T_n(Λ)-module is a chain X_1 -> ... -> X_n of Λ-modules.  It is
Gorenstein projective iff every X_k is, every map is monic and every
cokernel is Gorenstein projective.  The indecomposables are the
projectives (0, ..., 0, P_v, ..., P_v) and the chains

    Y(i, j, G) = (0, ..., 0, ΩG, ..., ΩG, P(G), ..., P(G))

with ΩG at positions i..j and the syzygy inclusion at j -> j+1.  For j = n
there is no P(G) tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arknit.gprj import names
from .arknit.quiver import ObjectDescriptor, Sub0, SubId, SubMono
from .gpclass import gp_indecomposables
from .presentation import QuadraticPresentation
from .repcalc import generic
from .repcalc.homological import try_gp_certificate
from .repcalc.modules import (
    Representation,
    cokernel,
    identity_map,
    is_projective,
    syzygy_sequence,
    zero_map,
    zero_module,
)
from .repcalc.morph import Chain


@dataclass(frozen=True, order=True)
class TnDescriptor:
    """``Projective(p, v)`` or ``Y(i, j, G)``; G is a catalog name such as "aΛ"."""

    kind: str
    n: int
    i: int = 0
    j: int = 0
    vertex: str = ""
    module: str = ""

    @property
    def label(self) -> str:
        if self.kind == "projective":
            return f"P({self.i},{self.vertex})"
        return f"Y[{self.i},{self.j},{self.module}]"

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        if self.kind == "projective":
            return {"kind": "projective", "n": self.n, "position": self.i, "vertex": self.vertex}
        return {"kind": "Y", "n": self.n, "i": self.i, "j": self.j, "G": self.module}


def Projective(n: int, position: int, vertex: str) -> TnDescriptor:
    if not 1 <= position <= n:
        raise ValueError(f"position {position} outside 1..{n}")
    return TnDescriptor("projective", n, i=position, vertex=str(vertex))


def Y(n: int, i: int, j: int, g: str) -> TnDescriptor:
    if not 1 <= i <= j <= n:
        raise ValueError(f"need 1 <= i <= j <= n, got ({i}, {j}, {n})")
    return TnDescriptor("Y", n, i=i, j=j, module=g)


@dataclass
class TnEntry:
    descriptor: TnDescriptor
    dim_vectors: list[tuple[int, ...]] = field(default_factory=list)

    def to_json(self) -> dict:
        return dict(self.descriptor.to_json(), label=self.descriptor.label, dims=[list(d) for d in self.dim_vectors])


def tn_descriptors(pres: QuadraticPresentation, n: int, seed: int = 0) -> list[TnDescriptor]:
    if n < 1:
        raise ValueError("n must be at least 1")
    nm = names(pres, seed)
    out = [Projective(n, p, v) for p in range(1, n + 1) for v in nm.cat.projectives]
    for g in nm.nonprojectives:
        out += [Y(n, i, j, g) for i in range(1, n + 1) for j in range(i, n + 1)]
    return out


def tn_realize(pres: QuadraticPresentation, d: TnDescriptor, seed: int = 0) -> Chain:
    z = zero_module(pres)
    n = d.n
    if d.kind == "projective":
        p = names(pres, seed).cat.projective_modules[d.vertex]
        mods = [z] * (d.i - 1) + [p] * (n - d.i + 1)
    else:
        g = names(pres, seed).module(d.module)
        om, inc, p, _ = syzygy_sequence(g)
        mods = [z] * (d.i - 1) + [om] * (d.j - d.i + 1) + [p] * (n - d.j)
    maps = []
    for k in range(n - 1):
        a, b = mods[k], mods[k + 1]
        if a is b:
            maps.append(identity_map(a))
        elif a is z:
            maps.append(zero_map(a, b))
        else:
            maps.append(inc)
    return Chain(mods, maps, name=d.label)


def tn_gp_indecomposables(pres: QuadraticPresentation, n: int, seed: int = 0) -> list[TnEntry]:
    return [TnEntry(d, tn_realize(pres, d, seed).dim_vectors) for d in tn_descriptors(pres, n, seed)]


def tn_gp_count(pres: QuadraticPresentation, n: int, seed: int = 0) -> int:
    cat = gp_indecomposables(pres, seed)
    return n * len(cat.projectives) + n * (n + 1) // 2 * len(cat.nonprojectives)


def _is_gp(m: Representation, seed: int) -> bool:
    if m.is_zero() or is_projective(m):
        return True
    cert, _ = try_gp_certificate(m, seed=seed, dim_cap=4 * m.pres.dimension)
    return cert is not None


def realization_failures(chain: Chain, seed: int = 0) -> list[str]:
    """Violations of the local characterization, plus a non-local End."""
    out = []
    for k, m in enumerate(chain.modules):
        if not _is_gp(m, seed):
            out.append(f"X_{k + 1} is not Gorenstein projective")
    for k, f in enumerate(chain.maps):
        if not f.is_injective():
            out.append(f"map {k + 1} is not monic")
        elif not _is_gp(cokernel(f)[0], seed):
            out.append(f"cokernel of map {k + 1} is not Gorenstein projective")
    if not generic.is_local(chain):
        out.append("endomorphism ring is not local")
    return out


def t2_to_sub(pres: QuadraticPresentation, d: TnDescriptor, seed: int = 0) -> ObjectDescriptor:
    """The n = 2 dictionary with the monomorphism category."""
    if d.n != 2:
        raise ValueError("the dictionary is defined for n = 2")
    nm = names(pres, seed)
    if d.kind == "projective":
        p = f"P{d.vertex}"
        return Sub0(p) if d.i == 2 else SubId(p)
    w = nm.omega(d.module)
    if (d.i, d.j) == (1, 1):
        return SubMono(w, nm.cover(d.module))
    if (d.i, d.j) == (1, 2):
        return SubId(w)
    return Sub0(w)
