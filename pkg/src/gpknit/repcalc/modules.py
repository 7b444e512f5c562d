"""Right modules over a quadratic monomial algebra as quiver representations.

A module M is stored as vector spaces M_v = M e_v with, for every arrow
a: s -> t, a matrix of shape dim M_t x dim M_s giving the right action of a.
A relation (a, b) then reads ``action[b] @ action[a] == 0``.
"""

from __future__ import annotations

import json
import random
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .. import linalg as la
from ..errors import PresentationMismatch, UnknownVertex, ZeroModule, ZeroPath
from ..presentation import Path, QuadraticPresentation, continuations


class Representation:
    """Exact-rational representation of the bound quiver."""

    __slots__ = ("pres", "dims", "action", "name", "labels", "_cache", "__weakref__")

    def __init__(
        self,
        pres: QuadraticPresentation,
        dims: Mapping[str, int],
        action: Mapping[str, np.ndarray],
        name: str = "",
        labels: Mapping[str, Sequence] | None = None,
        check: bool = True,
    ):
        self.pres = pres
        self.dims = {v: int(dims.get(v, 0)) for v in pres.vertices}
        self.action = {}
        for a in pres.arrows:
            m = action.get(a.name)
            shape = (self.dims[a.target], self.dims[a.source])
            if m is None:
                m = la.zeros(*shape)
            elif m.shape != shape:
                raise ValueError(f"action of {a.name} has shape {m.shape}, expected {shape}")
            self.action[a.name] = m
        self.name = name
        self.labels = dict(labels) if labels else None
        self._cache: dict = {}
        if check:
            for a, b in pres.relations:
                if not la.is_zero(la.mul(self.action[b], self.action[a])):
                    raise ValueError(f"relation {a} {b} does not act as zero")

    def __repr__(self) -> str:
        dv = ",".join(str(self.dims[v]) for v in self.pres.vertices)
        return f"<Representation {self.name or '?'} dim=({dv})>"

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.pres.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_action(self, p: Path) -> np.ndarray:
        """Matrix of right multiplication by the path p (from M_start to M_end)."""
        m = la.identity(self.dims[p.start])
        for a in p.arrows:
            m = la.mul(self.action[a], m)
        return m

    def sparse(self, a: str) -> "SparseMat":
        key = ("sparse", a)
        if key not in self._cache:
            self._cache[key] = SparseMat(self.action[a])
        return self._cache[key]

    def renamed(self, name: str) -> "Representation":
        return Representation(self.pres, self.dims, self.action, name, self.labels, check=False)

    def to_json(self) -> dict:
        return {
            "dims": {v: self.dims[v] for v in self.pres.vertices},
            "action": {
                a: [[la.rational_str(x) for x in row] for row in m.tolist()] for a, m in self.action.items()
            },
        }

    @classmethod
    def from_json(cls, pres: QuadraticPresentation, doc: dict | str, name: str = "") -> "Representation":
        if isinstance(doc, str):
            doc = json.loads(doc)
        dims = {str(v): int(n) for v, n in doc["dims"].items()}
        action = {}
        for a in pres.arrows:
            rows = doc.get("action", {}).get(a.name)
            shape = (dims.get(a.target, 0), dims.get(a.source, 0))
            action[a.name] = la.matrix(rows or [], shape) if rows or 0 in shape else la.zeros(*shape)
        return cls(pres, dims, action, name)


class SparseMat:
    """Row and column nonzero patterns of a matrix, for building linear systems."""

    __slots__ = ("shape", "rows", "cols")

    def __init__(self, m: np.ndarray):
        self.shape = m.shape
        self.rows = [[(u, x) for u, x in enumerate(m[i]) if x != 0] for i in range(m.shape[0])]
        self.cols = [[(w, x) for w, x in enumerate(m[:, j]) if x != 0] for j in range(m.shape[1])]


class ModuleMap:
    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Representation, target: Representation, blocks: Mapping[str, np.ndarray]):
        if source.pres != target.pres:
            raise PresentationMismatch("maps must stay over one presentation")
        self.source = source
        self.target = target
        self.blocks = {}
        for v in source.pres.vertices:
            b = blocks.get(v)
            shape = (target.dims[v], source.dims[v])
            if b is None:
                b = la.zeros(*shape)
            elif b.shape != shape:
                raise ValueError(f"block at {v} has shape {b.shape}, expected {shape}")
            self.blocks[v] = b

    def __repr__(self) -> str:
        return f"<ModuleMap {self.source.name or '?'} -> {self.target.name or '?'}>"

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        return compose(self, other)

    def is_well_formed(self) -> bool:
        for a in self.source.pres.arrows:
            lhs = la.mul(self.target.action[a.name], self.blocks[a.source])
            rhs = la.mul(self.blocks[a.target], self.source.action[a.name])
            if not la.equal(lhs, rhs):
                return False
        return True

    def vector(self) -> la.SparseRow:
        out = {}
        k = 0
        for v in self.source.pres.vertices:
            for x in self.blocks[v].flat:
                if x != 0:
                    out[k] = x
                k += 1
        return out

    def trace(self):
        return sum((self.blocks[v][i, i] for v in self.blocks for i in range(self.blocks[v].shape[0])), la.ZERO)

    def is_zero(self) -> bool:
        return all(la.is_zero(b) for b in self.blocks.values())

    def is_injective(self) -> bool:
        return all(la.rank(b) == b.shape[1] for b in self.blocks.values())

    def is_surjective(self) -> bool:
        return all(la.rank(b) == b.shape[0] for b in self.blocks.values())

    def is_invertible(self) -> bool:
        return all(b.shape[0] == b.shape[1] and la.rank(b) == b.shape[0] for b in self.blocks.values())

    def inverse(self) -> "ModuleMap":
        blocks = {}
        for v, b in self.blocks.items():
            inv = la.inverse(b)
            if inv is None:
                raise ValueError("map is not invertible")
            blocks[v] = inv
        return ModuleMap(self.target, self.source, blocks)

    def scaled(self, c) -> "ModuleMap":
        c = la.to_rational(c)
        return ModuleMap(self.source, self.target, {v: b * c for v, b in self.blocks.items()})

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, {v: b + other.blocks[v] for v, b in self.blocks.items()})

    def __neg__(self) -> "ModuleMap":
        return self.scaled(-1)

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        return self + (-other)


# -- constructors --------------------------------------------------------


def module_from_paths(pres: QuadraticPresentation, basis: Sequence[Path], name: str = "") -> Representation:
    """Module spanned by a set of nonzero paths closed under right concatenation."""
    by_vertex: dict[str, list[Path]] = {v: [] for v in pres.vertices}
    for p in basis:
        by_vertex[pres.target(p)].append(p)
    index = {v: {p: i for i, p in enumerate(ps)} for v, ps in by_vertex.items()}
    action = {}
    for a in pres.arrows:
        m = la.zeros(len(by_vertex[a.target]), len(by_vertex[a.source]))
        for j, p in enumerate(by_vertex[a.source]):
            q = pres.extend(p, a.name)
            if q is not None:
                m[index[a.target][q], j] = la.ONE
        action[a.name] = m
    dims = {v: len(ps) for v, ps in by_vertex.items()}
    return Representation(pres, dims, action, name, labels=by_vertex, check=False)


@lru_cache(maxsize=4096)
def _projective(pres: QuadraticPresentation, v: str) -> Representation:
    return module_from_paths(pres, continuations(pres, Path(v, ())), name=f"P{v}")


def projective(pres: QuadraticPresentation, v: str) -> Representation:
    """P_v = e_v Λ with the nonzero paths starting at v as basis (cached, treat as immutable)."""
    v = str(v)
    if v not in pres.vertices:
        raise UnknownVertex(v)
    return _projective(pres, v)


def path_ideal_module(pres: QuadraticPresentation, p: Path | str) -> Representation:
    if isinstance(p, str):
        p = Path(pres.arrow(p).source, (p,))
    if not pres.is_nonzero(p):
        raise ZeroPath(str(p))
    name = f"{''.join(p.arrows)}Λ" if p.arrows else f"P{p.start}"
    return module_from_paths(pres, continuations(pres, p), name=name)


def simple(pres: QuadraticPresentation, v: str) -> Representation:
    v = str(v)
    if v not in pres.vertices:
        raise UnknownVertex(v)
    return Representation(pres, {v: 1}, {}, name=f"S{v}", check=False)


def zero_module(pres: QuadraticPresentation) -> Representation:
    return Representation(pres, {}, {}, name="0", check=False)


@lru_cache(maxsize=1024)
def regular_module(pres: QuadraticPresentation) -> Representation:
    s, _, _ = direct_sum([projective(pres, v) for v in pres.vertices])
    return s.renamed("Λ")


def direct_sum(
    mods: Sequence[Representation], name: str = ""
) -> tuple[Representation, list[ModuleMap], list[ModuleMap]]:
    """Direct sum with its canonical inclusions and projections."""
    if not mods:
        raise ValueError("empty direct sum; use zero_module")
    pres = mods[0].pres
    dims = {v: sum(m.dims[v] for m in mods) for v in pres.vertices}
    action = {a.name: la.block_diag([m.action[a.name] for m in mods]) for a in pres.arrows}
    s = Representation(pres, dims, action, name or "⊕".join(m.name or "?" for m in mods), check=False)
    incl, proj = [], []
    offs = {v: 0 for v in pres.vertices}
    for m in mods:
        ib, pb = {}, {}
        for v in pres.vertices:
            e = la.zeros(dims[v], m.dims[v])
            for i in range(m.dims[v]):
                e[offs[v] + i, i] = la.ONE
            ib[v] = e
            pb[v] = e.T.copy()
            offs[v] += m.dims[v]
        incl.append(ModuleMap(m, s, ib))
        proj.append(ModuleMap(s, m, pb))
    return s, incl, proj


# -- elementary maps -----------------------------------------------------


def identity_map(m: Representation) -> ModuleMap:
    return ModuleMap(m, m, {v: la.identity(m.dims[v]) for v in m.pres.vertices})


def zero_map(m: Representation, n: Representation) -> ModuleMap:
    return ModuleMap(m, n, {})


def compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """g after f."""
    if f.target is not g.source and f.target.dims != g.source.dims:
        raise ValueError("maps are not composable")
    return ModuleMap(f.source, g.target, {v: la.mul(g.blocks[v], f.blocks[v]) for v in f.blocks})


def combine(basis: Sequence[ModuleMap], coeffs: Iterable, source=None, target=None) -> ModuleMap:
    coeffs = list(coeffs)
    if not basis:
        return zero_map(source, target)
    out = {v: la.zeros(*b.shape) for v, b in basis[0].blocks.items()}
    for c, f in zip(coeffs, basis):
        if c == 0:
            continue
        c = la.to_rational(c)
        for v in out:
            out[v] = out[v] + f.blocks[v] * c
    return ModuleMap(basis[0].source, basis[0].target, out)


def map_from_vector(m: Representation, n: Representation, vec: Mapping[int, object]) -> ModuleMap:
    blocks = {}
    k = 0
    for v in m.pres.vertices:
        r, c = n.dims[v], m.dims[v]
        b = la.zeros(r, c)
        for idx in range(r * c):
            x = vec.get(k + idx)
            if x is not None:
                b[idx // c, idx % c] = x
        blocks[v] = b
        k += r * c
    return ModuleMap(m, n, blocks)


# -- Hom spaces ------------------------------------------------------------


def hom_system_rows(unknowns: Sequence[tuple[int, int]], equations) -> tuple[list[la.SparseRow], int]:
    """Sparse rows for a system of matrix equations in unknown blocks.

    Each equation is a list of terms ``(L, k, R, coef)`` standing for
    ``coef * L @ X_k @ R``; ``None`` for L or R means the identity.  The
    unknowns are flattened row-major in order.
    """
    offsets = []
    n = 0
    for r, c in unknowns:
        offsets.append(n)
        n += r * c
    rows: list[la.SparseRow] = []
    for terms in equations:
        if not terms:
            continue
        acc: dict[tuple[int, int], dict] = {}
        for L, k, R, coef in terms:
            rk, ck = unknowns[k]
            if rk == 0 or ck == 0:
                continue
            p = rk if L is None else L.shape[0]
            q = ck if R is None else R.shape[1]
            if L is None:
                lnz = [[(i, la.ONE)] for i in range(p)]
            elif isinstance(L, SparseMat):
                lnz = L.rows
            else:
                lnz = [[(u, x) for u, x in enumerate(L[i]) if x != 0] for i in range(p)]
            if R is None:
                rnz = [[(j, la.ONE)] for j in range(q)]
            elif isinstance(R, SparseMat):
                rnz = R.cols
            else:
                rnz = [[(w, x) for w, x in enumerate(R[:, j]) if x != 0] for j in range(q)]
            off = offsets[k]
            for i in range(p):
                if not lnz[i]:
                    continue
                for j in range(q):
                    if not rnz[j]:
                        continue
                    row = acc.setdefault((i, j), {})
                    for u, lx in lnz[i]:
                        base = off + u * ck
                        for w, rx in rnz[j]:
                            var = base + w
                            row[var] = row.get(var, la.ZERO) + coef * lx * rx
        for row in acc.values():
            row = {k: v for k, v in row.items() if v != 0}
            if row:
                rows.append(row)
    return rows, n


def solve_blocks(unknowns: Sequence[tuple[int, int]], equations) -> list[list[np.ndarray]]:
    """Basis of solutions of a homogeneous block system, as lists of blocks."""
    rows, n = hom_system_rows(unknowns, equations)
    basis = la.echelon(rows, n).nullspace()
    out = []
    for vec in basis:
        blocks = []
        k = 0
        for r, c in unknowns:
            b = la.zeros(r, c)
            for idx in range(r * c):
                x = vec.get(k + idx)
                if x is not None:
                    b[idx // c, idx % c] = x
            blocks.append(b)
            k += r * c
        out.append(blocks)
    return out


def module_hom_equations(m: Representation, n: Representation, index: Mapping[str, int]):
    """Commuting-square equations N_a X_s - X_t M_a = 0 for unknowns X_v = index[v]."""
    eqs = []
    for a in m.pres.arrows:
        eqs.append(
            [
                (n.sparse(a.name), index[a.source], None, la.ONE),
                (None, index[a.target], m.sparse(a.name), -la.ONE),
            ]
        )
    return eqs


def hom_space(m: Representation, n: Representation) -> list[ModuleMap]:
    if m.pres != n.pres:
        raise PresentationMismatch("modules over different presentations")
    verts = m.pres.vertices
    unknowns = [(n.dims[v], m.dims[v]) for v in verts]
    index = {v: i for i, v in enumerate(verts)}
    sols = solve_blocks(unknowns, module_hom_equations(m, n, index))
    return [ModuleMap(m, n, dict(zip(verts, s))) for s in sols]


def hom_dim(m: Representation, n: Representation) -> int:
    verts = m.pres.vertices
    if not any(m.dims[v] and n.dims[v] for v in verts):
        return 0
    unknowns = [(n.dims[v], m.dims[v]) for v in verts]
    rows, nv = hom_system_rows(unknowns, module_hom_equations(m, n, {v: i for i, v in enumerate(verts)}))
    return nv - la.echelon(rows, nv).rank


def span_rank(maps: Iterable) -> int:
    """Dimension of the span of a family of maps (modules or chains)."""
    e = la.Echelon(10**12)
    for f in maps:
        e.add(f.vector())
    return e.rank


# -- submodules, kernels, cokernels -----------------------------------------


def submodule(m: Representation, spans: Mapping[str, np.ndarray], name: str = "") -> tuple[Representation, ModuleMap]:
    """Submodule with basis given by the columns of ``spans[v]`` (assumed independent and stable)."""
    pres = m.pres
    dims = {v: spans[v].shape[1] for v in pres.vertices}
    coords = {v: la.coordinates(spans[v]) for v in pres.vertices if dims[v]}
    action = {}
    for a in pres.arrows:
        ds, dt = dims[a.source], dims[a.target]
        if ds == 0 or dt == 0:
            action[a.name] = la.zeros(dt, ds)
            continue
        img = la.mul(m.action[a.name], spans[a.source])
        rows, c = coords[a.target]
        y = img[rows]
        action[a.name] = y if c is None else la.mul(c, y)
    sub = Representation(pres, dims, action, name, check=False)
    return sub, ModuleMap(sub, m, dict(spans))


def kernel(f: ModuleMap, name: str = "") -> tuple[Representation, ModuleMap]:
    spans = {v: la.nullspace(b) for v, b in f.blocks.items()}
    return submodule(f.source, spans, name or f"ker")


def image(f: ModuleMap, name: str = "") -> tuple[Representation, ModuleMap]:
    spans = {v: la.column_basis(b) for v, b in f.blocks.items()}
    return submodule(f.target, spans, name or "im")


def _complement_projector(span: np.ndarray, n: int) -> np.ndarray:
    """Rows of a matrix whose kernel is exactly the column span of ``span``."""
    if span.shape[1] == 0:
        return la.identity(n)
    return la.nullspace(span.T).T.copy()


def quotient(m: Representation, spans: Mapping[str, np.ndarray], name: str = "") -> tuple[Representation, ModuleMap]:
    pres = m.pres
    q = {v: _complement_projector(spans[v], m.dims[v]) for v in pres.vertices}
    rinv = {v: la.solve(q[v], la.identity(q[v].shape[0])) for v in pres.vertices}
    action = {}
    for a in pres.arrows:
        action[a.name] = la.mul(la.mul(q[a.target], m.action[a.name]), rinv[a.source])
    dims = {v: q[v].shape[0] for v in pres.vertices}
    c = Representation(pres, dims, action, name, check=False)
    return c, ModuleMap(m, c, q)


def cokernel(f: ModuleMap, name: str = "") -> tuple[Representation, ModuleMap]:
    spans = {v: la.column_basis(b) for v, b in f.blocks.items()}
    return quotient(f.target, spans, name or "coker")


# -- radical, top, covers ----------------------------------------------------


def radical_spans(m: Representation) -> dict[str, np.ndarray]:
    """Basis of (rad M)_v: the span of all arrow images landing in v."""
    if "rad" in m._cache:
        return m._cache["rad"]
    pres = m.pres
    out = {}
    for v in pres.vertices:
        imgs = [m.action[a.name] for a in pres.quiver.arrows_to(v)]
        stacked = la.hstack(imgs, m.dims[v])
        out[v] = la.column_basis(stacked)
    m._cache["rad"] = out
    return out


def radical(m: Representation) -> tuple[Representation, ModuleMap]:
    return submodule(m, radical_spans(m), name=f"rad {m.name}")


def _top_vectors(m: Representation) -> dict[str, list[np.ndarray]]:
    rad = radical_spans(m)
    out = {}
    for v in m.pres.vertices:
        e = la.Echelon(m.dims[v])
        for j in range(rad[v].shape[1]):
            e.add({i: x for i, x in enumerate(rad[v][:, j]) if x != 0})
        vecs = []
        for i in range(m.dims[v]):
            if e.add({i: la.ONE}):
                col = la.zeros(m.dims[v], 1)
                col[i, 0] = la.ONE
                vecs.append(col)
        out[v] = vecs
    return out


def top_dims(m: Representation) -> dict[str, int]:
    rad = radical_spans(m)
    return {v: m.dims[v] - rad[v].shape[1] for v in m.pres.vertices}


def _projective_images(p: Representation, m: Representation, element: np.ndarray) -> dict[str, np.ndarray]:
    """Blocks of the map P_v -> M with e_v -> element, built path by path."""
    pres = m.pres
    images: dict[Path, np.ndarray] = {}
    blocks = {}
    for w in pres.vertices:
        paths = p.labels[w] if p.labels else []
        b = la.zeros(m.dims[w], len(paths))
        for j, q in enumerate(paths):
            if not q.arrows:
                col = element
            else:
                prev = images.get(Path(q.start, q.arrows[:-1]))
                if prev is None:
                    prev = la.mul(m.path_action(Path(q.start, q.arrows[:-1])), element)
                col = la.mul(m.action[q.arrows[-1]], prev)
            images[q] = col
            b[:, j] = col[:, 0]
        blocks[w] = b
    return blocks


def map_from_projective(p: Representation, vertex: str, m: Representation, element: np.ndarray) -> ModuleMap:
    """The map P_vertex -> M sending e_vertex to ``element`` (a column in M_vertex)."""
    return ModuleMap(p, m, _projective_images(p, m, element))


def projective_cover(m: Representation) -> tuple[Representation, ModuleMap]:
    if m.is_zero():
        raise ZeroModule("projective cover of the zero module")
    if "cover" in m._cache:
        return m._cache["cover"]
    pres = m.pres
    tops = _top_vectors(m)
    pieces, parts = [], []
    for v in pres.vertices:
        if not tops[v]:
            continue
        pv = projective(pres, v)
        for vec in tops[v]:
            pieces.append(pv)
            parts.append(_projective_images(pv, m, vec))
    if len(pieces) == 1:
        out = (pieces[0], ModuleMap(pieces[0], m, parts[0]))
    else:
        dims = {v: sum(q.dims[v] for q in pieces) for v in pres.vertices}
        action = {a.name: la.block_diag([q.action[a.name] for q in pieces]) for a in pres.arrows}
        name = "⊕".join(q.name for q in pieces)
        p = Representation(pres, dims, action, name, labels=None, check=False)
        blocks = {w: la.hstack([b[w] for b in parts], m.dims[w]) for w in pres.vertices}
        out = (p, ModuleMap(p, m, blocks))
    m._cache["cover"] = out
    return out


def cover_summands(m: Representation) -> list[str]:
    """Vertices v with multiplicity, such that P(M) = ⊕ P_v."""
    t = top_dims(m)
    return [v for v in m.pres.vertices for _ in range(t[v])]


def syzygy(m: Representation) -> Representation:
    return syzygy_sequence(m)[0]


def syzygy_sequence(m: Representation) -> tuple[Representation, ModuleMap, Representation, ModuleMap]:
    """(Ω M, inclusion into P(M), P(M), cover epi)."""
    if "syz" not in m._cache:
        p, epi = projective_cover(m)
        k, inc = kernel(epi, name=f"Ω{m.name}")
        m._cache["syz"] = (k, inc, p, epi)
    return m._cache["syz"]


def cover_dims(m: Representation, t: Mapping[str, int] | None = None) -> dict[str, int]:
    """Dimension vector of the projective cover."""
    t = top_dims(m) if t is None else t
    dims = {v: 0 for v in m.pres.vertices}
    for v, c in t.items():
        if c:
            for w, n in projective(m.pres, v).dims.items():
                dims[w] += c * n
    return dims


def is_projective(m: Representation) -> bool:
    """M is projective iff its projective cover has the same dimension."""
    t = top_dims(m)
    dims = {v: 0 for v in m.pres.vertices}
    for v, c in t.items():
        if c:
            for w, n in projective(m.pres, v).dims.items():
                dims[w] += c * n
    return dims == m.dims


# -- random elements -----------------------------------------------------------


def random_combination(basis: Sequence, rng: random.Random, box: int = 7):
    coeffs = [rng.randint(-box, box) for _ in basis]
    if basis and all(c == 0 for c in coeffs):
        coeffs[0] = 1
    return combine_any(basis, coeffs)


def combine_any(basis: Sequence, coeffs: Sequence):
    out = None
    for c, f in zip(coeffs, basis):
        if c == 0:
            continue
        g = f.scaled(c)
        out = g if out is None else out + g
    if out is None:
        return basis[0].scaled(0)
    return out
