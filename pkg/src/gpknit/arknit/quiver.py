"""Object descriptors, almost split sequences and labeled translation quivers."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from ..repcalc import generic

HSHAPES = ("zero", "identity", "inclusion", "cover", "composite")


@dataclass(frozen=True, order=True)
class ObjectDescriptor:
    """Symbolic name of an indecomposable object.

    ``kind`` is one of ``mod``, ``sub0``, ``subid``, ``submono`` or ``hpair``.
    ``top`` and ``bottom`` are catalog module names ("" stands for 0).
    """

    kind: str
    top: str = ""
    bottom: str = ""
    shape: str = ""
    via: str = ""  # for composites P(ΩA) -> P(A): the module A

    @property
    def label(self) -> str:
        if self.kind == "mod":
            return self.bottom
        if self.kind == "sub0":
            return f"0⊕{self.bottom}"
        if self.kind == "subid":
            return f"{self.bottom}={self.bottom}"
        if self.kind == "submono":
            return f"{self.top}↪{self.bottom}"
        return _hpair_label(self.top, self.bottom, self.shape)

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        out = {"kind": self.kind, "top": self.top, "bottom": self.bottom, "shape": self.shape, "label": self.label}
        if self.via:
            out["via"] = self.via
        return out

    @classmethod
    def from_json(cls, doc: dict) -> "ObjectDescriptor":
        return cls(doc["kind"], doc.get("top", ""), doc.get("bottom", ""), doc.get("shape", ""), doc.get("via", ""))


def _hpair_label(x: str, y: str, shape: str) -> str:
    if shape == "zero":
        return f"{x or '0'}⊕{y or '0'}"
    if shape == "identity":
        return f"{x}={y}"
    sym = {"inclusion": "↪", "cover": "↠", "composite": "→"}[shape]
    return f"{x}{sym}{y}"


def Mod(m: str) -> ObjectDescriptor:
    return ObjectDescriptor("mod", "", m)


def Sub0(g: str) -> ObjectDescriptor:
    return ObjectDescriptor("sub0", "", g)


def SubId(g: str) -> ObjectDescriptor:
    return ObjectDescriptor("subid", g, g)


def SubMono(k: str, p: str) -> ObjectDescriptor:
    return ObjectDescriptor("submono", k, p)


def HPair(x: str, y: str, shape: str, via: str = "") -> ObjectDescriptor:
    if shape not in HSHAPES:
        raise ValueError(f"unknown map class {shape!r}")
    if shape == "identity" and x != y:
        raise ValueError("identity pairs need equal ends")
    return ObjectDescriptor("hpair", x, y, shape, via if shape == "composite" else "")


@dataclass
class SeqCheck:
    exact: bool
    non_split: bool
    right_almost_split: bool | None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.exact and self.non_split and self.right_almost_split is not False


@dataclass
class AlmostSplitSeq:
    """0 -> left -> ⊕ middles -> right -> 0, optionally with explicit maps.

    ``terms`` holds the materialized (left, middle, right) objects and
    ``maps`` the pair (f, g).  ``parts`` lists the materialized middle
    summands in the order of ``middles``.
    """

    left: ObjectDescriptor
    middles: tuple[ObjectDescriptor, ...]
    right: ObjectDescriptor
    template: str = ""
    terms: tuple | None = None
    maps: tuple | None = None
    parts: tuple | None = None

    @property
    def materialized(self) -> bool:
        return self.maps is not None

    def describe(self) -> str:
        mid = " ⊕ ".join(m.label for m in self.middles) or "0"
        return f"0 → {self.left.label} → {mid} → {self.right.label} → 0"

    def check(self, catalog: Sequence[Any] | None = None, seed: int = 0) -> SeqCheck:
        if self.maps is None:
            raise ValueError("sequence has no explicit maps")
        f, g = self.maps
        fails = []
        exact = generic.is_exact_short(f, g) and f.is_well_formed() and g.is_well_formed()
        if not exact:
            fails.append("not exact")
        non_split = not generic.is_retraction(g)
        if not non_split:
            fails.append("splits")
        ras = None
        if catalog is not None:
            ras = generic.is_right_almost_split(g, catalog, seed)
            if not ras:
                fails.append("not right almost split")
        return SeqCheck(exact, non_split, ras, fails)

    def to_json(self) -> dict:
        return {
            "template": self.template,
            "left": self.left.to_json(),
            "middles": [m.to_json() for m in self.middles],
            "right": self.right.to_json(),
        }


@dataclass
class ARQuiver:
    """Translation quiver on object descriptors.

    ``arrows`` maps (source, target) to a multiplicity and ``tau`` sends a
    non-projective vertex X to τX.
    """

    vertices: list[ObjectDescriptor] = field(default_factory=list)
    arrows: dict[tuple[ObjectDescriptor, ObjectDescriptor], int] = field(default_factory=dict)
    tau: dict[ObjectDescriptor, ObjectDescriptor] = field(default_factory=dict)
    projective: set[ObjectDescriptor] = field(default_factory=set)
    injective: set[ObjectDescriptor] = field(default_factory=set)
    notes: list[str] = field(default_factory=list)
    name: str = ""

    def add_vertex(self, x: ObjectDescriptor) -> None:
        if x not in self._vset():
            self.vertices.append(x)

    def _vset(self) -> set:
        return set(self.vertices)

    def add_arrow(self, x: ObjectDescriptor, y: ObjectDescriptor, mult: int = 1) -> None:
        self.add_vertex(x)
        self.add_vertex(y)
        self.arrows[(x, y)] = max(self.arrows.get((x, y), 0), mult)

    def set_tau(self, x: ObjectDescriptor, tx: ObjectDescriptor) -> None:
        old = self.tau.get(x)
        if old is not None and old != tx:
            raise ValueError(f"τ({x}) is both {old} and {tx}")
        self.tau[x] = tx

    def add_sequence(self, seq: AlmostSplitSeq) -> None:
        """Glue the mesh of an almost split sequence into the quiver."""
        counts = Counter(seq.middles)
        for m, c in counts.items():
            self.add_arrow(seq.left, m, c)
            self.add_arrow(m, seq.right, c)
        self.add_vertex(seq.left)
        self.add_vertex(seq.right)
        self.set_tau(seq.right, seq.left)

    @property
    def arrow_count(self) -> int:
        return sum(self.arrows.values())

    def successors(self, x: ObjectDescriptor) -> list[ObjectDescriptor]:
        return [b for (a, b) in self.arrows if a == x]

    def predecessors(self, x: ObjectDescriptor) -> list[ObjectDescriptor]:
        return [a for (a, b) in self.arrows if b == x]

    def in_degree(self, x: ObjectDescriptor) -> int:
        return sum(m for (a, b), m in self.arrows.items() if b == x)

    def out_degree(self, x: ObjectDescriptor) -> int:
        return sum(m for (a, b), m in self.arrows.items() if a == x)

    def is_single_cycle(self) -> bool:
        """Every vertex has in- and out-degree 1 and the arrows form one oriented cycle."""
        if not self.vertices:
            return False
        if any(self.in_degree(x) != 1 or self.out_degree(x) != 1 for x in self.vertices):
            return False
        start = self.vertices[0]
        seen, x = {start}, self.successors(start)[0]
        while x != start:
            seen.add(x)
            x = self.successors(x)[0]
        return len(seen) == len(self.vertices)

    def underlying_is_cycle(self) -> bool:
        """The underlying undirected multigraph is a single cycle."""
        n = len(self.vertices)
        if n == 0 or self.arrow_count != n:
            return False
        deg = Counter()
        for (a, b), m in self.arrows.items():
            deg[a] += m
            deg[b] += m
        if any(deg[x] != 2 for x in self.vertices):
            return False
        return len(self.weak_components()) == 1

    def weak_components(self) -> list[list[ObjectDescriptor]]:
        adj: dict[ObjectDescriptor, set] = {x: set() for x in self.vertices}
        for a, b in self.arrows:
            adj[a].add(b)
            adj[b].add(a)
        seen: set = set()
        out = []
        for x in self.vertices:
            if x in seen:
                continue
            comp, stack = [], [x]
            seen.add(x)
            while stack:
                y = stack.pop()
                comp.append(y)
                for z in adj[y]:
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
            out.append(comp)
        return out

    def tau_orbits(self) -> list[list[ObjectDescriptor]]:
        """Orbits of τ (chains or cycles), each listed along τ."""
        inv = {t: x for x, t in self.tau.items()}
        seen: set = set()
        out = []
        for x in self.vertices:
            if x in seen:
                continue
            y = x
            while y in inv and inv[y] != x:
                y = inv[y]
            if y in inv:  # cycle: start anywhere
                y = x
            orbit = []
            while y is not None and y not in seen:
                orbit.append(y)
                seen.add(y)
                y = self.tau.get(y)
            out.append(orbit)
        return out

    def mesh_violations(self, sequences: Iterable[AlmostSplitSeq]) -> list[str]:
        """Vertices whose incoming arrows differ from the middle of their sequence."""
        bad = []
        for s in sequences:
            want = Counter(s.middles)
            got = Counter({a: m for (a, b), m in self.arrows.items() if b == s.right})
            if want != got:
                bad.append(s.right.label)
        return bad

    def subquiver(self, keep: Iterable[ObjectDescriptor], name: str = "") -> "ARQuiver":
        keep = set(keep)
        q = ARQuiver(name=name or self.name)
        q.vertices = [x for x in self.vertices if x in keep]
        q.arrows = {(a, b): m for (a, b), m in self.arrows.items() if a in keep and b in keep}
        q.tau = {x: t for x, t in self.tau.items() if x in keep and t in keep}
        q.projective = {x for x in self.projective if x in keep}
        q.injective = {x for x in self.injective if x in keep}
        q.notes = list(self.notes)
        return q

    def labels(self) -> list[str]:
        return [x.label for x in self.vertices]

    def to_dot(self) -> str:
        ids = {x: f"v{i}" for i, x in enumerate(self.vertices)}
        lines = [f"digraph {json.dumps(self.name or 'AR')} {{"]
        for note in self.notes:
            lines.append(f"  // {note}")
        for x in self.vertices:
            attrs = [f"label={json.dumps(x.label, ensure_ascii=False)}"]
            if x in self.projective or x in self.injective:
                attrs.append("shape=box")
            lines.append(f"  {ids[x]} [{', '.join(attrs)}];")
        for (a, b), m in self.arrows.items():
            for _ in range(m):
                lines.append(f"  {ids[a]} -> {ids[b]};")
        for x, t in self.tau.items():
            if x in ids and t in ids:
                lines.append(f"  {ids[t]} -> {ids[x]} [style=dashed, constraint=false];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        index = {x: i for i, x in enumerate(self.vertices)}
        return {
            "name": self.name,
            "vertices": [
                dict(x.to_json(), projective=x in self.projective, injective=x in self.injective)
                for x in self.vertices
            ],
            "arrows": [[index[a], index[b], m] for (a, b), m in self.arrows.items()],
            "tau": [[index[x], index[t]] for x, t in self.tau.items()],
            "notes": list(self.notes),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ARQuiver":
        verts = [ObjectDescriptor.from_json(v) for v in doc["vertices"]]
        q = cls(name=doc.get("name", ""), vertices=verts, notes=list(doc.get("notes", [])))
        q.arrows = {(verts[a], verts[b]): m for a, b, m in doc["arrows"]}
        q.tau = {verts[x]: verts[t] for x, t in doc["tau"]}
        q.projective = {verts[i] for i, v in enumerate(doc["vertices"]) if v.get("projective")}
        q.injective = {verts[i] for i, v in enumerate(doc["vertices"]) if v.get("injective")}
        return q


def knit(sequences: Iterable[AlmostSplitSeq], extra: Iterable[ObjectDescriptor] = (), name: str = "") -> ARQuiver:
    q = ARQuiver(name=name)
    for x in extra:
        q.add_vertex(x)
    for s in sequences:
        q.add_sequence(s)
    return q
