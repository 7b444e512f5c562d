"""Quadratic monomial presentations: parsing, path bases, opposite algebra."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

import networkx as nx

from .errors import (
    InfiniteDimensional,
    NonComposableRelation,
    PresentationError,
    PresentationSyntaxError,
    RelationLengthError,
    UnknownArrow,
    UnknownVertex,
    ZeroPath,
)

_TOKEN = re.compile(r"[A-Za-z0-9_'.+\-]+")


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


class Path(NamedTuple):
    """A path in the quiver: a start vertex and a (possibly empty) arrow sequence."""

    start: str
    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        return " ".join(self.arrows) if self.arrows else f"e_{self.start}"


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow name")
        vs = set(self.vertices)
        for a in self.arrows:
            for v in (a.source, a.target):
                if v not in vs:
                    raise UnknownVertex(f"arrow {a.name} uses undeclared vertex {v}")

    @cached_property
    def arrow(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]


@dataclass(frozen=True)
class QuadraticPresentation:
    """The algebra kQ/I with I generated by the length-two paths in ``relations``.

    A relation ``(a, b)`` kills the path "a then b".
    """

    quiver: Quiver
    relations: frozenset[tuple[str, str]]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        arrows = self.quiver.arrow
        for rel in self.relations:
            if len(rel) != 2:
                raise RelationLengthError(f"relation {rel} does not have length 2")
            a, b = rel
            for x in rel:
                if x not in arrows:
                    raise UnknownArrow(f"unknown arrow {x}")
            if arrows[a].target != arrows[b].source:
                raise NonComposableRelation(f"relation {a} {b}: target({a}) != source({b})")

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    def arrow(self, name: str) -> Arrow:
        try:
            return self.quiver.arrow[name]
        except KeyError:
            raise UnknownArrow(name) from None

    def check_vertex(self, v: str) -> str:
        if v not in self.quiver.vertices:
            raise UnknownVertex(v)
        return v

    def target(self, p: Path) -> str:
        return self.arrow(p.arrows[-1]).target if p.arrows else p.start

    def is_nonzero(self, p: Path) -> bool:
        return all((x, y) not in self.relations for x, y in zip(p.arrows, p.arrows[1:]))

    def extend(self, p: Path, b: str) -> Path | None:
        """The path p·b, or None when it is zero (or not composable)."""
        arr = self.arrow(b)
        if arr.source != self.target(p):
            return None
        if p.arrows and (p.arrows[-1], b) in self.relations:
            return None
        return Path(p.start, p.arrows + (b,))

    @cached_property
    def path_basis(self) -> "PathBasis":
        return enumerate_nonzero_paths(self)

    @property
    def dimension(self) -> int:
        return len(self.path_basis.paths)

    def to_text(self) -> str:
        lines = [f"vertices: {' '.join(self.vertices)}"]
        lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in self.arrows]
        lines += [f"relation {a} {b}" for a, b in sorted(self.relations)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PathBasis:
    paths: tuple[Path, ...]
    by_endpoints: dict[tuple[str, str], tuple[Path, ...]] = field(compare=False)

    def from_vertex(self, v: str) -> list[Path]:
        return [p for p in self.paths if p.start == v]


def make_presentation(
    vertices: Iterable,
    arrows: Iterable[tuple],
    relations: Iterable[tuple] = (),
    name: str = "",
) -> QuadraticPresentation:
    """Build a presentation from plain Python data (vertex ids are stringified)."""
    q = Quiver(tuple(str(v) for v in vertices), tuple(Arrow(str(n), str(s), str(t)) for n, s, t in arrows))
    rels = [tuple(str(x) for x in r) for r in relations]
    for r in rels:
        if len(r) != 2:
            raise RelationLengthError(f"relation {' '.join(r)} does not have length 2")
    return QuadraticPresentation(q, frozenset(rels), name)  # type: ignore[arg-type]


def parse_presentation(text: str, name: str = "") -> QuadraticPresentation:
    vertices: list[str] = []
    arrows: list[Arrow] = []
    relations: list[tuple[str, str]] = []
    rel_pos: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        if body.startswith("vertices:"):
            rest = body[len("vertices:") :]
            col = indent + len("vertices:")
            for m in re.finditer(r"\S+", rest):
                if not _TOKEN.fullmatch(m.group()):
                    raise PresentationSyntaxError(f"bad vertex token {m.group()!r}", lineno, col + m.start() + 1)
                vertices.append(m.group())
            continue
        m = re.fullmatch(r"arrow\s+(\S+?)\s*:\s*(\S+)\s*->\s*(\S+)", body)
        if m:
            for g in (1, 2, 3):
                if not _TOKEN.fullmatch(m.group(g)):
                    raise PresentationSyntaxError(f"bad token {m.group(g)!r}", lineno, indent + m.start(g) + 1)
            if m.group(2) not in vertices:
                raise UnknownVertex(f"line {lineno}: undeclared vertex {m.group(2)}")
            if m.group(3) not in vertices:
                raise UnknownVertex(f"line {lineno}: undeclared vertex {m.group(3)}")
            arrows.append(Arrow(m.group(1), m.group(2), m.group(3)))
            continue
        if body.startswith("relation") and (len(body) == 8 or body[8].isspace()):
            toks = body.split()[1:]
            if len(toks) != 2:
                raise RelationLengthError(f"line {lineno}: relation must have exactly 2 arrows, got {len(toks)}")
            relations.append((toks[0], toks[1]))
            rel_pos.append((lineno, indent + 1))
            continue
        if body.startswith("arrow"):
            raise PresentationSyntaxError("expected 'arrow NAME: SOURCE -> TARGET'", lineno, indent + 1)
        raise PresentationSyntaxError(f"unrecognised line {body!r}", lineno, indent + 1)
    if len(set(vertices)) != len(vertices):
        raise PresentationError("duplicate vertex id")
    names = {a.name: a for a in arrows}
    for (a, b), (lineno, _) in zip(relations, rel_pos):
        for x in (a, b):
            if x not in names:
                raise UnknownArrow(f"line {lineno}: unknown arrow {x}")
        if names[a].target != names[b].source:
            raise NonComposableRelation(f"line {lineno}: relation {a} {b} is not composable")
    return QuadraticPresentation(Quiver(tuple(vertices), tuple(arrows)), frozenset(relations), name)


def composition_graph(pres: QuadraticPresentation) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(a.name for a in pres.arrows)
    for a in pres.arrows:
        for b in pres.quiver.arrows_from(a.target):
            if (a.name, b.name) not in pres.relations:
                g.add_edge(a.name, b.name)
    return g


def is_finite_dimensional(pres: QuadraticPresentation) -> bool:
    return nx.is_directed_acyclic_graph(composition_graph(pres))


def _walk(pres: QuadraticPresentation, p: Path) -> Iterator[Path]:
    yield p
    for b in pres.quiver.arrows_from(pres.target(p)):
        q = pres.extend(p, b.name)
        if q is not None:
            yield from _walk(pres, q)


def enumerate_nonzero_paths(pres: QuadraticPresentation) -> PathBasis:
    if not is_finite_dimensional(pres):
        raise InfiniteDimensional("the composition graph has a cycle")
    paths = [p for v in pres.vertices for p in _walk(pres, Path(v, ()))]
    index: dict[tuple[str, str], list[Path]] = {}
    for p in paths:
        index.setdefault((p.start, pres.target(p)), []).append(p)
    return PathBasis(tuple(paths), {k: tuple(v) for k, v in index.items()})


def continuations(pres: QuadraticPresentation, p: Path) -> list[Path]:
    """All nonzero paths p·q, in depth-first order starting with p."""
    if not pres.is_nonzero(p):
        raise ZeroPath(str(p))
    pres.path_basis  # raises InfiniteDimensional
    return list(_walk(pres, p))


def path(pres: QuadraticPresentation, *arrows: str) -> Path:
    """Path from arrow names; checks composability."""
    if not arrows:
        raise ValueError("use Path(v, ()) for trivial paths")
    start = pres.arrow(arrows[0]).source
    for x, y in zip(arrows, arrows[1:]):
        if pres.arrow(x).target != pres.arrow(y).source:
            raise PresentationError(f"{x} {y} not composable")
    return Path(start, tuple(arrows))


def opposite(pres: QuadraticPresentation) -> QuadraticPresentation:
    q = Quiver(pres.vertices, tuple(Arrow(a.name, a.target, a.source) for a in pres.arrows))
    rels = frozenset((b, a) for a, b in pres.relations)
    return QuadraticPresentation(q, rels, f"{pres.name}^op" if pres.name else "")
