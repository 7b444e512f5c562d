"""Generated corpora of finite-dimensional quadratic monomial algebras.

The exhaustive corpus lists every connected quiver with at most 3 vertices
and 5 arrows, and every relation set making the algebra finite-dimensional,
up to isomorphism of bound quivers.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

import networkx as nx

from .presentation import QuadraticPresentation, is_finite_dimensional, make_presentation

Edge = tuple[int, int]


def _connected(nv: int, arrows: list[Edge]) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(nv))
    g.add_edges_from(arrows)
    return nx.is_connected(g)


def _canonical_quiver(nv: int, arrows: list[Edge]) -> tuple[Edge, ...]:
    return min(tuple(sorted((p[s], p[t]) for s, t in arrows)) for p in itertools.permutations(range(nv)))


def connected_quivers(max_vertices: int = 3, max_arrows: int = 5) -> list[tuple[int, tuple[Edge, ...]]]:
    """Connected quivers up to isomorphism, as (vertex count, sorted arrow list)."""
    seen = set()
    for nv in range(1, max_vertices + 1):
        pairs = [(s, t) for s in range(nv) for t in range(nv)]
        for na in range(0, max_arrows + 1):
            for combo in itertools.combinations_with_replacement(pairs, na):
                arrows = list(combo)
                if not _connected(nv, arrows):
                    continue
                seen.add((nv, _canonical_quiver(nv, arrows)))
    return sorted(seen, key=lambda q: (q[0], len(q[1]), q[1]))


def _automorphisms(nv: int, arrows: tuple[Edge, ...]) -> list[tuple[int, ...]]:
    """Arrow permutations induced by automorphisms of the quiver."""
    out = set()
    groups: dict[Edge, list[int]] = {}
    for i, e in enumerate(arrows):
        groups.setdefault(e, []).append(i)
    for p in itertools.permutations(range(nv)):
        if sorted((p[s], p[t]) for s, t in arrows) != list(arrows):
            continue
        # arrows sharing endpoints may be permuted freely
        keys = list(groups)
        choices = [itertools.permutations(groups[(p[s], p[t])]) for s, t in keys]
        for combo in itertools.product(*choices):
            perm = [0] * len(arrows)
            for (s, t), img in zip(keys, combo):
                for src, dst in zip(groups[(s, t)], img):
                    perm[src] = dst
            out.add(tuple(perm))
    return sorted(out)


def _acyclic_subsets(n: int, edges: list[Edge]) -> Iterator[frozenset[Edge]]:
    """All subsets of ``edges`` forming an acyclic digraph on n nodes."""
    edges = [e for e in edges if e[0] != e[1]]
    m = len(edges)
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    chosen: list[Edge] = []

    def reaches(a: int, b: int) -> bool:
        stack, seen = [a], {a}
        while stack:
            v = stack.pop()
            if v == b:
                return True
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def rec(i: int) -> Iterator[frozenset[Edge]]:
        if i == m:
            yield frozenset(chosen)
            return
        yield from rec(i + 1)
        a, b = edges[i]
        if not reaches(b, a):
            adj[a].append(b)
            chosen.append(edges[i])
            yield from rec(i + 1)
            chosen.pop()
            adj[a].pop()

    yield from rec(0)


def relation_sets_up_to_iso(nv: int, arrows: tuple[Edge, ...]) -> list[frozenset[Edge]]:
    """Finite-dimensional relation sets (on arrow indices) up to automorphism."""
    n = len(arrows)
    composable = [(i, j) for i in range(n) for j in range(n) if arrows[i][1] == arrows[j][0]]
    auts = _automorphisms(nv, arrows)
    reps = {}
    for allowed in _acyclic_subsets(n, composable):
        rels = [e for e in composable if e not in allowed]
        key = min(tuple(sorted((p[i], p[j]) for i, j in rels)) for p in auts)
        if key not in reps:
            reps[key] = frozenset(key)
    return list(reps.values())


def _build(nv: int, arrows, rels, name: str) -> QuadraticPresentation:
    arrs = [(f"x{i}", s + 1, t + 1) for i, (s, t) in enumerate(arrows)]
    return make_presentation(range(1, nv + 1), arrs, [(f"x{i}", f"x{j}") for i, j in rels], name=name)


@lru_cache(maxsize=4)
def exhaustive_corpus(max_vertices: int = 3, max_arrows: int = 5) -> tuple[QuadraticPresentation, ...]:
    out = []
    for qi, (nv, arrows) in enumerate(connected_quivers(max_vertices, max_arrows)):
        for ri, rels in enumerate(sorted(relation_sets_up_to_iso(nv, arrows), key=sorted)):
            out.append(_build(nv, arrows, sorted(rels), f"q{qi}r{ri}"))
    return tuple(out)


def random_presentation(rng: random.Random, max_vertices: int = 5, max_arrows: int = 8, name: str = "") -> QuadraticPresentation:
    nv = rng.randint(1, max_vertices)
    na = rng.randint(max(nv - 1, 1), max_arrows)
    arrows: list[Edge] = []
    for v in range(1, nv):
        u = rng.randrange(v)
        arrows.append((u, v) if rng.random() < 0.5 else (v, u))
    while len(arrows) < na:
        arrows.append((rng.randrange(nv), rng.randrange(nv)))
    rng.shuffle(arrows)
    n = len(arrows)
    composable = [(i, j) for i in range(n) for j in range(n) if arrows[i][1] == arrows[j][0]]
    p = rng.uniform(0.5, 0.95)
    rels = {e for e in composable if e[0] == e[1] or rng.random() < p}
    while True:
        g = nx.DiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from(e for e in composable if e not in rels)
        try:
            cyc = nx.find_cycle(g)
        except nx.NetworkXNoCycle:
            break
        rels.add(tuple(rng.choice(cyc)[:2]))
    pres = _build(nv, arrows, sorted(rels), name)
    assert is_finite_dimensional(pres)
    return pres


@lru_cache(maxsize=4)
def random_corpus(count: int = 200, seed: int = 0, max_vertices: int = 5, max_arrows: int = 8) -> tuple[QuadraticPresentation, ...]:
    rng = random.Random(seed)
    return tuple(random_presentation(rng, max_vertices, max_arrows, name=f"rand{seed}_{i}") for i in range(count))


def full_corpus(seed: int = 0) -> tuple[QuadraticPresentation, ...]:
    return exhaustive_corpus() + random_corpus(200, seed)
