import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpknit import library
from gpknit.corpus import random_presentation
from gpknit.errors import (
    InfiniteDimensional,
    NonComposableRelation,
    PresentationSyntaxError,
    RelationLengthError,
    UnknownArrow,
    UnknownVertex,
)
from gpknit.presentation import (
    composition_graph,
    enumerate_nonzero_paths,
    is_finite_dimensional,
    make_presentation,
    opposite,
    parse_presentation,
)

A2_TEXT = """
# radical square zero on the 2-cycle
vertices: 1 2
arrow a: 1 -> 2
arrow b: 2 -> 1
relation a b
relation b a
"""

CLUSTER_TEXT = """
vertices: 1 2 3 4
arrow beta: 2 -> 1
arrow alpha: 4 -> 2
arrow gamma: 4 -> 3
arrow delta: 3 -> 1
arrow lambda: 1 -> 4
arrow mu: 1 -> 4
relation alpha beta
relation gamma delta
relation delta lambda
relation lambda gamma
relation beta mu
relation mu alpha
"""


def brute_force_paths(pres, max_len=8):
    """All arrow words up to max_len that compose and avoid the relations."""
    out = {(v, ()) for v in pres.vertices}
    names = [a.name for a in pres.arrows]
    for n in range(1, max_len + 1):
        for w in itertools.product(names, repeat=n):
            if all(pres.arrow(x).target == pres.arrow(y).source for x, y in zip(w, w[1:])):
                if all((x, y) not in pres.relations for x, y in zip(w, w[1:])):
                    out.add((pres.arrow(w[0]).source, w))
    return out


def test_parse_a2():
    p = parse_presentation(A2_TEXT)
    assert len(p.vertices) == 2 and len(p.arrows) == 2 and len(p.relations) == 2
    assert p.quiver == library.a2().quiver and p.relations == library.a2().relations


def test_parse_cluster_tilted():
    p = parse_presentation(CLUSTER_TEXT)
    assert (len(p.vertices), len(p.arrows), len(p.relations)) == (4, 6, 6)
    assert p.relations == library.cluster_tilted_4().relations


def test_text_round_trip():
    for p in (library.a2(), library.cluster_tilted_4(), library.dual_numbers()):
        q = parse_presentation(p.to_text())
        assert q.quiver == p.quiver and q.relations == p.relations


@pytest.mark.parametrize(
    "text, exc",
    [
        ("vertices: 1 2\narrow a: 1 -> 2\nrelation a a\n", NonComposableRelation),
        ("vertices: 1\narrow x: 1 -> 1\nrelation x x x\n", RelationLengthError),
        ("vertices: 1\narrow x: 1 -> 2\n", UnknownVertex),
        ("vertices: 1\narrow x: 1 -> 1\nrelation x y\n", UnknownArrow),
        ("vertices: 1\narow x: 1 -> 1\n", PresentationSyntaxError),
        ("vertices: 1\narrow x 1 -> 1\n", PresentationSyntaxError),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_presentation(text)


def test_syntax_error_position():
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation("vertices: 1\n\n  bogus line\n")
    assert info.value.line == 3 and info.value.column == 3


def test_composition_graph_examples():
    g = composition_graph(library.a2())
    assert set(g.nodes) == {"a", "b"} and g.number_of_edges() == 0
    lin = library.linear(3)
    assert list(composition_graph(lin).edges) == [("a1", "a2")]
    loop = make_presentation([1], [("x", 1, 1)])
    assert list(composition_graph(loop).edges) == [("x", "x")]
    assert not is_finite_dimensional(loop)
    with pytest.raises(InfiniteDimensional):
        enumerate_nonzero_paths(loop)


@pytest.mark.parametrize(
    "pres, dim",
    [(library.a2(), 4), (library.cyclic_nakayama(3), 6), (library.dual_numbers(), 2), (library.linear(3), 6)],
)
def test_dimensions(pres, dim):
    assert pres.dimension == dim


def test_a2_basis():
    got = {str(p) for p in library.a2().path_basis.paths}
    assert got == {"e_1", "e_2", "a", "b"}


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_paths_match_brute_force(seed):
    import random

    pres = random_presentation(random.Random(seed), max_vertices=4, max_arrows=5)
    got = {(p.start, p.arrows) for p in pres.path_basis.paths}
    longest = max(len(p.arrows) for p in pres.path_basis.paths)
    assert got == brute_force_paths(pres, max_len=longest + 1)
    for p in pres.path_basis.paths:
        assert all((x, y) not in pres.relations for x, y in zip(p.arrows, p.arrows[1:]))


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_finite_iff_acyclic(seed):
    import random

    rng = random.Random(seed)
    nv = rng.randint(1, 3)
    arrows = [(f"x{i}", rng.randint(1, nv), rng.randint(1, nv)) for i in range(rng.randint(1, 4))]
    composable = [(a, b) for a, _, t in arrows for b, s, _ in arrows if t == s]
    rels = [r for r in composable if rng.random() < 0.6]
    pres = make_presentation(range(1, nv + 1), arrows, rels)
    # a nonzero word longer than the arrow count revisits an arrow, so it pumps
    n = len(arrows)
    long_words = [w for _, w in brute_force_paths(pres, max_len=n + 1) if len(w) == n + 1]
    assert is_finite_dimensional(pres) == (not long_words)
    if long_words:
        with pytest.raises(InfiniteDimensional):
            enumerate_nonzero_paths(pres)
    else:
        enumerate_nonzero_paths(pres)


def test_opposite_involution_and_dimension():
    for p in (library.a2(), library.cluster_tilted_4(), library.three_cycle_one_relation()):
        op = opposite(p)
        assert op.dimension == p.dimension
        back = opposite(op)
        assert back.quiver == p.quiver and back.relations == p.relations


def test_opposite_of_linear_with_relation():
    p = library.linear(3, [("a1", "a2")])
    op = opposite(p)
    assert op.relations == {("a2", "a1")}
    assert op.arrow("a2").target == op.arrow("a1").source
