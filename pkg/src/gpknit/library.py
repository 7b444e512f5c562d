"""Standard presentations used in docs, tests and the CLI."""

from __future__ import annotations

from .presentation import QuadraticPresentation, make_presentation


def cyclic_nakayama(n: int) -> QuadraticPresentation:
    """A_n: the oriented n-cycle with all length-two paths zero.

    Vertices 1..n, arrow a_i: i -> i+1 (mod n).  For n = 1 this is k[x]/(x^2).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return dual_numbers()
    arrows = [(f"a{i}", i, i % n + 1) for i in range(1, n + 1)]
    rels = [(f"a{i}", f"a{i % n + 1}") for i in range(1, n + 1)]
    return make_presentation(range(1, n + 1), arrows, rels, name=f"A_{n}")


def a2() -> QuadraticPresentation:
    return make_presentation([1, 2], [("a", 1, 2), ("b", 2, 1)], [("a", "b"), ("b", "a")], name="A_2")


def dual_numbers() -> QuadraticPresentation:
    return make_presentation([1], [("x", 1, 1)], [("x", "x")], name="k[x]/(x^2)")


def hereditary_a2() -> QuadraticPresentation:
    return make_presentation([1, 2], [("a", 1, 2)], [], name="1->2")


def linear(n: int, relations: list[tuple[str, str]] | None = None) -> QuadraticPresentation:
    """Linear quiver 1 -> 2 -> ... -> n with arrows a1, a2, ..."""
    arrows = [(f"a{i}", i, i + 1) for i in range(1, n)]
    return make_presentation(range(1, n + 1), arrows, relations or [], name=f"linear_{n}")


def cluster_tilted_4() -> QuadraticPresentation:
    """Four-vertex cluster-tilted algebra with two relation 3-cycles."""
    arrows = [
        ("beta", 2, 1),
        ("alpha", 4, 2),
        ("gamma", 4, 3),
        ("delta", 3, 1),
        ("lambda", 1, 4),
        ("mu", 1, 4),
    ]
    rels = [
        ("alpha", "beta"),
        ("gamma", "delta"),
        ("delta", "lambda"),
        ("lambda", "gamma"),
        ("beta", "mu"),
        ("mu", "alpha"),
    ]
    return make_presentation([1, 2, 3, 4], arrows, rels, name="cluster_tilted_4")


def three_cycle_one_relation() -> QuadraticPresentation:
    """1 -a-> 2 -b-> 3 -c-> 1 with the single relation a b; the longest nonzero path is b c a."""
    return make_presentation(
        [1, 2, 3], [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)], [("a", "b")], name="cycle3_ab"
    )


NAMED = {
    "A2": a2,
    "dual": dual_numbers,
    "hereditary": hereditary_a2,
    "cluster4": cluster_tilted_4,
}
