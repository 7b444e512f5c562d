import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpknit import library
from gpknit.arknit import sub_indecomposables
from gpknit.corpus import exhaustive_corpus
from gpknit.repcalc import generic
from gpknit.repcalc.modules import simple
from gpknit.repcalc.morph import Chain, chain_hom_space
from gpknit.tnlift import (
    Projective,
    Y,
    realization_failures,
    t2_to_sub,
    tn_descriptors,
    tn_gp_count,
    tn_gp_indecomposables,
    tn_realize,
)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        Y(2, 2, 1, "xΛ")
    with pytest.raises(ValueError):
        Projective(2, 3, "1")
    assert Y(3, 1, 2, "aΛ").label == "Y[1,2,aΛ]"
    assert Projective(3, 2, "1").to_json() == {"kind": "projective", "n": 3, "position": 2, "vertex": "1"}


def test_counts_examples(dual, a2, hereditary):
    assert tn_gp_count(dual, 2) == 5 and len(tn_descriptors(dual, 2)) == 5
    assert tn_gp_count(a2, 3) == 18
    for n in (1, 2, 5):
        assert tn_gp_count(hereditary, n) == 2 * n


def test_n1_is_the_catalog(a2):
    labels = sorted(d.label for d in tn_descriptors(a2, 1))
    assert labels == ["P(1,1)", "P(1,2)", "Y[1,1,aΛ]", "Y[1,1,bΛ]"]


def test_chain_shapes_over_dual(dual):
    c = tn_realize(dual, Y(2, 1, 1, "xΛ"))
    assert [m.dim_vector for m in c.modules] == [(1,), (2,)]
    assert c.maps[0].is_injective()
    c = tn_realize(dual, Y(2, 2, 2, "xΛ"))
    assert c.modules[0].is_zero() and c.modules[1].dim_vector == (1,)
    c = tn_realize(dual, Projective(2, 2, "1"))
    assert c.modules[0].is_zero() and c.modules[1].dim_vector == (2,)


def test_entries_carry_dims(a2):
    e = {x.descriptor.label: x for x in tn_gp_indecomposables(a2, 2)}
    assert e["Y[1,1,aΛ]"].dim_vectors == [(1, 0), (1, 1)]
    assert e["Y[1,2,aΛ]"].to_json()["dims"] == [[1, 0], [1, 0]]


@pytest.mark.parametrize("pres", [library.dual_numbers(), library.a2(), library.cyclic_nakayama(3)])
@pytest.mark.parametrize("n", [2, 3])
def test_realizations_satisfy_local_characterization(pres, n):
    for d in tn_descriptors(pres, n):
        assert realization_failures(tn_realize(pres, d)) == [], d.label


def test_realizations_pairwise_distinct(a2):
    chains = [tn_realize(a2, d) for d in tn_descriptors(a2, 3)]
    for i, x in enumerate(chains):
        for y in chains[i + 1 :]:
            assert generic.local_iso_test(x, y).status == "no"


def test_projectives_represent_evaluation(a2):
    """Hom(P(p, v), X) has dimension dim (X_p)_v, which pins the projective chains."""
    n = 3
    probes = [tn_realize(a2, d) for d in tn_descriptors(a2, n)]
    probes.append(Chain([simple(a2, "1")] * n, [generic.ident(simple(a2, "1"))] * (n - 1)))
    for p in range(1, n + 1):
        for v in a2.vertices:
            pc = tn_realize(a2, Projective(n, p, v))
            for x in probes:
                assert len(chain_hom_space(pc, x)) == x.modules[p - 1].dims[v]


def test_t2_dictionary_is_a_bijection(a2, dual, cluster4):
    for pres in (a2, dual, cluster4):
        got = [t2_to_sub(pres, d) for d in tn_descriptors(pres, 2)]
        assert len(set(got)) == len(got)
        assert set(got) == set(sub_indecomposables(pres))


@given(st.sampled_from(exhaustive_corpus(3, 4)), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_count_equals_enumeration(pres, n):
    assert tn_gp_count(pres, n) == len(tn_gp_indecomposables(pres, n))
