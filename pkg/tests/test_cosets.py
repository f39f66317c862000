import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from srep import golden
from srep.cosets import (
    _word_elt, a_words, brute_force_index, brute_force_partition, coset_index, coset_reps,
    embed_subsystem, in_subgroup, index_formula, parse_types, subgroup_set, verify_complete_system,
)
from srep.errors import GroupTooLarge, UnsupportedEmbedding
from srep.pairs import FAMILIES, sweep
from srep.rootsys import build_root_system, generate_weyl

EMBEDDINGS = [
    ("A", 4, "A1xA2", ""), ("A", 5, "A2xA2", ""), ("A", 3, "A0xA2", ""),
    ("C", 3, "A2", ""), ("C", 4, "D4", ""), ("D", 4, "A3", ""), ("D", 4, "A3", "remark"),
    ("B", 4, "D2xB2", ""), ("B", 3, "B1xB2", ""), ("B", 4, "B2xD2", ""),
    ("C", 4, "C1xC3", ""), ("D", 5, "D2xD3", ""),
    ("BC", 3, "C1xBC2", ""), ("BC", 3, "BC1xBC2", ""), ("BC", 3, "B3", ""), ("BC", 2, "BC1xC1", ""),
]


@pytest.mark.parametrize("fam,r,desc,variant", EMBEDDINGS)
def test_complete_system_against_oracle(fam, r, desc, variant):
    amb = build_root_system(fam, r)
    sub = embed_subsystem(amb, desc, variant)
    assert sub.sub_roots <= amb.roots
    cs = coset_reps(amb, sub)
    rep = verify_complete_system(cs)
    assert rep.ok, rep.failures
    assert len(cs.labels) == len(set(cs.labels)) == len(cs.reps)


@pytest.mark.parametrize("fam,r,desc,variant", EMBEDDINGS)
def test_structural_membership_matches_brute_force(fam, r, desc, variant):
    amb = build_root_system(fam, r)
    sub = embed_subsystem(amb, desc, variant)
    h = subgroup_set(sub)
    for w in generate_weyl(amb):
        assert in_subgroup(w, sub) == (w in h)


@pytest.mark.parametrize("fam,r,desc,variant", EMBEDDINGS)
def test_subsystem_closed_under_own_reflections(fam, r, desc, variant):
    from srep.rootsys import reflection
    sub = embed_subsystem(build_root_system(fam, r), desc, variant)
    for a in sub.sub_roots:
        assert tuple(-x for x in a) in sub.sub_roots
        s = reflection(a)
        assert {s(v) for v in sub.sub_roots} == sub.sub_roots


@pytest.mark.parametrize("fid", sorted(FAMILIES))
def test_catalog_index_small_rank(fid):
    for spec in sweep(fid, max_rank=4):
        amb, sub = spec.ambient(), spec.subsystem()
        assert spec.index == index_formula(amb, sub) == brute_force_index(amb, sub)


def test_a4_example_words():
    data = golden.example_a4()
    amb = build_root_system("A", 4)
    sub = embed_subsystem(amb, "A1xA2")
    cs = coset_reps(amb, sub)
    assert cs.labels == data["words"]
    classes = brute_force_partition(amb, sub)
    assert len(classes) == 10
    # each listed word hits a different class
    hit = {next(i for i, c in enumerate(classes) if w in c) for w in cs.reps}
    assert len(hit) == 10


@pytest.mark.parametrize("n", range(2, 9))
def test_binomial_recursion(n):
    for p in range(1, n):
        words = a_words(n, p)
        assert len(words) == comb(n, p) == len(a_words(n - 1, p)) + len(a_words(n - 1, p - 1))
        # distinct cosets of S_p x S_{n-p}: the images of {e_1..e_p} are distinct
        images = {frozenset(_word_elt(w, n).perm[:p]) for w in words}
        assert len(images) == comb(n, p)


def test_index_formula_entry_points():
    assert coset_index(("C4", "A3")) == 16
    assert coset_index(("D5", "A4")) == 16
    assert coset_index(("C3", "D3")) == 2


def test_unsupported_embedding():
    amb = build_root_system("C", 3)
    with pytest.raises(UnsupportedEmbedding):
        embed_subsystem(amb, "B3")
    with pytest.raises(UnsupportedEmbedding):
        embed_subsystem(amb, "A2", "remark")


def test_cap_enforced():
    amb = build_root_system("C", 6)
    with pytest.raises(GroupTooLarge):
        brute_force_index(amb, embed_subsystem(amb, "A5"), cap=1000)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.data())
def test_a_product_reps_are_minimal_length(n, data):
    p = data.draw(st.integers(1, n - 1))
    amb = build_root_system("A", n - 1)
    cs = coset_reps(amb, embed_subsystem(amb, f"A{p - 1}xA{n - p - 1}"))
    # w maps e_1..e_p and e_{p+1}..e_n in increasing order: the shortest element of its coset
    for w in cs.reps:
        assert list(w.perm[:p]) == sorted(w.perm[:p])
        assert list(w.perm[p:]) == sorted(w.perm[p:])


@pytest.mark.parametrize("fid", sorted(FAMILIES))
def test_catalog_reps_complete(fid):
    for spec in sweep(fid, max_rank=3, max_param=5):
        cs = coset_reps(spec.ambient(), spec.subsystem())
        rep = verify_complete_system(cs)
        assert rep.ok and len(cs) == spec.index, (spec.slug, rep.failures)


def test_d_block_without_partner():
    amb = build_root_system("B", 3)
    sub = embed_subsystem(amb, "D3xB0")
    cs = coset_reps(amb, sub)
    assert cs.labels == ["id", "s_e3"]
    assert verify_complete_system(cs).ok
