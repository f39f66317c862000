import pytest
from hypothesis import given, settings, strategies as st

from srep.errors import Case4Detected, InvalidDiagram, UnknownDiagramClassification
from srep.liealg import isomorphic, parse
from srep.pairs import lookup_pair
from srep.satake import (
    SatakeDiagram, SatakeTriple, classify_component, classify_real_form, components_phi0, dynkin_type,
    load_golden_triple, parse_triple, real_forms, recipe_run, recipe_trace, serialize_triple,
    triple_for, validate_riemannian,
)

SU_POINTS = [(n, p) for p in (1, 2, 3) for n in range(2 * p, 9)]


@pytest.mark.parametrize("n,p", SU_POINTS)
def test_su_sp_recipe(n, p):
    t = triple_for("su2p2np-sppq", n=n, p=p)
    expected = parse(f"sl(2,C)^{p} + sp({n - 2 * p})")
    assert recipe_run(t) == expected == lookup_pair("su2p2np-sppq", {"n": n, "p": p}).hpis_expr


@pytest.mark.parametrize("n", range(2, 9))
def test_slc_slr_recipe(n):
    t = triple_for("slC-slR", n=n)
    assert recipe_run(t) == parse(f"R^{(n - 1) // 2} + so(2)^{n // 2}")
    assert components_phi0(t) == []


@pytest.mark.parametrize("n,p", [(n, p) for n, p in SU_POINTS if n > 2 * p])
def test_su_sp_components(n, p):
    t = triple_for("su2p2np-sppq", n=n, p=p)
    comps = components_phi0(t)
    singles = [c for c in comps if len(c) == 1]
    chains = [c for c in comps if len(c) > 1]
    k = 2 * (n - 2 * p) - 1
    if k == 1:
        assert len(singles) == 2 * p + 1 and not chains
    else:
        assert len(singles) == 2 * p and len(chains) == 1
        assert dynkin_type(t.d_a, chains[0]) == ("A", k)
    tags = [classify_component(t, c).case_tag for c in comps]
    assert tags.count("Case5") == 2 * p
    # the middle block: Case 3 for a chain, Case 1 when it is a single node
    assert tags.count("Case1" if k == 1 else "Case3") == 1


def test_golden_files_match_builders():
    for n, p in SU_POINTS:
        t = load_golden_triple(f"su2p2np-sppq_n{n}_p{p}.txt")
        assert serialize_triple(t) == serialize_triple(triple_for("su2p2np-sppq", n=n, p=p))
    for n in range(2, 9):
        t = load_golden_triple(f"slC-slR_n{n}.txt")
        assert parse_triple(serialize_triple(t)) == t


def test_trace_records_merged_partners():
    d = recipe_trace(triple_for("su2p2np-sppq", n=5, p=2)).to_dict()
    merged = [c for c in d["components"] if c["merged_into"]]
    assert len(merged) == 2
    assert parse(d["z_h"]) == parse("sl(2,C)^2 + sp(1)")


def _chain(r):
    nodes = tuple(str(i) for i in range(1, r + 1))
    return nodes, tuple((nodes[i], nodes[i + 1], 1) for i in range(r - 1))


def test_invalid_diagrams():
    nodes, edges = _chain(3)
    with pytest.raises(InvalidDiagram):
        SatakeDiagram(nodes, edges, frozenset({"1"}), (frozenset({"1", "3"}),))
    with pytest.raises(InvalidDiagram):
        SatakeDiagram(nodes, edges, frozenset(), (frozenset({"2"}),))
    with pytest.raises(InvalidDiagram):
        SatakeDiagram(nodes, edges, frozenset({"9"}))
    # arrows that are not a graph automorphism
    with pytest.raises(InvalidDiagram):
        validate_riemannian(SatakeDiagram(nodes, edges, frozenset(), (frozenset({"1", "2"}),)))


def test_triple_compatibility_enforced():
    nodes, edges = _chain(3)
    white = SatakeDiagram(nodes, edges, frozenset())
    black = SatakeDiagram(nodes, edges, frozenset({"2"}))
    with pytest.raises(InvalidDiagram):
        SatakeTriple(white, black, white)
    other_nodes, other_edges = _chain(2)
    with pytest.raises(InvalidDiagram):
        SatakeTriple(white, white, SatakeDiagram(other_nodes, other_edges, frozenset()))


def test_case4_is_rejected():
    nodes, edges = _chain(1)
    t = SatakeTriple(SatakeDiagram(nodes, edges, frozenset(nodes)),
                     SatakeDiagram(nodes, edges, frozenset()), SatakeDiagram(nodes, edges, frozenset()))
    with pytest.raises(Case4Detected):
        classify_component(t, ("1",))


FORMS = [(f, r) for f in "ABCD" for r in range(1, 6) if not (f == "D" and r < 3)]


@pytest.mark.parametrize("fam,r", FORMS)
def test_real_form_diagrams_classify_back(fam, r):
    for rf in real_forms(fam, r):
        got = classify_real_form(rf.diagram)
        assert isomorphic(got.name, rf.name), (rf.name, got.name)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FORMS), st.data())
def test_classification_ignores_node_names(fr, data):
    fam, r = fr
    rf = data.draw(st.sampled_from(real_forms(fam, r)))
    d = rf.diagram
    names = data.draw(st.permutations([f"v{i}" for i in range(len(d.nodes))]))
    ren = dict(zip(d.nodes, names))
    d2 = SatakeDiagram(tuple(ren[v] for v in d.nodes), tuple((ren[u], ren[v], m) for u, v, m in d.edges),
                       frozenset(ren[v] for v in d.black), tuple(frozenset(ren[v] for v in c) for c in d.arrows))
    assert isomorphic(classify_real_form(d2).name, rf.name)


def test_unknown_triple():
    with pytest.raises(UnknownDiagramClassification):
        triple_for("spC-spR", n=3)
