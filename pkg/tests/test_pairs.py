import json

import pytest

from srep.errors import ConstraintViolated, SignatureDataUnavailable, UnknownPair
from srep.liealg import canonicalize, parse
from srep.pairs import (
    C_DUAL, FAMILIES, c_dual, catalog_json, lookup_pair, parse_selector, signature_display, signatures,
    sweep,
)
from srep.rootsys import build_root_system

# (family, params, HPIS as printed)
HPIS_ROWS = [
    ("slC-slR", {"n": 5}, "R^2 + so(2)^2"),
    ("slR2-slR", {"n": 4}, "R^3"),
    ("slC-soC", {"n": 4}, "{0}"),
    ("sl2nC-sustar", {"n": 3}, "R^2 + so(2)^3"),
    ("sustar2-sustar", {"n": 3}, "R^2 + sp(1)^3"),
    ("sl2nC-spC", {"n": 2}, "sp(1,C)^2"),
    ("slC-supq", {"n": 5, "p": 2}, "so(2)^4"),
    ("supq2-supq", {"n": 7, "p": 2}, "R^2 + so(2)^2 + su(3)"),
    ("supq2-supq", {"n": 6, "p": 3}, "R^3 + so(2)^2"),
    ("slC-slCslC", {"n": 7, "p": 2}, "C^2 + sl(3,C)"),
    ("slC-slCslC", {"n": 6, "p": 3}, "C^2"),
    ("soC2n-sostar", {"n": 4}, "so(2)^4"),
    ("sostar2-sostar", {"n": 5}, "R^2 + su(2)^2 + so(2)"),
    ("sostar2-sostar", {"n": 4}, "R^2 + su(2)^2"),
    ("soC2n-slC", {"n": 5}, "sl(2,C)^2 + C"),
    ("soC2n-slC", {"n": 4}, "sl(2,C)^2"),
]


@pytest.mark.parametrize("fid,params,text", HPIS_ROWS)
def test_hpis_rows(fid, params, text):
    assert lookup_pair(fid, params).hpis_expr == parse(text)


@pytest.mark.parametrize("fid", sorted(FAMILIES))
def test_specs_resolve_to_one_row(fid):
    specs = list(sweep(fid, max_rank=5))
    assert specs, fid
    for spec in specs:
        q = spec.param_dict
        assert spec.family.base(**q)
        assert sum(1 for r in spec.family.rows if r.applies(**q)) == 1
        assert canonicalize(spec.hpis_expr) == spec.hpis_expr
        amb = spec.ambient()
        assert spec.delta == ((amb.family, amb.rank),)
        assert spec.subsystem().sub_roots <= amb.roots
        assert parse_selector(spec.slug) == spec


def test_catalog_covers_every_family():
    cat = catalog_json()
    assert {c["family_id"] for c in cat} == set(FAMILIES)
    json.dumps(cat)
    assert len(FAMILIES) == 51


def test_alias_and_selector_forms():
    a = parse_selector("sl4R-so22")
    b = parse_selector("slR-sopq:n=4:p=2")
    c = parse_selector("slR-sopq", n=4, p=2)
    assert a == b == c
    assert a.name == "(sl(4,R), so(2,2))"
    assert a.index == 6


def test_lookup_errors():
    with pytest.raises(UnknownPair):
        lookup_pair("nosuch", {"n": 2})
    with pytest.raises(ConstraintViolated):
        lookup_pair("supq2-supq", {"n": 3, "p": 2})
    with pytest.raises(ConstraintViolated):
        lookup_pair("slR-sopq", {"n": 4})


def test_exact_signatures_sl4r():
    spec = parse_selector("sl4R-so22")
    table = signatures(spec)
    rs = build_root_system("A", 3)
    assert set(table.entries) == set(rs.roots)
    for mp, mm in table.entries.values():
        assert mp + mm >= 1
    assert table.delta_a() == spec.subsystem().sub_roots
    assert [s for _, s in signature_display(spec)] == [(1, 0), (0, 1), (1, 0)]


def test_signature_support_only():
    spec = lookup_pair("spC-spR", {"n": 3})
    with pytest.raises(SignatureDataUnavailable):
        signatures(spec)
    assert signatures(spec, support_only=True).delta_a() == spec.subsystem().sub_roots


def test_c_dual_is_an_involution():
    for fid, target in C_DUAL.items():
        assert C_DUAL[target] == fid
    spec = lookup_pair("slR2-slR", {"n": 4})
    dual = c_dual(spec)
    assert dual.family_id == "slC-slR"
    assert c_dual(dual) == spec
    with pytest.raises(UnknownPair):
        c_dual(lookup_pair("spR-slR", {"n": 2}))
