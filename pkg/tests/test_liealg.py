import json

import pytest
from hypothesis import given, settings, strategies as st

from srep.errors import ParseError
from srep.liealg import (
    AtomicFactor, LieAlgebraExpr, canonicalize, dim, equal, from_json, isomorphic, iso_normal_form,
    lsum, make, parse, render, to_json,
)

ONE = ["sl_R", "sl_C", "so_C", "sp_R", "sp_C", "su_compact", "so_compact", "sp_compact", "u"]
TWO = ["su", "so_pq", "sp_pq"]
ZERO = ["R", "C_abelian", "so2", "u1"]

factor = st.one_of(
    st.tuples(st.sampled_from(ZERO), st.just(())),
    st.tuples(st.sampled_from(ONE), st.tuples(st.integers(0, 7))),
    st.tuples(st.sampled_from(["su_star", "so_star"]), st.tuples(st.integers(0, 4).map(lambda x: 2 * x))),
    st.tuples(st.sampled_from(TWO), st.tuples(st.integers(0, 5), st.integers(0, 5))),
)
expr = st.lists(st.tuples(factor, st.integers(0, 3)), max_size=6).map(
    lambda items: LieAlgebraExpr((make(k, *p), e) for (k, p), e in items))


@settings(max_examples=1000, deadline=None)
@given(expr)
def test_canonicalize_idempotent(x):
    c = canonicalize(x)
    assert canonicalize(c) == c
    assert c.key(False) == x.key(False)


@settings(max_examples=300, deadline=None)
@given(expr)
def test_text_and_json_roundtrip(x):
    assert parse(render(x)) == x
    assert parse(render(x, "unicode")) == x
    assert from_json(render(x, "json")) == x
    assert from_json(to_json(x)) == x


@settings(max_examples=300, deadline=None)
@given(expr, expr)
def test_equality_ignores_order_and_splitting(x, y):
    assert x + y == y + x
    assert lsum([x, y, x]) == (x ** 2) + y
    assert equal(x + y, y + x, annotated=False)


@settings(max_examples=300, deadline=None)
@given(expr)
def test_isomorphism_keeps_dimension(x):
    assert dim(iso_normal_form(x)) == dim(x)
    assert isomorphic(x, iso_normal_form(x))


@pytest.mark.parametrize("text", ["sl(1,R)", "su(1)", "sp(0)", "so(0)", "so(1)", "so(1,0)", "sl(0,C)",
                                  "u(0)", "so*(0)", "so(0,1)"])
def test_degenerate_factors_vanish(text):
    assert parse(text) == LieAlgebraExpr()
    assert render(parse(text)) == "{0}"


def test_so2_is_its_own_kind():
    assert parse("so(2)").terms[0][0].kind == "so2"
    assert parse("so(2,0)").terms[0][0].kind == "so2"
    assert equal(parse("so(2,0)"), parse("so(0,2)"), annotated=False)
    assert parse("so(2,0)") != parse("so(0,2)")


def test_annotated_forms_render_verbatim():
    for s in ["so(2,1)", "so(1,2)", "so(0,2) + so(2,0)", "su(3,1)", "sp(2,1)", "so(3,0)"]:
        assert render(parse(s)) == s
    assert equal(parse("so(2,1)"), parse("so(1,2)"), annotated=False)


def test_multiplicities_merge():
    assert parse("R + R + so(2)^2 + so(2)") == parse("R^2 + so(2)^3")
    assert str(parse("so(2) + R")) == "R + so(2)"


def test_low_rank_isomorphisms():
    assert isomorphic(parse("so(2,1)"), parse("sl(2,R)"))
    assert isomorphic(parse("sp(1)"), parse("su(2)"))
    assert isomorphic(parse("so(3,C)"), parse("sl(2,C)"))
    assert isomorphic(parse("so(2,2)"), parse("sl(2,R)^2"))
    assert isomorphic(parse("u(3)"), parse("su(3) + so(2)"))
    assert not isomorphic(parse("sl(3,R)"), parse("su(2,1)"))
    assert parse("sp(1)") != parse("su(2)")


def test_dimensions():
    assert dim(parse("sl(3,R)")) == 8
    assert dim(parse("sl(2,C)")) == 6
    assert dim(parse("sp(2,R)")) == dim(parse("so(2,3)")) == 10
    assert dim(parse("u(3)")) == 9
    assert dim(parse("{0}")) == 0


def test_latex_render():
    assert render(parse("sl(2,C)^2 + R")) == "R + sl(2,C)^2"
    assert render(parse("sl(2,C)^2 + R"), "latex") == r"\mathbb{R}+\mathfrak{sl}(2,\mathbb{C})^{2}"
    assert render(parse("so*(4)"), "latex") == r"\mathfrak{so}^{*}(4)"
    assert render(LieAlgebraExpr(), "latex") == r"\{0\}"


@pytest.mark.parametrize("bad", ["sl(2)", "foo(3)", "su*(3)", "so(a,b)", "sl(2,R"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_from_json_rejects_garbage():
    with pytest.raises(ParseError):
        from_json(json.dumps({"factors": [{"kind": "nope", "params": [], "exp": 1}]}))
    with pytest.raises(ParseError):
        from_json({"terms": []})


def test_negative_params_rejected():
    with pytest.raises(ParseError):
        make("sl_R", -1)
    assert make("sl_R", 1) is None
    assert AtomicFactor("R").key() == make("R").key()
