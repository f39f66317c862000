import itertools

import pytest
from hypothesis import given, settings, strategies as st

from srep.errors import NotARoot, UnsupportedRank
from srep.rootsys import (
    WeylElement, build_root_system, dot, family_root_count, format_root, generate_weyl,
    parse_root, positive_roots, reflection, standard_simple_system, weyl_order,
)

from conftest import FAMILY_RANKS


def _pattern_roots(fam, n):
    """Roots written out from the coordinate patterns, independently of the library."""
    dim = n + 1 if fam == "A" else n
    out = set()

    def vec(pairs):
        v = [0] * dim
        for i, c in pairs:
            v[i] += c
        return tuple(v)
    for i, j in itertools.permutations(range(dim), 2):
        out.add(vec([(i, 1), (j, -1)]))
        if fam != "A" and i < j:
            out |= {vec([(i, 1), (j, 1)]), vec([(i, -1), (j, -1)])}
    if fam in ("B", "BC"):
        out |= {vec([(i, s)]) for i in range(dim) for s in (1, -1)}
    if fam in ("C", "BC"):
        out |= {vec([(i, 2 * s)]) for i in range(dim) for s in (1, -1)}
    return out


@pytest.mark.parametrize("fam,r", FAMILY_RANKS)
def test_roots_match_patterns_and_counts(fam, r):
    rs = build_root_system(fam, r)
    assert set(rs.roots) == _pattern_roots(fam, r)
    assert len(rs) == family_root_count(fam, r)
    assert all(tuple(-x for x in v) in rs for v in rs.roots)


@pytest.mark.parametrize("fam,r", FAMILY_RANKS)
def test_reflections_preserve_roots(fam, r):
    rs = build_root_system(fam, r)
    for a in rs.roots:
        s = reflection(a)
        assert {s(v) for v in rs.roots} == set(rs.roots)
        assert s(a) == tuple(-x for x in a)


@pytest.mark.parametrize("fam,r", FAMILY_RANKS)
def test_simple_system_expresses_every_root(fam, r):
    rs = build_root_system(fam, r)
    psi = standard_simple_system(rs)
    assert len(psi) == r
    import sympy
    m = sympy.Matrix([list(a) for a in psi]).T
    for v in rs.roots:
        sol, params = m.gauss_jordan_solve(sympy.Matrix(v))
        assert not params
        coeffs = list(sol)
        assert all(c.is_integer for c in coeffs)
        assert all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)
    assert len(positive_roots(rs)) * 2 == len(rs)


def test_d1_rejected():
    with pytest.raises(UnsupportedRank):
        build_root_system("D", 1)


@pytest.mark.parametrize("fam,r", [(f, r) for f, r in FAMILY_RANKS if r <= 4])
def test_generated_group_order(fam, r):
    group = generate_weyl(build_root_system(fam, r))
    assert len(group) == len(set(group)) == weyl_order(fam, r)


def test_type_a_elements_are_unsigned():
    for w in generate_weyl(build_root_system("A", 3)):
        assert set(w.signs) == {1}


def test_root_text_roundtrip():
    for v in build_root_system("BC", 3).roots:
        assert parse_root(format_root(v), 3) == v
    assert format_root((0, 1, -1)) == "e2-e3"
    with pytest.raises(NotARoot):
        parse_root("e7", 3)


def _elements(n, k):
    one = st.tuples(st.permutations(range(n)), st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return st.lists(one.map(lambda t: WeylElement(tuple(t[0]), tuple(t[1]))), min_size=k, max_size=k)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: _elements(n, 3)))
def test_group_axioms(elts):
    a, b, c = elts
    n = a.dim
    ident = WeylElement.identity(n)
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == ident == a.inverse() * a
    v = tuple(range(1, n + 1))
    assert (a * b)(v) == a(b(v))
    assert dot(a(v), a(v)) == dot(v, v)
