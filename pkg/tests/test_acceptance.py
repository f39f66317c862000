"""Acceptance criteria 1-8; each prints one PASS/FAIL line."""
import random
import time
from math import comb

import pytest
import sympy

from srep import golden
from srep.cosets import (
    _word_elt, a_words, brute_force_index, brute_force_partition, coset_reps, embed_subsystem,
    in_subgroup, index_formula, verify_complete_system,
)
from srep.liealg import LieAlgebraExpr, canonicalize, isomorphic, make, parse
from srep.orbits import classify_h_theta, delta_theta, elliptic_orbit_types, local_orbit_types
from srep.pairs import FAMILIES, lookup_pair, parse_selector, sweep
from srep.rootsys import build_root_system, generate_weyl, parse_root, standard_simple_system
from srep.satake import load_golden_triple, recipe_run
from srep.verify import check_htheta_block

from test_orbits import same_up_to_rank_one


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def test_1_index_sweep(report):
    t0 = time.perf_counter()
    bad, count = [], 0
    for fid in FAMILIES:
        for spec in sweep(fid, max_rank=6):
            amb, sub = spec.ambient(), spec.subsystem()
            count += 1
            if not spec.index == index_formula(amb, sub) == brute_force_index(amb, sub):
                bad.append(spec.slug)
    dt = time.perf_counter() - t0
    report(1, not bad and dt < 30, f"{count} instances, {len(bad)} mismatches, {dt:.1f}s")


def test_2_a4_example(report):
    t0 = time.perf_counter()
    data = golden.example_a4()
    amb = build_root_system("A", 4)
    sub = embed_subsystem(amb, "A1xA2")
    cs = coset_reps(amb, sub)
    words = [tuple(int(c) for c in w[1::2]) if w != "id" else () for w in data["words"]]
    listed = [_word_elt(w, 5) for w in words]
    # coset-equivalence as sets of cosets: a bijection rep <-> listed word
    match = [[j for j, g in enumerate(listed) if in_subgroup(x.inverse() * g, sub, "brute")] for x in cs.reps]
    bijective = all(len(m) == 1 for m in match) and sorted(m[0] for m in match) == list(range(10))
    classes = brute_force_partition(amb, sub)
    sizes = {len(c) for c in classes}
    dt = time.perf_counter() - t0
    ok = len(cs.reps) == 10 and bijective and len(classes) == 10 and sizes == {12} and dt < 1
    report(2, ok, f"{len(cs.reps)} reps, bijective {bijective}, {len(classes)} classes of {sizes}, {dt:.2f}s")


def test_3_sign_change_constructions(report):
    t0 = time.perf_counter()
    results = []
    for n in range(1, 6):
        c = build_root_system("C", n)
        results.append(("C/A", n, verify_complete_system(coset_reps(c, embed_subsystem(c, f"A{n - 1}")))))
        results.append(("C/D", n, verify_complete_system(coset_reps(c, embed_subsystem(c, f"D{n}")))))
        if n >= 2:
            d = build_root_system("D", n)
            results.append(("D/A", n, verify_complete_system(coset_reps(d, embed_subsystem(d, f"A{n - 1}")))))
    counts = {(k, n): r.count for k, n, r in results}
    expected = all(counts[("C/A", n)] == 2 ** n and counts[("C/D", n)] == 2 for n in range(1, 6)) and all(
        counts[("D/A", n)] == 2 ** (n - 1) for n in range(2, 6))
    dt = time.perf_counter() - t0
    ok = all(r.ok for _, _, r in results) and expected and dt < 10
    report(3, ok, f"{len(results)} systems, all oracle-verified {all(r.ok for *_, r in results)}, {dt:.1f}s")


def test_4_sl4r_table(report):
    t0 = time.perf_counter()
    data = golden.table_a4_sl4r()
    spec = parse_selector(data["pair"])
    table = local_orbit_types(spec)
    rows = bad = 0
    for blk in data["blocks"]:
        got = table.block(blk["w"])
        base = tuple(parse_root(a, 4) for a in blk["base"])
        if len(got) != len(blk["rows"]) or got[0].base != base:
            bad += 1
        for want, row in zip(blk["rows"], got):
            rows += 1
            theta = {parse_root(a, 4) for a in want["theta"]}
            # annotated equality: so(2,0) and so(0,2) stay distinct
            if theta != set(row.theta) or row.result.h_theta != parse(want["h_theta"]):
                bad += 1
    dt = time.perf_counter() - t0
    ok = len(data["blocks"]) == 6 and rows == 48 and not bad and dt < 1
    report(4, ok, f"{len(data['blocks'])} blocks, {rows} rows, {bad} mismatches, {dt:.2f}s")


def test_5_recipe(report):
    bad, count = [], 0
    for p in (1, 2, 3):
        for n in range(2 * p, 9):
            got = recipe_run(load_golden_triple(f"su2p2np-sppq_n{n}_p{p}.txt"))
            want = parse(f"sl(2,C)^{p} + sp({n - 2 * p})")
            count += 1
            if not got == want == lookup_pair("su2p2np-sppq", {"n": n, "p": p}).hpis_expr:
                bad.append((n, p, str(got)))
    for n in range(2, 9):
        got = recipe_run(load_golden_triple(f"slC-slR_n{n}.txt"))
        want = parse(f"R^{(n - 1) // 2} + so(2)^{n // 2}")
        count += 1
        if not got == want == lookup_pair("slC-slR", {"n": n}).hpis_expr:
            bad.append((n, str(got)))
    report(5, not bad, f"{count} triples, mismatches {bad}")


def test_6_elliptic(report):
    bad = []
    for n in range(2, 9):
        got = elliptic_orbit_types(lookup_pair("slR2-slR", {"n": n})).principal
        if got != parse(f"R^{(n - 1) // 2} + so(2)^{n // 2}"):
            bad.append((n, str(got)))
    report(6, not bad, f"n=2..8, mismatches {bad}")


def _random_expr(rng):
    kinds = [("R", 0), ("C_abelian", 0), ("so2", 0), ("u1", 0), ("u", 1), ("sl_R", 1), ("sl_C", 1),
             ("so_C", 1), ("sp_R", 1), ("sp_C", 1), ("su_compact", 1), ("so_compact", 1), ("sp_compact", 1),
             ("su_star", -1), ("so_star", -1), ("su", 2), ("so_pq", 2), ("sp_pq", 2)]
    items = []
    for _ in range(rng.randint(0, 6)):
        k, a = rng.choice(kinds)
        params = [2 * rng.randint(0, 4)] if a == -1 else [rng.randint(0, 7) for _ in range(a)]
        items.append((make(k, *params), rng.randint(0, 3)))
    return LieAlgebraExpr(items)


def _span_oracle(roots, theta):
    if not theta:
        return frozenset()
    null = sympy.Matrix([list(t) for t in theta]).nullspace()
    return frozenset(v for v in roots if all(sum(a * b for a, b in zip(nv, v)) == 0 for nv in null))


def test_7_property_suite(report):
    rng = random.Random(7)
    # Theta empty gives the HPIS for every family and representative
    hpis_bad, reps = [], 0
    for fid in FAMILIES:
        for spec in sweep(fid, max_rank=4, max_param=6):
            for label in coset_reps(spec.ambient(), spec.subsystem()).labels:
                reps += 1
                if not same_up_to_rank_one(classify_h_theta(spec, label, []), spec.hpis_expr):
                    hpis_bad.append((spec.slug, label))
    # Delta_Theta against a per-root span oracle
    dt_bad = 0
    groups = {}
    for _ in range(1000):
        fam = rng.choice(["A", "B", "C", "D", "BC"])
        r = rng.randint(2 if fam == "D" else 1, 5)
        rs = build_root_system(fam, r)
        roots = sorted(rs.roots)
        if rng.random() < 0.5:
            if (fam, r) not in groups:
                groups[(fam, r)] = generate_weyl(rs) if r <= 4 else None
            g = groups[(fam, r)]
            w = rng.choice(g) if g else None
            base = [w(a) if w else a for a in standard_simple_system(rs)]
            theta = [a for a in base if rng.random() < 0.5]
        else:
            theta = rng.sample(roots, rng.randint(0, r))
        if delta_theta(rs, theta) != _span_oracle(roots, theta):
            dt_bad += 1
    # canonicalize idempotence
    canon_bad = 0
    for _ in range(1000):
        x = _random_expr(rng)
        c = canonicalize(x)
        if canonicalize(c) != c:
            canon_bad += 1
    # binomial recursion for the A-type representatives
    rec_bad = []
    for n in range(2, 9):
        for p in range(1, n):
            k = len(a_words(n, p))
            if not k == len(a_words(n - 1, p)) + len(a_words(n - 1, p - 1)) == comb(n, p):
                rec_bad.append((n, p))
    ok = not hpis_bad and not dt_bad and not canon_bad and not rec_bad
    report(7, ok, f"HPIS at {reps} representatives ({len(hpis_bad)} bad); delta_theta 1000 ({dt_bad} bad); "
                  f"canonicalize 1000 ({canon_bad} bad); recursion ({len(rec_bad)} bad)")


def test_8_golden_tables(report):
    t0 = time.perf_counter()
    items = [check_htheta_block(b) for b in golden.htheta_blocks()]
    points = sum(len(b["points"]) for b in golden.htheta_blocks())
    dt = time.perf_counter() - t0
    bad = [i.name for i in items if not i.ok]
    report(8, not bad and dt < 5, f"{len(items)} blocks, {points} points, failing {bad}, {dt:.1f}s")
