"""Golden suite: every item compares computed output against embedded data."""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from . import golden
from .cosets import (
    _word_elt, brute_force_index, brute_force_partition, coset_reps, embed_subsystem,
    in_subgroup, index_formula, parse_types,
)
from .liealg import parse
from .orbits import classify_h_theta, local_orbit_types
from .pairs import FAMILIES, lookup_pair, parse_selector, sweep
from .rootsys import DEFAULT_CAP, build_root_system, parse_root, standard_simple_system
from .satake import golden_dir, load_golden_triple, recipe_run


@dataclass
class VerifyItem:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"item": self.name, "ok": self.ok, "detail": self.detail}


def check_index_family(family_id: str, max_rank: int = 6, cap: int = DEFAULT_CAP) -> VerifyItem:
    """Closed-form index against |W(Delta)| / |W(Delta^a)| over a sweep."""
    bad, count = [], 0
    for spec in sweep(family_id, max_rank=max_rank):
        amb, sub = spec.ambient(), spec.subsystem()
        brute = brute_force_index(amb, sub, cap)
        count += 1
        if not spec.index == index_formula(amb, sub) == brute:
            bad.append(f"{spec.slug}: {spec.index} vs {brute}")
    return VerifyItem(f"index:{family_id}", not bad, f"{count} instances" + ("; " + "; ".join(bad) if bad else ""))


def check_example_a4() -> VerifyItem:
    data = golden.example_a4()
    (fam, r), = parse_types(data["ambient"])
    amb = build_root_system(fam, r)
    sub = embed_subsystem(amb, data["sub"])
    cs = coset_reps(amb, sub)
    words = [tuple(int(x) for x in re.findall(r"\d", w)) if w != "id" else () for w in data["words"]]
    expected = [_word_elt(w, amb.dim) for w in words]
    matched = set()
    for g in expected:
        hit = [i for i, x in enumerate(cs.reps) if in_subgroup(x.inverse() * g, sub)]
        matched.update(hit)
    classes = brute_force_partition(amb, sub)
    ok = len(cs.reps) == len(expected) == len(matched) == len(classes) == 10
    same_labels = cs.labels == data["words"]
    return VerifyItem("example:A4/A1xA2", ok and same_labels,
                      f"{len(cs.reps)} reps, {len(classes)} classes, labels match: {same_labels}")


def check_sl4r_blocks() -> list[VerifyItem]:
    data = golden.table_a4_sl4r()
    spec = parse_selector(data["pair"])
    table = local_orbit_types(spec)
    dim = spec.ambient().dim
    out = []
    for blk in data["blocks"]:
        rows = table.block(blk["w"])
        bad = []
        base = tuple(parse_root(a, dim) for a in blk["base"])
        if rows and rows[0].base != base:
            bad.append("base differs")
        for want, row in zip(blk["rows"], rows):
            theta = tuple(parse_root(a, dim) for a in want["theta"])
            exp = parse(want["h_theta"])
            if set(theta) != set(row.theta) or row.result.h_theta != exp:
                bad.append(f"{want['theta']}: {row.result.h_theta} vs {want['h_theta']}")
        if len(rows) != len(blk["rows"]):
            bad.append(f"{len(rows)} rows vs {len(blk['rows'])}")
        out.append(VerifyItem(f"sl4R-so22:{blk['w']}", not bad, "; ".join(bad) or f"{len(rows)} rows"))
    return out


def check_htheta_block(blk: dict) -> VerifyItem:
    """Classifier output against the evaluated template on every Theta at each point."""
    bad, count = [], 0
    for pt in blk["points"]:
        spec = lookup_pair(blk["family_id"], pt)
        (fam, r), = spec.delta
        tv = {k: golden.arith(v, {**pt, "r": r}) for k, v in blk["vars"].items()}
        cs = coset_reps(spec.ambient(), spec.subsystem())
        if len(cs.reps) != len(blk["reps"]):
            bad.append(f"{pt}: {len(cs.reps)} representatives")
        psi = standard_simple_system(spec.ambient())
        for w in cs.reps:
            base = [w(a) for a in psi]
            for mask in range(2 ** r):
                removed = [i + 1 for i in range(r) if not mask >> i & 1]
                rd = golden.removal_data(fam, r, removed)
                if rd is None:
                    continue
                kind, kv, sizes = rd
                exp = golden.evaluate_template(blk[kind] if kind == "last" else blk["diff"], {**tv, **kv}, sizes)
                got = classify_h_theta(spec, w, [a for i, a in enumerate(base) if mask >> i & 1])
                count += 1
                if got != exp:
                    bad.append(f"{pt} removed {removed}: {got} vs {exp}")
    name = f"htheta:{blk['block']}:{blk['family_id']}" + (f":{blk['where']}" if blk["where"] else "")
    return VerifyItem(name, not bad, "; ".join(bad[:3]) or f"{count} rows")


_TRIPLE_FILE = re.compile(r"^(?P<fid>[A-Za-z0-9-]+)_(?P<params>.*)\.txt$")


def check_triple_file(path: Path) -> VerifyItem:
    m = _TRIPLE_FILE.match(path.name)
    params = {k: int(v) for k, v in re.findall(r"([a-z])(\d+)", m.group("params"))}
    spec = lookup_pair(m.group("fid"), params)
    got = recipe_run(load_golden_triple(path.name))
    ok = got == spec.hpis_expr
    return VerifyItem(f"hpis:{path.stem}", ok, f"{got} vs {spec.hpis_expr}")


def golden_items(max_rank: int = 6, cap: int = DEFAULT_CAP) -> list[VerifyItem]:
    """The full suite in a stable order."""
    items = [check_index_family(fid, max_rank, cap) for fid in FAMILIES]
    items.append(check_example_a4())
    items += check_sl4r_blocks()
    items += [check_htheta_block(b) for b in golden.htheta_blocks()]
    files = sorted((golden_dir() / "satake").glob("*.txt"))
    items += [check_triple_file(p) for p in files]
    return items
