"""Complete systems of representatives for W(Delta)/W(Delta^a).

Left cosets w W(Delta^a) are used throughout.  Representatives are
WeylElement values; each also carries a display label built from the word
that produced it (s_i = s_{e_i - e_{i+1}}).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import GroupTooLarge, UnsupportedEmbedding
from .rootsys import (
    DEFAULT_CAP, Root, RootSystem, WeylElement, build_root_system, closure_images, e,
    family_roots, generate_group, reflection, vadd, weyl_order,
)

Factor = tuple[str, int]


def parse_types(text: str) -> tuple[Factor, ...]:
    """'A1xA2' -> (('A',1),('A',2)); accepts 'BC_2', '(BC)_2', '×'."""
    parts = re.split(r"[x×]", text.replace(" ", "").replace("(BC)", "BC"))
    out = []
    for part in parts:
        m = re.fullmatch(r"(BC|A|B|C|D)_?\{?(\d+)\}?", part)
        if not m:
            raise UnsupportedEmbedding(f"cannot parse root-system type {part!r}")
        out.append((m.group(1), int(m.group(2))))
    return tuple(out)


def format_types(factors: Sequence[Factor], sep: str = "x") -> str:
    return sep.join(f"{f}{r}" for f, r in factors)


def _coord_count(fam: str, rank: int) -> int:
    return rank + 1 if fam == "A" else rank


_PRODUCTS = {
    "A": {("A", "A")},
    "B": {("D", "B"), ("B", "B"), ("B", "D")},
    "C": {("C", "C")},
    "D": {("D", "D")},
    "BC": {("C", "BC"), ("BC", "C"), ("BC", "BC")},
}


@dataclass(frozen=True)
class EmbeddedSubsystem:
    ambient: RootSystem
    factors: tuple[tuple[str, int, tuple[int, ...]], ...]
    sub_roots: frozenset
    variant: str = ""

    @property
    def types(self) -> tuple[Factor, ...]:
        return tuple((f, r) for f, r, _ in self.factors)

    @property
    def label(self) -> str:
        s = format_types(self.types, "×")
        return s + (f" [{self.variant}]" if self.variant else "")

    @property
    def kind(self) -> str:
        """Dispatch tag for the coset construction."""
        amb = self.ambient
        if len(self.factors) == 1:
            fam, r, _ = self.factors[0]
            if (fam, r) == (amb.family, amb.rank) or (amb.family == "BC" and fam == "B"):
                return "equal"
            return f"{amb.family}/{fam}"
        fams = [f for f, _, _ in self.factors]
        if amb.family == "A":
            return "A/AxA"
        return "product-D" if "D" in fams else "product"

    def simple_roots(self) -> list[Root]:
        return simple_roots_of(self.sub_roots)


def simple_roots_of(roots) -> list[Root]:
    """Simple roots for the lexicographic positive system of a root set."""
    pos = sorted(r for r in roots if next(c for c in r if c) > 0)
    pos_set = set(pos)
    simple = []
    for r in pos:
        dec = False
        for a in pos:
            b = tuple(x - y for x, y in zip(r, a))
            if b in pos_set:
                dec = True
                break
        if not dec:
            simple.append(r)
    return simple


def embed_subsystem(ambient: RootSystem, descriptor, variant: str = "") -> EmbeddedSubsystem:
    """Place the subsystem factors on consecutive coordinate blocks.

    `variant="remark"` selects the alternative A_{n-1} inside D_n spanned
    by e_i - e_j (i, j <= n-1) and e_i + e_n.
    """
    factors = parse_types(descriptor) if isinstance(descriptor, str) else tuple(descriptor)
    amb = ambient
    n = amb.dim
    fams = tuple(f for f, _ in factors)
    ok = False
    if len(factors) == 1:
        fam, r = factors[0]
        ok = ((fam, r) == (amb.family, amb.rank)
              or (amb.family == "BC" and (fam, r) == ("B", amb.rank))
              or (amb.family == "C" and (fam, r) == ("D", amb.rank) and r >= 1)
              or (amb.family in ("C", "D") and (fam, r) == ("A", amb.rank - 1)))
    elif len(factors) == 2 and fams in _PRODUCTS.get(amb.family, ()):
        ok = sum(_coord_count(f, r) for f, r in factors) == n
        ok = ok and all(r >= 1 for f, r in factors if f == "D")
        ok = ok and all(r >= 0 for _, r in factors)
    if variant and not (variant == "remark" and amb.family == "D" and fams == ("A",)):
        ok = False
    if not ok:
        raise UnsupportedEmbedding(
            f"{format_types(factors)} in {amb.label}" + (f" [{variant}]" if variant else ""))
    placed = []
    roots: set[Root] = set()
    start = 1
    for fam, r in factors:
        k = _coord_count(fam, r)
        coords = tuple(range(start, start + k))
        placed.append((fam, r, coords))
        roots |= family_roots(fam, r, coords, n)
        start += k
    if variant == "remark":
        flip = reflection(e(n, n))
        roots = {flip(v) for v in roots}
    return EmbeddedSubsystem(amb, tuple(placed), frozenset(roots), variant)


# ------------------------------------------------------------ representatives

@dataclass
class CosetSystem:
    reps: list[WeylElement]
    labels: list[str]
    ambient: RootSystem
    sub: EmbeddedSubsystem

    def __len__(self) -> int:
        return len(self.reps)


def _s(i: int, n: int) -> WeylElement:
    return reflection(vadd(e(i, n), e(i + 1, n, -1)))


def a_words(l: int, p: int) -> list[tuple[int, ...]]:
    """Words for W(A_{l-1})/W(A_{p-1} x A_{l-p-1}) by the binomial recursion."""
    return list(_a_words(l, p))


@lru_cache(maxsize=None)
def _a_words(l: int, p: int) -> tuple[tuple[int, ...], ...]:
    if p <= 0 or p >= l:
        return ((),)
    tail = tuple(range(l - 1, p - 1, -1))  # s_{l-1} s_{l-2} ... s_p
    return _a_words(l - 1, p) + tuple(w + tail for w in _a_words(l - 1, p - 1))


def word_label(word: Sequence[int], prefix: str = "s") -> str:
    return "id" if not word else "".join(f"{prefix}{a}" for a in word)


def _word_elt(word: Sequence[int], n: int) -> WeylElement:
    w = WeylElement.identity(n)
    for a in word:
        w = w * _s(a, n)
    return w


def t_element(i: int, n: int) -> WeylElement:
    """t_i = s_i ... s_{n-1} s_{2e_n} s_{n-1} ... s_i (sign change of e_i)."""
    w = _word_elt(range(i, n), n) * reflection(e(n, n, 2))
    return w * _word_elt(range(n - 1, i - 1, -1), n)


def d_element(i: int, n: int) -> WeylElement:
    """s_{e_i - e_{i+1}} s_{e_i + e_{i+1}} (sign change of e_i and e_{i+1})."""
    return _s(i, n) * reflection(vadd(e(i, n), e(i + 1, n)))


def _bits(k: int):
    for mask in range(2 ** k):
        yield [(mask >> (k - 1 - j)) & 1 for j in range(k)]


def coset_reps(ambient: RootSystem, sub: EmbeddedSubsystem) -> CosetSystem:
    """Explicit representatives following the construction for each type."""
    if sub.ambient != ambient:
        raise UnsupportedEmbedding("subsystem belongs to a different ambient system")
    n = ambient.dim
    kind = sub.kind
    ident = WeylElement.identity(n)
    reps: list[WeylElement] = []
    labels: list[str] = []
    if kind == "equal":
        reps, labels = [ident], ["id"]
    elif kind == "C/A":
        ts = [t_element(i, n) for i in range(1, n + 1)]
        for ls in _bits(n):
            w = ident
            for t, l in zip(ts, ls):
                if l:
                    w = w * t
            reps.append(w)
            labels.append("".join(f"t{i}" for i, l in enumerate(ls, 1) if l) or "id")
    elif kind == "C/D":
        reps = [ident, reflection(e(n, n, 2))]
        labels = ["id", f"s_2e{n}"]
    elif kind == "D/A":
        ds = [d_element(i, n) for i in range(1, n)]
        for ls in _bits(n - 1):
            w = ident
            for d, l in zip(ds, ls):
                if l:
                    w = w * d
            reps.append(w)
            labels.append("".join(f"d{i}" for i, l in enumerate(ls, 1) if l) or "id")
    elif kind in ("A/AxA", "product", "product-D"):
        p = len(sub.factors[0][2])
        words = a_words(n, p)
        base = [_word_elt(w, n) for w in words]
        base_labels = [word_label(w) for w in words]
        reps, labels = list(base), list(base_labels)
        if kind == "product-D":
            # with an empty second block the D block is everything: flip one sign
            c, tag = (d_element(p, n), f"d{p}") if 1 <= p < n else (reflection(e(n, n)), f"s_e{n}")
            reps += [w * c for w in base]
            labels += [(lab if lab != "id" else "") + tag for lab in base_labels]
    else:
        raise UnsupportedEmbedding(f"no construction for {sub.label} in {ambient.label}")
    return CosetSystem(reps, labels, ambient, sub)


def index_formula(ambient: RootSystem, sub: EmbeddedSubsystem) -> int:
    """Closed-form index by type."""
    n = ambient.dim
    kind = sub.kind
    if kind == "equal":
        return 1
    if kind == "C/D":
        return 2
    if kind == "C/A":
        return 2 ** n
    if kind == "D/A":
        return 2 ** (n - 1)
    p = len(sub.factors[0][2])
    return comb(n, p) * (2 if kind == "product-D" else 1)


def coset_index(pair_or_types, sub=None) -> int:
    """Index of W(Delta^a) in W(Delta).

    Accepts a catalog spec (anything with an `index` attribute), an
    (ambient, EmbeddedSubsystem) pair, or type strings ('C3', 'A2').
    """
    if sub is None and not isinstance(pair_or_types, tuple) and hasattr(pair_or_types, "index"):
        return pair_or_types.index
    if sub is None:
        pair_or_types, sub = pair_or_types
    if isinstance(pair_or_types, str):
        (fam, r), = parse_types(pair_or_types)
        pair_or_types = build_root_system(fam, r)
    if not isinstance(sub, EmbeddedSubsystem):
        sub = embed_subsystem(pair_or_types, sub)
    return index_formula(pair_or_types, sub)


# ---------------------------------------------------------------- membership

def in_subgroup(w: WeylElement, sub: EmbeddedSubsystem, method: str = "structural",
                cap: int = DEFAULT_CAP) -> bool:
    """Membership of w (an element of W(Delta)) in W(Delta^a)."""
    if method == "brute":
        return w in subgroup_set(sub, cap)
    kind = sub.kind
    if kind == "equal":
        return True
    if sub.variant == "remark":
        flip = reflection(e(sub.ambient.dim, sub.ambient.dim))
        w = flip * w * flip
    for fam, _, coords in sub.factors:
        block = {c - 1 for c in coords}
        if any(w.perm[i] not in block for i in block):
            return False
        neg = sum(1 for i in block if w.signs[i] < 0)
        if fam == "A" and neg:
            return False
        if fam == "D" and neg % 2:
            return False
    return True


_SUBGROUP_CACHE: dict = {}


def subgroup_set(sub: EmbeddedSubsystem, cap: int = DEFAULT_CAP) -> frozenset:
    key = (sub.ambient.family, sub.ambient.rank, sub.factors, sub.variant)
    if key not in _SUBGROUP_CACHE:
        gens = [reflection(r) for r in simple_roots_of(sub.sub_roots)] if sub.sub_roots else []
        _SUBGROUP_CACHE[key] = frozenset(generate_group(gens, sub.ambient.dim, cap))
    return _SUBGROUP_CACHE[key]


_GROUP_CACHE: dict = {}


def ambient_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """Brute-force W(Delta) from the reflections of a generic simple system."""
    key = (rs.family, rs.rank)
    if weyl_order(rs.family, rs.rank) > cap:
        raise GroupTooLarge(f"|W({rs.label})| = {weyl_order(rs.family, rs.rank)} exceeds cap {cap}")
    if key not in _GROUP_CACHE:
        gens = [reflection(r) for r in simple_roots_of(rs.roots)]
        _GROUP_CACHE[key] = generate_group(gens, rs.dim, cap)
    return _GROUP_CACHE[key]


_ORDER_CACHE: dict = {}


def _closure_order(key, roots, dim: int, cap: int) -> int:
    """Order of the group generated by the simple reflections of `roots`."""
    if key not in _ORDER_CACHE:
        gens = [reflection(r) for r in simple_roots_of(roots)] if roots else []
        _ORDER_CACHE[key] = len(closure_images(gens, dim, cap))
    return _ORDER_CACHE[key]


def brute_force_index(ambient: RootSystem, sub: EmbeddedSubsystem, cap: int = DEFAULT_CAP) -> int:
    """|W(Delta)| / |W(Delta^a)|, both orders found by generating the groups."""
    if weyl_order(ambient.family, ambient.rank) > cap:
        raise GroupTooLarge(f"|W({ambient.label})| exceeds cap {cap}")
    big = _closure_order(("amb", ambient.family, ambient.rank), ambient.roots, ambient.dim, cap)
    small = _closure_order(("sub", ambient.family, ambient.rank, sub.factors, sub.variant),
                           sub.sub_roots, ambient.dim, cap)
    if big % small:
        raise ArithmeticError("subgroup order does not divide group order")
    return big // small


def brute_force_partition(ambient: RootSystem, sub: EmbeddedSubsystem,
                          cap: int = DEFAULT_CAP) -> list[frozenset]:
    """Partition W(Delta) into left cosets of W(Delta^a)."""
    group = ambient_group(ambient, cap)
    h = subgroup_set(sub, cap)
    seen: set = set()
    classes = []
    for g in group:
        if g in seen:
            continue
        c = frozenset(g * x for x in h)
        seen |= c
        classes.append(c)
    return classes


@dataclass
class VerifyReport:
    count: int
    index: int
    group_order: int
    subgroup_order: int
    count_matches_index: bool
    pairwise_inequivalent: bool
    covers_group: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.count_matches_index and self.pairwise_inequivalent and self.covers_group

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in (
            "count", "index", "group_order", "subgroup_order", "count_matches_index",
            "pairwise_inequivalent", "covers_group", "ok", "failures")}


def verify_complete_system(cs: CosetSystem, cap: int = DEFAULT_CAP) -> VerifyReport:
    """Check a representative list against the brute-force group."""
    group = set(ambient_group(cs.ambient, cap))
    h = subgroup_set(cs.sub, cap)
    idx = index_formula(cs.ambient, cs.sub)
    failures = []
    inequiv = True
    for a in range(len(cs.reps)):
        inv = cs.reps[a].inverse()
        for b in range(a + 1, len(cs.reps)):
            if inv * cs.reps[b] in h:
                inequiv = False
                failures.append(f"{cs.labels[a]} ~ {cs.labels[b]}")
    union = {r * x for r in cs.reps for x in h}
    covers = union == group
    if not covers:
        failures.append(f"union of cosets has {len(union)} of {len(group)} elements")
    count_ok = len(cs.reps) == idx == len(group) // len(h)
    if not count_ok:
        failures.append(f"count {len(cs.reps)}, index {idx}, |W|/|Wa| {len(group) // len(h)}")
    return VerifyReport(len(cs.reps), idx, len(group), len(h), count_ok, inequiv, covers, failures)
