"""Local orbit types of hyperbolic and elliptic orbits.

For each coset representative w of W(Delta)/W(Delta^a) and each subset
Theta of w.Psi the isotropy subalgebra h_Theta is classified; equal values
are merged.  Classification is table driven: closed-form rows indexed by
the removal pattern of w^{-1}.Theta inside Psi, a signature rule for
(sl(n,R), so(p,n-p)), and the two facts valid for every pair (Theta empty
gives the HPIS, Theta = w.Psi gives h).  Anything else is reported as
structural-only together with the type of Delta_Theta.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import networkx as nx

from .cosets import CosetSystem, coset_reps
from .errors import NonSimpleTheta, ParseError, UnsupportedFamily
from .liealg import LieAlgebraExpr, parse, render
from .pairs import SymmetricPairSpec, _subst, c_dual
from .rootsys import Root, RootSystem, WeylElement, dot, format_root, parse_root, standard_simple_system


# ------------------------------------------------------------ span algebra

def _echelon(vectors: Sequence[Sequence[int]]) -> list[tuple[int, list[Fraction]]]:
    """Reduced row echelon form over Q as (pivot column, row) pairs."""
    rows: list[tuple[int, list[Fraction]]] = []
    for v in vectors:
        r = _reduce(rows, [Fraction(x) for x in v])
        piv = next((i for i, x in enumerate(r) if x), None)
        if piv is None:
            continue
        r = [x / r[piv] for x in r]
        for j, (pj, row) in enumerate(rows):
            if row[piv]:
                c = row[piv]
                rows[j] = (pj, [a - c * b for a, b in zip(row, r)])
        rows.append((piv, r))
    return rows


def _reduce(rows, v: list[Fraction]) -> list[Fraction]:
    for piv, row in rows:
        if v[piv]:
            c = v[piv]
            v = [a - c * b if b else a for a, b in zip(v, row)]
    return v


def _in_span(rows, v: Sequence[int]) -> bool:
    return not any(_reduce(rows, [Fraction(x) for x in v]))


@lru_cache(maxsize=8192)
def _span_rows(theta: tuple[Root, ...]) -> list:
    return _echelon(theta)


@lru_cache(maxsize=8192)
def _tagged_rows(theta: tuple[Root, ...]) -> list:
    # each theta vector carries a unit tag so coordinates can be read off
    k = len(theta)
    return _echelon([list(t) + [1 if j == i else 0 for j in range(k)] for i, t in enumerate(theta)])


def _coefficients(theta: Sequence[Root], v: Sequence[int]) -> list[Fraction] | None:
    """Coordinates of v in the (independent) list theta, or None."""
    k = len(theta)
    rows = _tagged_rows(tuple(tuple(t) for t in theta))
    rest = _reduce(rows, [Fraction(x) for x in v] + [Fraction(0)] * k)
    if any(rest[:len(v)]):
        return None
    return [-x for x in rest[len(v):]]


def delta_theta(rs: RootSystem, theta: Iterable[Sequence[int]]) -> frozenset:
    """Delta intersected with the rational span of Theta."""
    return _delta_theta(rs, tuple(tuple(t) for t in theta))


@lru_cache(maxsize=8192)
def _delta_theta(rs: RootSystem, theta: tuple[Root, ...]) -> frozenset:
    if not theta:
        return frozenset()
    rows = _span_rows(theta)
    return frozenset(r for r in rs.roots if _in_span(rows, r))


def check_simple(rs: RootSystem, theta: Sequence[Root]) -> frozenset:
    """Delta_Theta, after checking that Theta is a simple system for it."""
    theta = [tuple(t) for t in theta]
    if len(_span_rows(tuple(theta))) != len(theta):
        raise NonSimpleTheta("Theta is linearly dependent")
    span = delta_theta(rs, theta)
    if any(t not in rs.roots for t in theta):
        raise NonSimpleTheta("Theta contains a non-root")
    for r in span:
        c = _coefficients(theta, r)
        if c is None or any(x.denominator != 1 for x in c) or (
                any(x > 0 for x in c) and any(x < 0 for x in c)):
            raise NonSimpleTheta(f"{format_root(r)} is not an integral one-signed combination of Theta")
    return span


# ------------------------------------------------------- Delta_Theta types

def _type_of(roots: frozenset, rank: int) -> tuple[str, int]:
    """Canonical family of an irreducible root set (A1=B1=C1, B2=C2, A3=D3)."""
    n = len(roots)
    lens = sorted({dot(a, a) for a in roots})
    r = rank
    if any(tuple(2 * x for x in a) in roots for a in roots):
        return ("BC", r)
    if len(lens) == 1:
        if n == r * (r + 1):
            return ("A", r)
        if n == 2 * r * (r - 1):
            return ("D", r)
    elif n == 2 * r * r:
        if r == 2:
            return ("C", 2)
        short = sum(1 for a in roots if dot(a, a) == lens[0])
        return ("B", r) if short == 2 * r else ("C", r)
    raise ValueError(f"unrecognised root set of rank {r} with {n} roots")


@dataclass(frozen=True)
class DeltaThetaType:
    """Families of the irreducible factors of Delta_Theta with the number
    of roots of each factor lying in Delta^a (the signature support)."""

    factors: tuple[tuple[str, int, int], ...]

    def types(self) -> tuple[tuple[str, int], ...]:
        return tuple((f, r) for f, r, _ in self.factors)

    def __str__(self) -> str:
        return "x".join(f"{f}{r}" for f, r, _ in self.factors) or "0"

    def to_dict(self) -> dict:
        return {"type": str(self), "factors": [
            {"family": f, "rank": r, "support": s} for f, r, s in self.factors]}


def theta_components(theta: Sequence[Root]) -> list[list[Root]]:
    g = nx.Graph()
    g.add_nodes_from(range(len(theta)))
    for i in range(len(theta)):
        for j in range(i + 1, len(theta)):
            if dot(theta[i], theta[j]):
                g.add_edge(i, j)
    comps = sorted(sorted(c) for c in nx.connected_components(g))
    return [[theta[i] for i in c] for c in comps]


def delta_theta_type(rs: RootSystem, theta: Sequence[Root], support: frozenset = frozenset()) -> DeltaThetaType:
    out = []
    for comp in theta_components([tuple(t) for t in theta]):
        roots = delta_theta(rs, comp)
        fam, r = _type_of(roots, len(comp))
        out.append((fam, r, len(roots & support)))
    return DeltaThetaType(tuple(sorted(out)))


def canonical_type(fam: str, r: int) -> list[tuple[str, int]]:
    """Canonical irreducible pieces of a family of rank r (D2 = A1xA1)."""
    if r <= 0 or (fam == "D" and r == 1):
        return []
    if fam == "D" and r == 2:
        return [("A", 1), ("A", 1)]
    if fam == "D" and r == 3:
        return [("A", 3)]
    if fam in ("B", "C") and r == 1:
        return [("A", 1)]
    if fam == "B" and r == 2:
        return [("C", 2)]
    return [(fam, r)]


# ------------------------------------------------------------ Theta subsets

@dataclass(frozen=True)
class ThetaSubset:
    base: tuple[Root, ...]
    chosen: int
    w: WeylElement

    @property
    def theta(self) -> list[Root]:
        return [a for i, a in enumerate(self.base) if self.chosen >> i & 1]

    @property
    def removed(self) -> list[int]:
        """1-based positions of base roots not in Theta."""
        return [i + 1 for i in range(len(self.base)) if not self.chosen >> i & 1]

    @classmethod
    def of(cls, rs: RootSystem, w: WeylElement, theta: Iterable[Sequence[int]]) -> "ThetaSubset":
        base = tuple(w(a) for a in standard_simple_system(rs))
        mask = 0
        for t in theta:
            t = tuple(t)
            if t not in base:
                raise NonSimpleTheta(f"{format_root(t)} is not in w.Psi")
            mask |= 1 << base.index(t)
        return cls(base, mask, w)


def layout_order(rank: int) -> list[int]:
    """Bitmasks ordered by number removed, then by removed positions."""
    def key(m):
        rem = [i for i in range(rank) if not m >> i & 1]
        return (len(rem), rem)
    return sorted(range(2 ** rank), key=key)


# --------------------------------------------------------------- patterns

@dataclass(frozen=True)
class RemovalPattern:
    """Removal data of w^{-1}.Theta in Psi.

    kind 'last': the last simple root is removed (i_k = r); 'diff': only
    differences are removed (i_k < r); 'A': type A_r, where i_{k+1} = r+1.
    """

    kind: str
    indices: tuple[int, ...]
    r: int
    transported: bool = False

    @property
    def k(self) -> int:
        return len(self.indices)

    @property
    def ik(self) -> int:
        return self.indices[-1] if self.indices else 0

    @property
    def blocks(self) -> list[int]:
        """The differences i_l - i_{l-1}, including i_{k+1} - i_k for type A."""
        pts = [0, *self.indices] + ([self.r + 1] if self.kind == "A" else [])
        return [b - a for a, b in zip(pts, pts[1:])]


def removal_pattern(family: str, r: int, removed: Sequence[int]) -> RemovalPattern:
    removed = tuple(sorted(removed))
    if family == "A":
        return RemovalPattern("A", removed, r)
    transported = False
    if family == "D" and (r - 1) in removed and r not in removed:
        # e_r -> -e_r swaps e_{r-1}-e_r and e_{r-1}+e_r
        removed = tuple(sorted([i for i in removed if i != r - 1] + [r]))
        transported = True
    kind = "last" if removed and removed[-1] == r else "diff"
    return RemovalPattern(kind, removed, r, transported)


def pattern_types(family: str, pat: RemovalPattern) -> list[tuple[str, int]]:
    """Irreducible types of Delta_Theta implied by a removal pattern."""
    out: list[tuple[str, int]] = []
    for d in pat.blocks:
        out += canonical_type("A", d - 1)
    if pat.kind == "diff":
        out += canonical_type(family, pat.r - pat.ik)
    return sorted(out)


# ----------------------------------------------------------------- h rules

def _sl(ds, f):
    return [f"sl({d},{f})" for d in ds]


def _so(ds, f):
    return [f"so({d},{f})" for d in ds]


def _sp(ds, f):
    return [f"sp({d},{f})" for d in ds]


def _sustar(ds):
    return [f"su*({2 * d})" for d in ds]


def _sostar(ds):
    return [f"so*({2 * d})" for d in ds]


Row = Callable[..., list]


@dataclass(frozen=True)
class HRule:
    family_id: str
    block: str
    family: str
    applies: Callable[[dict], bool]
    tvars: Callable[[dict, int], dict]
    last: Row | None
    diff: Row
    note: str = ""

    def formula(self, params: dict, pat: RemovalPattern) -> LieAlgebraExpr:
        t = self.tvars(params, pat.r)
        fn = self.diff if pat.kind in ("diff", "A") else self.last
        terms = fn(t["n"], t.get("p"), pat.k, pat.blocks, pat.ik)
        return parse(" + ".join(str(x) for x in terms) or "{0}")


def _rank_n(params, r):
    return {"n": r}


def _a_n(params, r):
    return {"n": r + 1}


def _np(params, r):
    return {"n": params["n"], "p": params["p"]}


ALWAYS = lambda q: True  # noqa: E731
HALF = lambda q: q["n"] == 2 * q["p"]  # noqa: E731
MORE = lambda q: q["n"] > 2 * q["p"]  # noqa: E731
EVEN = lambda q: q["n"] % 2 == 0  # noqa: E731
ODD = lambda q: q["n"] % 2 == 1  # noqa: E731


def _build_rules() -> list[HRule]:
    R = []

    def a(fid, diff):
        R.append(HRule(fid, "A", "A", ALWAYS, _a_n, None, diff))

    a("slR2-slR", lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R")])
    a("slC-soC", lambda n, p, k, ds, ik: _so(ds, "C"))
    a("sustar2-sustar", lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds)])
    a("sl2nC-spC", lambda n, p, k, ds, ik: _sp(ds, "C"))
    a("sl2nR-spR", lambda n, p, k, ds, ik: _sp(ds, "R"))
    a("sustar-sostar", lambda n, p, k, ds, ik: _sostar(ds))

    def rule(fid, block, fam, applies, tv, last, diff, note=""):
        R.append(HRule(fid, block, fam, applies, tv, last, diff, note))

    # B_p, n > 2p
    rule("sopq2-sopq", "B", "B", MORE, _np,
         lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R"), f"so({n - 2 * p})"],
         lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R"), f"so({p - ik},{n - p - ik})"])
    rule("soC-soCsoC", "B", "B", MORE, _np,
         lambda n, p, k, ds, ik: [*_so(ds, "C"), f"so({n - 2 * p},C)"],
         lambda n, p, k, ds, ik: [*_so(ds, "C"), f"so({p - ik},C)", f"so({n - p - ik},C)"],
         "complex tail in the last-root row")

    # C_n
    def c(fid, applies, last, diff, note=""):
        rule(fid, "C", "C", applies, _rank_n, last, diff, note)

    c("sl2nC-sustar", ALWAYS,
      lambda n, p, k, ds, ik: [f"R^{k - 1}", f"so(2)^{k}", *_sl(ds, "C")],
      lambda n, p, k, ds, ik: [f"R^{k}", f"so(2)^{k}", *_sl(ds, "C"), f"su*({2 * (n - ik)})"])
    c("supq2-supq", HALF,
      lambda n, p, k, ds, ik: [f"R^{k}", f"so(2)^{k - 1}", *_sl(ds, "C")],
      lambda n, p, k, ds, ik: [f"R^{k}", f"so(2)^{k}", *_sl(ds, "C"), f"su({n - ik},{n - ik})"])
    c("slC-slCslC", HALF,
      lambda n, p, k, ds, ik: [f"C^{k - 1}", *_sl(ds, "C")],
      lambda n, p, k, ds, ik: [f"C^{k}", *_sl(ds, "C"), f"sl({n - ik},C)^2", "C"])
    c("sostar2-sostar", EVEN,
      lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds)],
      lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"so*({4 * (n - ik)})"])
    c("soC2n-slC", EVEN,
      lambda n, p, k, ds, ik: _sp(ds, "C"),
      lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sl({2 * (n - ik)},C)", "C"])
    c("spR2-spR", ALWAYS,
      lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R")],
      lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R"), f"sp({n - ik},R)"])
    c("spC-slC", ALWAYS,
      lambda n, p, k, ds, ik: _so(ds, "C"),
      lambda n, p, k, ds, ik: [*_so(ds, "C"), f"sl({n - ik},C)", "C"])
    c("sppq2-sppq", HALF,
      lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds)],
      lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"sp({n - ik},{n - ik})"])
    c("spC-spCspC", HALF,
      lambda n, p, k, ds, ik: _sp(ds, "C"),
      lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sp({n - ik},C)^2"])
    c("su2p2np-sppq", HALF,
      lambda n, p, k, ds, ik: _sp(ds, "C"),
      lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sp({n - ik},{n - ik})"])
    c("sustar-sustarsustar", HALF,
      lambda n, p, k, ds, ik: [f"R^{k - 1}", *_sustar(ds)],
      lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"su*({2 * (n - ik)})^2", "R"])
    c("sunn-sostar", ALWAYS,
      lambda n, p, k, ds, ik: _so(ds, "C"),
      lambda n, p, k, ds, ik: [*_so(ds, "C"), f"so*({2 * (n - ik)})"])
    c("sl2nR-slC", ALWAYS,
      lambda n, p, k, ds, ik: [f"R^{k - 1}", *_sl(ds, "R")],
      lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R"), f"sl({n - ik},C)", "so(2)"])
    c("sustar-slC", EVEN,
      lambda n, p, k, ds, ik: [f"R^{k - 1}", *_sustar(ds)],
      lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"sl({2 * (n - ik)},C)", "so(2)"])
    c("sunn-spR", EVEN,
      lambda n, p, k, ds, ik: _sp(ds, "C"),
      lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sp({2 * (n - ik)},R)"])
    c("so2p2np-supq", HALF,
      lambda n, p, k, ds, ik: _sp(ds, "R"),
      lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"su({n - ik},{n - ik})", "so(2)"])
    c("sostar-sostarsostar", HALF,
      lambda n, p, k, ds, ik: _sostar(ds),
      lambda n, p, k, ds, ik: [*_sostar(ds), f"so*({2 * (n - ik)})^2"])
    c("sppq-supq", HALF,
      lambda n, p, k, ds, ik: _sostar(ds),
      lambda n, p, k, ds, ik: [*_sostar(ds), f"su({n - ik},{n - ik})", "so(2)"])
    c("spR-spRspR", HALF,
      lambda n, p, k, ds, ik: _sp(ds, "R"),
      lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"sp({n - ik},R)^2"])
    c("sp2nR-spC", ALWAYS,
      lambda n, p, k, ds, ik: _sp(ds, "R"),
      lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"sp({n - ik},C)"])
    c("spnn-sustar", ALWAYS,
      lambda n, p, k, ds, ik: _sostar(ds),
      lambda n, p, k, ds, ik: [*_sostar(ds), f"su*({2 * (n - ik)})", "R"])

    # D_n
    rule("sopq2-sopq", "D", "D", HALF, _rank_n,
         lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R")],
         lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R"), f"so({n - ik},{n - ik})"])
    rule("soC-soCsoC", "D", "D", HALF, _rank_n,
         lambda n, p, k, ds, ik: _so(ds, "C"),
         lambda n, p, k, ds, ik: [*_so(ds, "C"), f"so({n - ik},C)^2"])

    # BC_r
    def bc(fid, applies, tv, last, diff, note=""):
        rule(fid, "BC", "BC", applies, tv, last, diff, note)

    bc("supq2-supq", MORE, _np,
       lambda n, p, k, ds, ik: [f"R^{k}", f"so(2)^{k}", *_sl(ds, "C"), f"su({n - 2 * p})"],
       lambda n, p, k, ds, ik: [f"R^{k}", f"so(2)^{k}", *_sl(ds, "C"), f"su({p - ik},{n - p - ik})"],
       "compact tail restored in both rows")
    bc("slC-slCslC", MORE, _np,
       lambda n, p, k, ds, ik: [f"C^{k}", *_sl(ds, "C"), f"sl({n - 2 * p},C)"],
       lambda n, p, k, ds, ik: [f"C^{k}", *_sl(ds, "C"), f"sl({p - ik},C)", f"sl({n - p - ik},C)", "C"])
    bc("sostar2-sostar", ODD, _rank_n,
       lambda n, p, k, ds, ik: [f"R^{k}", "so(2)", *_sustar(ds)],
       lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"so*({2 * (2 * (n - ik) + 1)})"])
    bc("soC2n-slC", ODD, _rank_n,
       lambda n, p, k, ds, ik: ["C", *_sp(ds, "C")],
       lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sl({2 * (n - ik) + 1},C)", "C"])
    bc("sppq2-sppq", MORE, _np,
       lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"sp({n - 2 * p})"],
       lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"sp({p - ik},{n - p - ik})"])
    bc("spC-spCspC", MORE, _np,
       lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sp({p - ik},C)", f"sp({n - 2 * p},C)"],
       lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sp({p - ik},C)", f"sp({n - p - ik},C)"])
    bc("su2p2np-sppq", MORE, _np,
       lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sp({n - 2 * p})"],
       lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sp({p - ik},{n - p - ik})"])
    bc("sustar-sustarsustar", MORE, _np,
       lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"su*({2 * (n - 2 * p)})"],
       lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"su*({2 * (p - ik)})",
                                f"su*({2 * (n - p - ik)})", "R"])
    bc("sustar-slC", ODD, _rank_n,
       lambda n, p, k, ds, ik: [f"R^{k}", "so(2)", *_sustar(ds)],
       lambda n, p, k, ds, ik: [f"R^{k}", *_sustar(ds), f"sl({2 * (n - ik) + 1},C)", "so(2)"],
       "single so(2) in the difference row")
    bc("sunn-spR", ODD, _rank_n,
       lambda n, p, k, ds, ik: [*_sp(ds, "C"), "sp(1,R)"],
       lambda n, p, k, ds, ik: [*_sp(ds, "C"), f"sp({2 * (n - ik) + 1},R)"],
       "sp(1,R) restored in the last-root row")
    bc("so2p2np-supq", MORE, _np,
       lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"u({n - 2 * p})"],
       lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"su({p - ik},{n - p - ik})", "so(2)"],
       "u(n-2p) restored in the last-root row")
    bc("sostar-sostarsostar", MORE, _np,
       lambda n, p, k, ds, ik: [*_sostar(ds), f"so*({2 * (n - 2 * p)})"],
       lambda n, p, k, ds, ik: [*_sostar(ds), f"so*({2 * (p - ik)})", f"so*({2 * (n - p - ik)})"],
       "so*(2(n-2p)) restored in the last-root row")
    bc("sppq-supq", MORE, _np,
       lambda n, p, k, ds, ik: [f"u({n - 2 * p})", *_sostar(ds)],
       lambda n, p, k, ds, ik: [*_sostar(ds), f"su({p - ik},{n - p - ik})", "so(2)"],
       "so*(2d) in the difference row")
    bc("spR-spRspR", MORE, _np,
       lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"sp({n - 2 * p},R)"],
       lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"sp({p - ik},R)", f"sp({n - p - ik},R)"])

    # BC_r restricted, B_r positive part
    def bcb(fid, applies, tv, last, diff):
        rule(fid, "BC/B", "BC", applies, tv, last, diff)

    bcb("slC-slR", ODD, _rank_n,
        lambda n, p, k, ds, ik: [f"R^{k}", f"so(2)^{k}", *_sl(ds, "C")],
        lambda n, p, k, ds, ik: [f"R^{k}", f"so(2)^{k}", *_sl(ds, "C"), f"sl({2 * (n - ik) + 1},R)"])
    bcb("supq-sopq", MORE, _np,
        lambda n, p, k, ds, ik: [*_so(ds, "C"), f"so({n - 2 * p})"],
        lambda n, p, k, ds, ik: [*_so(ds, "C"), f"so({p - ik},{n - p - ik})"])
    bcb("slR-slRslR", MORE, _np,
        lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R"), f"sl({n - 2 * p},R)"],
        lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R"), f"sl({p - ik},R)", f"sl({n - p - ik},R)", "R"])
    bcb("sostar-soC", ODD, _rank_n,
        lambda n, p, k, ds, ik: _sostar(ds),
        lambda n, p, k, ds, ik: [*_sostar(ds), f"so({2 * (n - ik) + 1},C)"])
    bcb("sonn-slR", ODD, _rank_n,
        lambda n, p, k, ds, ik: ["R", *_sp(ds, "R")],
        lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"sl({2 * (n - ik) + 1},R)", "R"])

    # C_r restricted, D_r positive part: both blocks share the formulas
    def cd(fid, applies, last, diff):
        rule(fid, "C/D", "C", applies, _rank_n, last, diff)

    cd("slC-slR", EVEN,
       lambda n, p, k, ds, ik: [f"R^{k - 1}", f"so(2)^{k}", *_sl(ds, "C")],
       lambda n, p, k, ds, ik: [f"R^{k}", f"so(2)^{k}", *_sl(ds, "C"), f"sl({2 * (n - ik)},R)"])
    cd("supq-sopq", HALF,
       lambda n, p, k, ds, ik: _so(ds, "C"),
       lambda n, p, k, ds, ik: [*_so(ds, "C"), f"so({n - ik},{n - ik})"])
    cd("slR-slRslR", HALF,
       lambda n, p, k, ds, ik: [f"R^{k - 1}", *_sl(ds, "R")],
       lambda n, p, k, ds, ik: [f"R^{k}", *_sl(ds, "R"), f"sl({n - ik},R)^2", "R"])
    cd("sostar-soC", EVEN,
       lambda n, p, k, ds, ik: _sostar(ds),
       lambda n, p, k, ds, ik: [*_sostar(ds), f"so({2 * (n - ik)},C)"])
    cd("sonn-slR", EVEN,
       lambda n, p, k, ds, ik: _sp(ds, "R"),
       lambda n, p, k, ds, ik: [*_sp(ds, "R"), f"sl({2 * (n - ik)},R)", "R"])
    return R


RULES: list[HRule] = _build_rules()


def rule_for(spec: SymmetricPairSpec) -> HRule | None:
    q = spec.param_dict
    for r in RULES:
        if r.family_id == spec.family_id and r.applies(q):
            return r
    return None


def has_rules(spec: SymmetricPairSpec) -> bool:
    return rule_for(spec) is not None or spec.family_id == "slR-sopq"


def h_of(spec: SymmetricPairSpec) -> LieAlgebraExpr:
    """h itself, from the family's display name."""
    return parse(_subst(spec.family.h, spec.param_dict))


def _signature_rule(spec: SymmetricPairSpec, theta: Sequence[Root]) -> LieAlgebraExpr:
    """(sl(n,R), so(p,n-p)): so(#S cap {1..p}, #S cap {p+1..n}) per coordinate block S."""
    p = spec.param_dict["p"]
    terms = []
    for comp in theta_components(list(theta)):
        coords = {i for a in comp for i, c in enumerate(a) if c}
        pos = sum(1 for i in coords if i < p)
        terms.append(f"so({pos},{len(coords) - pos})")
    return parse(" + ".join(terms) or "{0}")


# ---------------------------------------------------------- classification

@dataclass
class Classification:
    h_theta: LieAlgebraExpr | None
    provenance: str
    delta_type: DeltaThetaType
    pattern: RemovalPattern | None = None

    @property
    def structural_only(self) -> bool:
        return self.h_theta is None


@lru_cache(maxsize=256)
def _reps(spec: SymmetricPairSpec) -> CosetSystem:
    return coset_reps(spec.ambient(), spec.subsystem())


def resolve_w(spec: SymmetricPairSpec, w) -> tuple[WeylElement, str]:
    """A WeylElement, a representative label, or None for the identity."""
    rs = spec.ambient()
    if w is None:
        return WeylElement.identity(rs.dim), "id"
    if isinstance(w, WeylElement):
        cs = _reps(spec)
        label = next((l for x, l in zip(cs.reps, cs.labels) if x == w), repr(w))
        return w, label
    cs = _reps(spec)
    if w in cs.labels:
        return cs.reps[cs.labels.index(w)], w
    raise ParseError(f"unknown representative {w!r}; known: {', '.join(cs.labels)}")


def _roots(rs: RootSystem, theta) -> list[Root]:
    return [parse_root(t, rs.dim) if isinstance(t, str) else tuple(t) for t in theta]


def classify(spec: SymmetricPairSpec, w, theta) -> Classification:
    """Classify h_Theta, recording how the answer was obtained."""
    rs = spec.ambient()
    wel, _ = resolve_w(spec, w)
    theta = _roots(rs, theta)
    check_simple(rs, theta)
    sub = ThetaSubset.of(rs, wel, theta)
    dtype = delta_theta_type(rs, theta, spec.subsystem().sub_roots)
    rank = rs.rank
    winv = wel.inverse()
    fam = spec.delta[0][0]
    pat = removal_pattern(fam, rank, sub.removed)
    rule = rule_for(spec)
    if rule is not None:
        # standard formulas act on w^{-1}.Theta inside Psi
        psi = standard_simple_system(rs)
        assert all(winv(t) in psi for t in theta)
        return Classification(rule.formula(spec.param_dict, pat), "table", dtype, pat)
    if spec.family_id == "slR-sopq":
        return Classification(_signature_rule(spec, theta), "signature-rule", dtype, pat)
    if not theta:
        return Classification(spec.hpis_expr, "general", dtype, pat)
    if len(theta) == rank:
        return Classification(h_of(spec), "general", dtype, pat)
    return Classification(None, "structural-only", dtype, pat)


def classify_h_theta(spec: SymmetricPairSpec, w, theta) -> LieAlgebraExpr:
    """h_Theta for Theta contained in w.Psi; w may be a representative label."""
    c = classify(spec, w, theta)
    if c.h_theta is None:
        raise UnsupportedFamily(
            f"no h_Theta rule for {spec.name} at Delta_Theta = {c.delta_type} (structural-only)")
    return c.h_theta


# ------------------------------------------------------------- enumeration

def theta_label(theta: Sequence[Root], base: Sequence[Root], w_label: str, style: str = "text") -> str:
    """'Psi', 'Psi-{...}', '{...}' or the empty set, relative to w.Psi."""
    tex = style == "latex"
    psi = r"\Psi" if tex else "Psi"
    prefix = "" if w_label == "id" else (f"{w_label}" + (r"\cdot" if tex else "."))
    lb, rb = (r"\{", r"\}") if tex else ("{", "}")
    if len(theta) == len(base):
        return prefix + psi
    if not theta:
        return r"\emptyset" if tex else "{}"
    removed = [a for a in base if a not in theta]
    if len(removed) <= len(theta):
        minus = r"\setminus" if tex else "-"
        return f"{prefix}{psi}{minus}{lb}" + ", ".join(format_root(a) for a in removed) + rb
    return lb + ", ".join(format_root(a) for a in theta) + rb


@dataclass
class OrbitRow:
    w_label: str
    base: tuple[Root, ...]
    theta: tuple[Root, ...]
    result: Classification

    @property
    def label(self) -> str:
        return theta_label(self.theta, self.base, self.w_label)

    def h_text(self, style: str = "text") -> str:
        if self.result.h_theta is None:
            return f"structural-only [{self.result.delta_type}]"
        return render(self.result.h_theta, style)

    def to_dict(self) -> dict:
        return {"w": self.w_label, "theta": [format_root(a) for a in self.theta],
                "h_theta": None if self.result.h_theta is None else str(self.result.h_theta),
                "provenance": self.result.provenance, "delta_theta": self.result.delta_type.to_dict()}


@dataclass
class OrbitTypeRecord:
    h_theta: LieAlgebraExpr | None
    witnesses: list[tuple[str, tuple[Root, ...]]]
    delta_theta_type: DeltaThetaType
    provenance: str

    def to_dict(self) -> dict:
        return {
            "h_theta": None if self.h_theta is None else str(self.h_theta),
            "provenance": self.provenance,
            "delta_theta": self.delta_theta_type.to_dict(),
            "witnesses": [{"w": w, "theta": [format_root(a) for a in t]} for w, t in self.witnesses],
        }


@dataclass
class OrbitTable:
    spec: SymmetricPairSpec
    labels: list[str]
    bases: list[tuple[Root, ...]]
    rows: list[OrbitRow]
    records: list[OrbitTypeRecord]
    elliptic: bool = False
    source: SymmetricPairSpec | None = None
    annotated: bool = True

    def __iter__(self):
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def types(self) -> list[LieAlgebraExpr]:
        return [r.h_theta for r in self.records if r.h_theta is not None]

    @property
    def principal(self) -> LieAlgebraExpr | None:
        """h_Theta at Theta empty (the smallest type)."""
        row = next(r for r in self.rows if not r.theta)
        return row.result.h_theta

    def block(self, label: str) -> list[OrbitRow]:
        return [r for r in self.rows if r.w_label == label]

    @property
    def structural_only(self) -> bool:
        return any(r.h_theta is None for r in self.records)

    # ------------------------------------------------------------ output
    def to_dict(self) -> dict:
        out = {
            "pair": self.spec.name, "selector": self.spec.slug,
            "kind": "elliptic" if self.elliptic else "hyperbolic",
            "reps": len(self.labels),
            "orbit_types": [r.to_dict() for r in self.records],
            "blocks": [{"w": l, "base": [format_root(a) for a in b],
                        "rows": [r.to_dict() for r in self.block(l)]}
                       for l, b in zip(self.labels, self.bases)],
        }
        if self.source is not None:
            out["computed_from"] = self.source.name
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, ensure_ascii=False)

    def _title(self) -> str:
        kind = "elliptic" if self.elliptic else "hyperbolic"
        s = f"Local orbit types of {kind} orbits for {self.spec.name}"
        if self.source is not None:
            s += f" (via {self.source.name})"
        return s

    def to_markdown(self) -> str:
        lines = [f"## {self._title()}", ""]
        for l, b in zip(self.labels, self.bases):
            w = "Psi" if l == "id" else f"{l}.Psi"
            lines += [f"### Theta in {w} = {{{', '.join(format_root(a) for a in b)}}}", "",
                      "| Theta | h_Theta |", "|---|---|"]
            lines += [f"| {r.label} | {r.h_text()} |" for r in self.block(l)]
            lines.append("")
        lines += ["### Merged types", ""]
        lines += [f"- {r.h_theta if r.h_theta is not None else 'structural-only'}"
                  f" ({len(r.witnesses)} witnesses, Delta_Theta {r.delta_theta_type})"
                  for r in self.records]
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        out = [f"% {self._title()}"]
        for l, b in zip(self.labels, self.bases):
            w = r"\Psi" if l == "id" else f"{l}" + r"\cdot\Psi"
            out += [r"\begin{tabular}{ll}", r"\hline",
                    r"\multicolumn{2}{l}{$\Theta \subset " + w + "$} \\\\", r"\hline",
                    r"$\Theta$ & $\mathfrak{h}_{\Theta}$ \\", r"\hline"]
            for r in self.block(l):
                h = ("structural-only" if r.result.h_theta is None
                     else "$" + render(r.result.h_theta, "latex") + "$")
                out.append(f"${theta_label(r.theta, r.base, l, 'latex')}$ & {h} \\\\")
            out += [r"\hline", r"\end{tabular}", ""]
        return "\n".join(out)


def _merge_key(c: Classification, annotated: bool):
    if c.h_theta is None:
        return ("structural", str(c.delta_type))
    return ("h", c.h_theta.key(annotated))


def local_orbit_types(spec: SymmetricPairSpec, annotated: bool = True) -> OrbitTable:
    """Every (w, Theta) with w a coset representative and Theta in w.Psi."""
    rs = spec.ambient()
    cs = _reps(spec)
    psi = standard_simple_system(rs)
    rank = len(psi)
    rows: list[OrbitRow] = []
    bases = []
    merged: dict = {}
    for w, label in zip(cs.reps, cs.labels):
        base = tuple(w(a) for a in psi)
        bases.append(base)
        for mask in layout_order(rank):
            theta = tuple(a for i, a in enumerate(base) if mask >> i & 1)
            c = classify(spec, w, theta)
            rows.append(OrbitRow(label, base, theta, c))
            key = _merge_key(c, annotated)
            rec = merged.get(key)
            if rec is None:
                merged[key] = OrbitTypeRecord(c.h_theta, [(label, theta)], c.delta_type, c.provenance)
            else:
                rec.witnesses.append((label, theta))
    return OrbitTable(spec, list(cs.labels), bases, rows, list(merged.values()), annotated=annotated)


def elliptic_orbit_types(spec: SymmetricPairSpec, annotated: bool = True) -> OrbitTable:
    """Elliptic types of spec: hyperbolic types of its c-dual pair."""
    dual = c_dual(spec)
    t = local_orbit_types(dual, annotated)
    t.elliptic, t.source, t.spec = True, dual, spec
    return t
