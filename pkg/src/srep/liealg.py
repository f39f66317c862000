"""Formal Lie-algebra expressions: sums of classical factors with multiplicities.

An expression is a multiset of atomic factors kept in canonical order.
Degenerate factors (sl(1), su(1), sp(0), so(0), so(1), ...) vanish on
construction.  Definite forms written with two parameters, such as
so(2,0) or so(0,2), keep an orientation annotation so that tables listing
both can be reproduced verbatim; `equal(..., annotated=False)` ignores it.
No special isomorphisms are applied unless `isomorphic` is called.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError

KINDS = (
    "R", "C_abelian", "so2", "u1", "u",
    "sl_R", "sl_C", "su", "su_star", "so_pq", "so_C", "so_star",
    "sp_R", "sp_pq", "sp_C", "su_compact", "so_compact", "sp_compact",
)
_ORDER = {k: i for i, k in enumerate(KINDS)}
_ARITY = {
    "R": 0, "C_abelian": 0, "so2": 0, "u1": 0, "u": 1,
    "sl_R": 1, "sl_C": 1, "su": 2, "su_star": 1, "so_pq": 2, "so_C": 1,
    "so_star": 1, "sp_R": 1, "sp_pq": 2, "sp_C": 1,
    "su_compact": 1, "so_compact": 1, "sp_compact": 1,
}
# orientation annotations: "" plain, "pos"/"neg" definite form written as
# (n,0)/(0,n), "rev" indefinite form written with p > q
ORIENTS = ("", "pos", "neg", "rev")


@dataclass(frozen=True, order=False)
class AtomicFactor:
    kind: str
    params: tuple[int, ...] = ()
    orient: str = ""

    def key(self, annotated: bool = True) -> tuple:
        return (_ORDER[self.kind], self.params, self.orient if annotated else "")

    def plain(self) -> "AtomicFactor":
        return AtomicFactor(self.kind, self.params) if self.orient else self


def _definite(kind_compact: str, n: int, orient: str) -> AtomicFactor | None:
    if kind_compact == "so_compact":
        if n <= 1:
            return None
        if n == 2:
            return AtomicFactor("so2", (), orient)
    if kind_compact == "su_compact" and n <= 1:
        return None
    if kind_compact == "sp_compact" and n <= 0:
        return None
    return AtomicFactor(kind_compact, (n,), orient)


def make(kind: str, *params: int) -> AtomicFactor | None:
    """Build a canonical factor; returns None for degenerate ones.

    Two-parameter forms are given in written order; the canonical factor
    stores p <= q plus an orientation note.
    """
    if kind not in _ARITY:
        raise ParseError(f"unknown factor kind {kind!r}")
    params = tuple(int(x) for x in params)
    if kind in ("su", "so_pq", "sp_pq"):
        if len(params) != 2:
            raise ParseError(f"{kind} takes two parameters")
        p, q = params
        if p < 0 or q < 0:
            raise ParseError(f"negative parameter in {kind}{params}")
        compact = {"su": "su_compact", "so_pq": "so_compact", "sp_pq": "sp_compact"}[kind]
        if p == 0 or q == 0:
            return _definite(compact, p + q, "pos" if q == 0 else "neg")
        if kind == "su" and p + q < 2:
            return None
        if p > q:
            return AtomicFactor(kind, (q, p), "rev")
        return AtomicFactor(kind, (p, q))
    if len(params) != _ARITY[kind]:
        raise ParseError(f"{kind} takes {_ARITY[kind]} parameter(s)")
    if any(x < 0 for x in params):
        raise ParseError(f"negative parameter in {kind}{params}")
    if kind in ("so_compact", "su_compact", "sp_compact"):
        return _definite(kind, params[0], "")
    if kind == "u":
        n = params[0]
        if n == 0:
            return None
        return AtomicFactor("u1") if n == 1 else AtomicFactor("u", (n,))
    if kind in ("sl_R", "sl_C") and params[0] <= 1:
        return None
    if kind == "so_C" and params[0] <= 1:
        return None
    if kind in ("sp_R", "sp_C") and params[0] == 0:
        return None
    if kind in ("su_star", "so_star"):
        if params[0] == 0:
            return None
        if params[0] % 2:
            raise ParseError(f"{kind} needs an even size, got {params[0]}")
    return AtomicFactor(kind, params)


class LieAlgebraExpr:
    """Canonical multiset of atomic factors."""

    __slots__ = ("terms",)

    def __init__(self, items: Iterable[tuple[AtomicFactor | None, int]] = ()):
        acc: dict[AtomicFactor, int] = {}
        for f, e in items:
            if f is None or e == 0:
                continue
            if e < 0:
                raise ValueError("negative exponent")
            acc[f] = acc.get(f, 0) + e
        self.terms: tuple[tuple[AtomicFactor, int], ...] = tuple(
            sorted(acc.items(), key=lambda t: t[0].key()))

    # construction helpers
    @classmethod
    def zero(cls) -> "LieAlgebraExpr":
        return cls()

    @classmethod
    def of(cls, kind: str, *params: int, exp: int = 1) -> "LieAlgebraExpr":
        return cls([(make(kind, *params), exp)])

    def __add__(self, other: "LieAlgebraExpr") -> "LieAlgebraExpr":
        return LieAlgebraExpr(list(self.terms) + list(other.terms))

    def __pow__(self, k: int) -> "LieAlgebraExpr":
        return LieAlgebraExpr([(f, e * k) for f, e in self.terms])

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebraExpr) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LieAlgebraExpr({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def key(self, annotated: bool = True) -> tuple:
        """Hashable key; with annotated=False orientation notes are dropped."""
        if annotated:
            return self.terms
        return canonicalize(LieAlgebraExpr((f.plain(), e) for f, e in self.terms)).terms

    def factors(self) -> list[AtomicFactor]:
        return [f for f, e in self.terms for _ in range(e)]


def lsum(exprs: Iterable[LieAlgebraExpr]) -> LieAlgebraExpr:
    out = LieAlgebraExpr()
    for e in exprs:
        out = out + e
    return out


def canonicalize(expr: LieAlgebraExpr) -> LieAlgebraExpr:
    """Re-normalize every factor; idempotent."""
    items = []
    for f, e in expr.terms:
        items.append((_renormalize(f), e))
    return LieAlgebraExpr(items)


def _renormalize(f: AtomicFactor) -> AtomicFactor | None:
    if f.kind in ("su", "so_pq", "sp_pq"):
        p, q = f.params
        g = make(f.kind, *((q, p) if f.orient == "rev" else (p, q)))
    elif f.kind in ("so_compact", "su_compact", "sp_compact") and f.orient:
        n = f.params[0]
        pq = (n, 0) if f.orient == "pos" else (0, n)
        g = make({"so_compact": "so_pq", "su_compact": "su", "sp_compact": "sp_pq"}[f.kind], *pq)
    elif f.kind == "so2" and f.orient:
        g = make("so_pq", *((2, 0) if f.orient == "pos" else (0, 2)))
    elif f.kind == "u1":
        g = f
    else:
        g = make(f.kind, *f.params)
    return g


def equal(a: LieAlgebraExpr, b: LieAlgebraExpr, annotated: bool = True) -> bool:
    return a.key(annotated) == b.key(annotated)


def _factor_dim(f: AtomicFactor) -> int:
    k, p = f.kind, f.params
    if k in ("R", "so2", "u1"):
        return 1
    if k == "C_abelian":
        return 2
    if k == "u":
        return p[0] ** 2
    n = sum(p)
    if k in ("sl_R", "su", "su_star", "su_compact"):
        return n * n - 1
    if k == "sl_C":
        return 2 * (n * n - 1)
    if k in ("so_pq", "so_star", "so_compact"):
        return n * (n - 1) // 2
    if k == "so_C":
        return n * (n - 1)
    if k in ("sp_R", "sp_pq", "sp_compact"):
        return n * (2 * n + 1)
    if k == "sp_C":
        return 2 * n * (2 * n + 1)
    raise ValueError(k)


def dim(expr: LieAlgebraExpr) -> int:
    """Real dimension."""
    return sum(_factor_dim(f) * e for f, e in expr.terms)


# ---------------------------------------------------------------- isomorphism

def _iso_table() -> dict[AtomicFactor, LieAlgebraExpr]:
    su2 = LieAlgebraExpr.of("sp_compact", 1)
    slr2 = LieAlgebraExpr.of("sl_R", 2)
    slc2 = LieAlgebraExpr.of("sl_C", 2)
    t = {
        make("su_star", 2): su2,
        make("su_compact", 2): su2,
        make("so_compact", 3): su2,
        make("so_star", 2): LieAlgebraExpr.of("so2"),
        make("u", 1): LieAlgebraExpr.of("so2"),
        make("sp_R", 1): slr2,
        make("su", 1, 1): slr2,
        make("so_pq", 1, 2): slr2,
        make("so_pq", 1, 1): LieAlgebraExpr.of("R"),
        make("so_C", 2): LieAlgebraExpr.of("C_abelian"),
        make("sp_C", 1): slc2,
        make("so_C", 3): slc2,
        make("so_pq", 1, 3): slc2,
        make("so_compact", 4): su2 ** 2,
        make("so_pq", 2, 2): slr2 ** 2,
        make("so_C", 4): slc2 ** 2,
        make("so_star", 4): su2 + slr2,
        make("sp_compact", 2): LieAlgebraExpr.of("so_compact", 5),
        make("sp_R", 2): LieAlgebraExpr.of("so_pq", 2, 3),
        make("sp_pq", 1, 1): LieAlgebraExpr.of("so_pq", 1, 4),
        make("sp_C", 2): LieAlgebraExpr.of("so_C", 5),
        make("su_star", 4): LieAlgebraExpr.of("so_pq", 1, 5),
        make("sl_R", 4): LieAlgebraExpr.of("so_pq", 3, 3),
        make("su", 2, 2): LieAlgebraExpr.of("so_pq", 2, 4),
        make("su", 1, 3): LieAlgebraExpr.of("so_star", 6),
        make("sl_C", 4): LieAlgebraExpr.of("so_C", 6),
        make("su_compact", 4): LieAlgebraExpr.of("so_compact", 6),
        make("so_star", 8): LieAlgebraExpr.of("so_pq", 2, 6),
    }
    return t


_ISO: dict[AtomicFactor, LieAlgebraExpr] | None = None


def iso_normal_form(expr: LieAlgebraExpr) -> LieAlgebraExpr:
    """Rewrite with the standard low-rank coincidences of classical algebras.

    Used only when an isomorphism-level comparison is asked for explicitly.
    u(n) is split as su(n) + so(2).
    """
    global _ISO
    if _ISO is None:
        _ISO = _iso_table()
    while True:
        nxt = _iso_step(expr)
        if nxt == expr:
            return expr
        expr = nxt


def _iso_step(expr: LieAlgebraExpr) -> LieAlgebraExpr:
    items: list[tuple[AtomicFactor | None, int]] = []
    for f, e in expr.terms:
        f = f.plain()
        if f.kind == "u":
            items += [(make("su_compact", f.params[0]), e), (make("so2"), e)]
            continue
        rep = _ISO.get(f)
        if rep is None:
            items.append((f, e))
        else:
            items += [(g, e * k) for g, k in rep.terms]
    return LieAlgebraExpr(items)


def isomorphic(a: LieAlgebraExpr, b: LieAlgebraExpr) -> bool:
    return iso_normal_form(a) == iso_normal_form(b)


# ------------------------------------------------------------------- render

_TEXT_NAMES = {
    "sl_R": ("sl", "R"), "sl_C": ("sl", "C"), "so_C": ("so", "C"),
    "sp_R": ("sp", "R"), "sp_C": ("sp", "C"),
}


def _factor_parts(f: AtomicFactor) -> tuple[str, str]:
    """(name, argument string) in standard notation, with R/C as letters."""
    k, p = f.kind, f.params
    if k == "R":
        return "R", ""
    if k == "C_abelian":
        return "C", ""
    if k == "so2":
        return "so", {"": "2", "pos": "2,0", "neg": "0,2"}[f.orient]
    if k == "u1":
        return "u", "1"
    if k == "u":
        return "u", str(p[0])
    if k in _TEXT_NAMES:
        name, fld = _TEXT_NAMES[k]
        return name, f"{p[0]},{fld}"
    if k in ("su", "so_pq", "sp_pq"):
        a, b = (p[1], p[0]) if f.orient == "rev" else p
        return k[:2], f"{a},{b}"
    if k == "su_star":
        return "su*", str(p[0])
    if k == "so_star":
        return "so*", str(p[0])
    if k in ("su_compact", "so_compact", "sp_compact"):
        n = p[0]
        arg = {"": f"{n}", "pos": f"{n},0", "neg": f"0,{n}"}[f.orient]
        return k[:2], arg
    raise ValueError(k)


def _render_factor(f: AtomicFactor, style: str) -> str:
    name, arg = _factor_parts(f)
    if style == "latex":
        if name in ("R", "C"):
            return r"\mathbb{%s}" % name
        arg = arg.replace("R", r"\mathbb{R}").replace("C", r"\mathbb{C}")
        if name.endswith("*"):
            return r"\mathfrak{%s}^{*}(%s)" % (name[:-1], arg)
        return r"\mathfrak{%s}(%s)" % (name, arg)
    if style == "unicode":
        name = {"R": "ℝ", "C": "ℂ"}.get(name, name)
        arg = arg.replace("R", "ℝ").replace("C", "ℂ")
    return name if not arg else f"{name}({arg})"


def render(expr: LieAlgebraExpr, style: str = "text") -> str:
    """Render as 'text' (ASCII), 'unicode', 'latex' or 'json'."""
    if style == "json":
        return json.dumps(to_json(expr), sort_keys=True)
    if style not in ("text", "unicode", "latex"):
        raise ValueError(f"unknown style {style!r}")
    if not expr.terms:
        return r"\{0\}" if style == "latex" else "{0}"
    parts = []
    for f, e in expr.terms:
        s = _render_factor(f, style)
        if e != 1:
            s += f"^{{{e}}}" if style == "latex" else f"^{e}"
        parts.append(s)
    return "+".join(parts) if style == "latex" else " + ".join(parts)


def to_json(expr: LieAlgebraExpr) -> dict:
    out = []
    for f, e in expr.terms:
        d = {"kind": f.kind, "params": list(f.params), "exp": e}
        if f.orient:
            d["orient"] = f.orient
        out.append(d)
    return {"factors": out}


def from_json(obj: dict | str) -> LieAlgebraExpr:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        items = []
        for d in obj["factors"]:
            f = AtomicFactor(d["kind"], tuple(d["params"]), d.get("orient", ""))
            if f.kind not in _ARITY or f.orient not in ORIENTS:
                raise ParseError(f"bad factor {d!r}")
            items.append((f, int(d["exp"])))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed expression JSON: {exc}") from exc
    return canonicalize(LieAlgebraExpr(items))


# -------------------------------------------------------------------- parse

_TERM = re.compile(r"^(?P<name>[a-zA-Zℝℂ]+\*?)(?:\((?P<args>[^()]*)\))?(?:\^\{?(?P<exp>\d+)\}?)?$")


def _split_top(s: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def parse_factor(name: str, args: list[str]) -> AtomicFactor | None:
    field = None
    if args and args[-1] in ("R", "C"):
        field = args[-1]
        args = args[:-1]
    try:
        nums = [int(a) for a in args]
    except ValueError as exc:
        raise ParseError(f"bad arguments {args!r} for {name}") from exc
    if name in ("R", "C") and not nums and field is None:
        return make("R" if name == "R" else "C_abelian")
    if name == "u" and len(nums) == 1 and field is None:
        return make("u", nums[0])
    if name in ("su*", "so*") and len(nums) == 1 and field is None:
        return make("su_star" if name == "su*" else "so_star", nums[0])
    if name in ("sl", "so", "sp") and len(nums) == 1 and field:
        return make(f"{name}_{field}", nums[0])
    if name in ("su", "so", "sp") and field is None:
        if len(nums) == 2:
            return make({"su": "su", "so": "so_pq", "sp": "sp_pq"}[name], *nums)
        if len(nums) == 1:
            return make(f"{name}_compact", nums[0])
    raise ParseError(f"cannot parse factor {name}({','.join(args)})")


def parse(text: str) -> LieAlgebraExpr:
    """Parse the text/unicode rendering (e.g. 'R^2 + so(2,0) + sl(3,C)')."""
    s = text.replace(" ", "").replace("ℝ", "R").replace("ℂ", "C")
    if s in ("{0}", "0", ""):
        return LieAlgebraExpr()
    items = []
    for term in _split_top(s):
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"cannot parse term {term!r}")
        args = [a for a in (m.group("args") or "").split(",") if a != ""]
        f = parse_factor(m.group("name"), args)
        items.append((f, int(m.group("exp") or 1)))
    return LieAlgebraExpr(items)
