"""Catalog of classical semisimple symmetric pairs.

Each family is a list of rows; a row carries its remark (parameter
condition), the types of the restricted root system and of its
positive-signature part, the coset index and the hyperbolic principal
isotropy subalgebra (HPIS).  Rows with an n = 2m / n = 2m+1 split are keyed
by n with parity dispatch.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .cosets import EmbeddedSubsystem, embed_subsystem, format_types, parse_types
from .errors import ConstraintViolated, SignatureDataUnavailable, UnknownPair
from .liealg import LieAlgebraExpr, parse
from .rootsys import Root, RootSystem, build_root_system, format_root


@dataclass(frozen=True)
class CatalogRow:
    family_id: str
    remark: str
    applies: Callable[..., bool]
    delta: Callable[..., str]
    delta_a: Callable[..., str]
    index: Callable[..., int]
    hpis: Callable[..., str]
    delta_text: str
    delta_a_text: str
    index_text: str
    hpis_text: str
    extra: Callable[..., bool] = lambda **kw: True


@dataclass(frozen=True)
class Family:
    family_id: str
    g: str
    h: str
    params: tuple[str, ...]
    base: Callable[..., bool]
    base_text: str
    rows: tuple[CatalogRow, ...]


@dataclass(frozen=True)
class SymmetricPairSpec:
    family: Family
    row: CatalogRow
    params: tuple[tuple[str, int], ...]
    delta: tuple[tuple[str, int], ...]
    delta_a: tuple[tuple[str, int], ...]
    index: int
    hpis_expr: LieAlgebraExpr = field(compare=False)

    @property
    def family_id(self) -> str:
        return self.family.family_id

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    @property
    def name(self) -> str:
        return f"({_subst(self.family.g, self.param_dict)}, {_subst(self.family.h, self.param_dict)})"

    @property
    def slug(self) -> str:
        return self.family_id + "".join(f":{k}={v}" for k, v in self.params)

    def ambient(self) -> RootSystem:
        (fam, r), = self.delta
        return build_root_system(fam, r)

    def subsystem(self) -> EmbeddedSubsystem:
        return embed_subsystem(self.ambient(), self.delta_a)

    def to_dict(self) -> dict:
        return {
            "family_id": self.family_id, "pair": self.name, "params": self.param_dict,
            "delta": format_types(self.delta), "delta_a": format_types(self.delta_a),
            "index": self.index, "hpis": str(self.hpis_expr), "remark": self.row.remark,
        }


def _eval_arg(arg: str, params: dict[str, int]) -> str:
    pyexpr = re.sub(r"(\d)([a-z(])", r"\1*\2", arg)
    try:
        return str(eval(pyexpr, {"__builtins__": {}}, dict(params)))
    except Exception:
        return arg


def _subst(text: str, params: dict[str, int]) -> str:
    """Evaluate parameter arithmetic inside a display name, e.g. su(p,n-p) -> su(2,2)."""
    out, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch == "(" and i and text[i - 1].isalpha() or ch == "(" and i and text[i - 1] == "*":
            depth, j, args, cur = 1, i + 1, [], ""
            while depth:
                c = text[j]
                if c == "(":
                    depth += 1
                elif c == ")":
                    depth -= 1
                if depth == 1 and c == "," or depth == 0:
                    args.append(cur)
                    cur = ""
                else:
                    cur += c
                j += 1
            out.append("(" + ",".join(_eval_arg(a, params) for a in args) + ")")
            i = j
        else:
            out.append(ch)
            i += 1
    return "".join(out)


# ------------------------------------------------------------------- rows

def _r(fid, remark, applies, delta, delta_a, index, hpis, dt, dat, it, ht, extra=None):
    return CatalogRow(fid, remark, applies, delta, delta_a, index, hpis, dt, dat, it, ht,
                      extra or (lambda **kw: True))


ALWAYS = lambda **kw: True  # noqa: E731


def _one_row(fid, delta, delta_a, index, hpis, dt, dat, it, ht):
    return (_r(fid, "", ALWAYS, delta, delta_a, index, hpis, dt, dat, it, ht),)


def _split_p(fid, gt, eq, hpis_gt, hpis_eq, ht_gt, ht_eq):
    """Rows of the BC_p (n > 2p) / C_p (n = 2p) pattern with index 1."""
    return (
        _r(fid, "n>2p", lambda n, p: n > 2 * p, lambda n, p: f"BC{p}", lambda n, p: f"BC{p}",
           lambda n, p: 1, hpis_gt, "(BC)_p", "(BC)_p", "1", ht_gt),
        _r(fid, "n=2p", lambda n, p: n == 2 * p, lambda n, p: f"C{p}", lambda n, p: f"C{p}",
           lambda n, p: 1, hpis_eq, "C_p", "C_p", "1", ht_eq),
    )


def _split_m(fid, hpis_odd, hpis_even, ht_odd, ht_even, sub_odd="BC", sub_even="C", idx_even=1):
    """Rows keyed by the parity of n with m = floor(n/2)."""
    return (
        _r(fid, "n=2m+1", lambda n: n % 2 == 1, lambda n: f"BC{n // 2}",
           lambda n: f"{sub_odd}{n // 2}", lambda n: 1, hpis_odd,
           "(BC)_m", f"{'(BC)' if sub_odd == 'BC' else sub_odd}_m", "1", ht_odd),
        _r(fid, "n=2m", lambda n: n % 2 == 0, lambda n: f"C{n // 2}",
           lambda n: f"{sub_even}{n // 2}", lambda n: idx_even, hpis_even,
           "C_m", f"{sub_even}_m", str(idx_even), ht_even),
    )


def _axa(fid, hpis, ht):
    return _one_row(fid, lambda n, p: f"A{n - 1}", lambda n, p: f"A{p - 1}xA{n - p - 1}",
                    lambda n, p: comb(n, p), hpis, "A_{n-1}", "A_{p-1}xA_{n-p-1}", "nCp", ht)


def _same_c(fid, hpis, ht):
    return _one_row(fid, lambda n: f"C{n}", lambda n: f"C{n}", lambda n: 1, hpis,
                    "C_n", "C_n", "1", ht)


def _same_a(fid, hpis, ht):
    return _one_row(fid, lambda n: f"A{n - 1}", lambda n: f"A{n - 1}", lambda n: 1, hpis,
                    "A_{n-1}", "A_{n-1}", "1", ht)


def _c_a(fid, hpis, ht):
    return _one_row(fid, lambda n: f"C{n}", lambda n: f"A{n - 1}", lambda n: 2 ** n, hpis,
                    "C_n", "A_{n-1}", "2^n", ht)


def _d_a(fid, hpis, ht):
    return _one_row(fid, lambda n: f"D{n}", lambda n: f"A{n - 1}", lambda n: 2 ** (n - 1), hpis,
                    "D_n", "A_{n-1}", "2^{n-1}", ht)


def _c_cxc(fid, hpis, ht):
    return _one_row(fid, lambda n, p: f"C{n}", lambda n, p: f"C{p}xC{n - p}",
                    lambda n, p: comb(n, p), hpis, "C_n", "C_pxC_{n-p}", "nCp", ht)


def _bc_b_split(fid, hpis_gt, hpis_eq, ht_gt, ht_eq):
    return (
        _r(fid, "n>2p", lambda n, p: n > 2 * p, lambda n, p: f"BC{p}", lambda n, p: f"B{p}",
           lambda n, p: 1, hpis_gt, "(BC)_p", "B_p", "1", ht_gt),
        _r(fid, "n=2p", lambda n, p: n == 2 * p, lambda n, p: f"C{p}", lambda n, p: f"D{p}",
           lambda n, p: 2, hpis_eq, "C_p", "D_p", "2", ht_eq),
    )


N1 = (lambda n: n >= 1, "n>=1")
N2 = (lambda n: n >= 2, "n>=2")
P_MID = (lambda n, p: 1 <= p <= n - 1, "1<=p<=n-1")
P_HALF = (lambda n, p: 1 <= p and 2 * p <= n, "1<=p, 2p<=n")
NMIJ = (lambda n, m, i, j: 1 <= n <= m and 0 <= i <= n and 0 <= j <= m and 0 < i + j < n + m,
        "1<=n<=m, 0<=i<=n, 0<=j<=m, 0<i+j<n+m")


def _nmij_rows(fid, kind):
    """The six-case blocks for su(n,m), so(n,m), sp(n,m)."""
    conds = [
        ("i+j=n=m", lambda n, m, i, j: i + j == n == m),
        ("n<i+j=m", lambda n, m, i, j: n < i + j == m),
        ("n<=m<i+j", lambda n, m, i, j: n <= m < i + j),
        ("n=i+j<m", lambda n, m, i, j: n == i + j < m),
        ("n<i+j<m", lambda n, m, i, j: n < i + j < m),
        ("i+j<n<=m", lambda n, m, i, j: i + j < n <= m),
    ]
    if kind == "so":
        deltas = [
            (lambda n, m, i, j: f"D{n}", lambda n, m, i, j: f"D{i}xD{n - i}",
             lambda n, m, i, j: 2 * comb(n, i), "D_n", "D_ixD_{n-i}", "2nCi"),
            (lambda n, m, i, j: f"B{n}", lambda n, m, i, j: f"D{i}xB{n - i}",
             lambda n, m, i, j: 2 * comb(n, i), "B_n", "D_ixB_{n-i}", "2nCi"),
            (lambda n, m, i, j: f"B{m + n - i - j}", lambda n, m, i, j: f"B{m - j}xB{n - i}",
             lambda n, m, i, j: comb(m + n - i - j, n - i), "B_{m+n-(i+j)}", "B_{m-j}xB_{n-i}",
             "(m+n-(i+j))C(n-i)"),
            (lambda n, m, i, j: f"B{n}", lambda n, m, i, j: f"B{i}xD{n - i}",
             lambda n, m, i, j: 2 * comb(n, i), "B_n", "B_ixD_{n-i}", "2nCi"),
            (lambda n, m, i, j: f"B{n}", lambda n, m, i, j: f"B{i}xB{n - i}",
             lambda n, m, i, j: comb(n, i), "B_n", "B_ixB_{n-i}", "nCi"),
            (lambda n, m, i, j: f"B{i + j}", lambda n, m, i, j: f"B{i}xB{j}",
             lambda n, m, i, j: comb(i + j, i), "B_{i+j}", "B_ixB_j", "(i+j)Ci"),
        ]
        hp = [
            (lambda n, m, i, j: "{0}", "{0}"),
            (lambda n, m, i, j: f"so({m - n})", "so(m-n)"),
            (lambda n, m, i, j: f"so({i + j - n},{i + j - m})", "so(i+j-n,i+j-m)"),
            (lambda n, m, i, j: f"so({m - n})", "so(m-n)"),
            (lambda n, m, i, j: f"so({i + j - n}) + so({m - i - j})", "so(i+j-n)+so(m-(i+j))"),
            (lambda n, m, i, j: f"so({n - i - j},{m - i - j})", "so(n-(i+j),m-(i+j))"),
        ]
        extras = [lambda n, m, i, j: 1 <= i <= n - 1, lambda n, m, i, j: i >= 1, None,
                  lambda n, m, i, j: n - i >= 1, None, None]
    else:
        deltas = [
            (lambda n, m, i, j: f"C{n}", lambda n, m, i, j: f"C{i}xC{n - i}",
             lambda n, m, i, j: comb(n, i), "C_n", "C_ixC_{n-i}", "nCi"),
            (lambda n, m, i, j: f"BC{n}", lambda n, m, i, j: f"C{i}xBC{n - i}",
             lambda n, m, i, j: comb(n, i), "(BC)_n", "C_ix(BC)_{n-i}", "nCi"),
            (lambda n, m, i, j: f"BC{m + n - i - j}", lambda n, m, i, j: f"BC{m - j}xBC{n - i}",
             lambda n, m, i, j: comb(m + n - i - j, n - i), "(BC)_{m+n-(i+j)}",
             "(BC)_{m-j}x(BC)_{n-i}", "(m+n-(i+j))C(n-i)"),
            (lambda n, m, i, j: f"BC{n}", lambda n, m, i, j: f"BC{i}xC{n - i}",
             lambda n, m, i, j: comb(n, i), "(BC)_n", "(BC)_ixC_{n-i}", "nCi"),
            (lambda n, m, i, j: f"BC{n}", lambda n, m, i, j: f"BC{i}xBC{n - i}",
             lambda n, m, i, j: comb(n, i), "(BC)_n", "(BC)_ix(BC)_{n-i}", "nCi"),
            (lambda n, m, i, j: f"BC{i + j}", lambda n, m, i, j: f"BC{i}xBC{j}",
             lambda n, m, i, j: comb(i + j, i), "(BC)_{i+j}", "(BC)_ix(BC)_j", "(i+j)Ci"),
        ]
        extras = [None] * 6
        if kind == "su":
            hp = [
                (lambda n, m, i, j: f"so(2)^{n - 1}", "so(2)^{n-1}"),
                (lambda n, m, i, j: f"so(2)^{n} + su({m - n})", "so(2)^n+su(m-n)"),
                (lambda n, m, i, j: f"so(2)^{m + n - i - j} + su({i + j - n},{i + j - m})",
                 "so(2)^{m+n-(i+j)}+su(i+j-n,i+j-m)"),
                (lambda n, m, i, j: f"so(2)^{n} + su({m - n})", "so(2)^n+su(m-n)"),
                (lambda n, m, i, j: f"so(2)^{n + 1} + su({i + j - n}) + su({m - i - j})",
                 "so(2)^{n+1}+su(i+j-n)+su(m-(i+j))"),
                (lambda n, m, i, j: f"so(2)^{i + j} + su({n - i - j},{m - i - j})",
                 "so(2)^{i+j}+su(n-(i+j),m-(i+j))"),
            ]
        else:
            hp = [
                (lambda n, m, i, j: f"sp(1)^{n}", "sp(1)^n"),
                (lambda n, m, i, j: f"sp(1)^{n} + sp({m - n})", "sp(1)^n+sp(m-n)"),
                (lambda n, m, i, j: f"sp(1)^{m + n - i - j} + sp({i + j - n},{i + j - m})",
                 "sp(1)^{m+n-(i+j)}+sp(i+j-n,i+j-m)"),
                (lambda n, m, i, j: f"sp(1)^{n} + sp({m - n})", "sp(1)^n+sp(m-n)"),
                (lambda n, m, i, j: f"sp(1)^{n} + sp({i + j - n}) + sp({m - i - j})",
                 "sp(1)^n+sp(i+j-n)+sp(m-(i+j))"),
                (lambda n, m, i, j: f"sp(1)^{i + j} + sp({n - i - j},{m - i - j})",
                 "sp(1)^{i+j}+sp(n-(i+j),m-(i+j))"),
            ]
    rows = []
    for (rem, cond), (d, da, idx, dt, dat, it), (h, ht), ex in zip(conds, deltas, hp, extras):
        rows.append(_r(fid, rem, cond, d, da, idx, h, dt, dat, it, ht, ex))
    return tuple(rows)


def _so_c_so_pq():
    fid = "soC-sopq"
    return (
        _r(fid, "n=2m+1, p=2q", lambda n, p: n % 2 == 1 and p % 2 == 0,
           lambda n, p: f"B{n // 2}", lambda n, p: f"D{p // 2}xB{n // 2 - p // 2}",
           lambda n, p: 2 * comb(n // 2, p // 2), lambda n, p: f"so(2)^{n // 2}",
           "B_m", "D_qxB_{m-q}", "2mCq", "so(2)^m"),
        _r(fid, "n=2(m+1), p=2q+1", lambda n, p: n % 2 == 0 and p % 2 == 1,
           lambda n, p: f"B{n // 2 - 1}", lambda n, p: f"B{p // 2}xB{n // 2 - 1 - p // 2}",
           lambda n, p: comb(n // 2 - 1, p // 2), lambda n, p: f"so(2)^{n // 2 - 1} + R",
           "B_m", "B_qxB_{m-q}", "mCq", "so(2)^m+R"),
        _r(fid, "n=2m, p=2q", lambda n, p: n % 2 == 0 and p % 2 == 0,
           lambda n, p: f"D{n // 2}", lambda n, p: f"D{p // 2}xD{n // 2 - p // 2}",
           lambda n, p: 2 * comb(n // 2, p // 2), lambda n, p: f"so(2)^{n // 2}",
           "D_m", "D_qxD_{m-q}", "2mCq", "so(2)^m"),
    )


def _so_star_su_pq():
    fid = "sostar-supq"
    return (
        _r(fid, "n=2m+1, p=2q", lambda n, p: n % 2 == 1 and p % 2 == 0,
           lambda n, p: f"BC{n // 2}", lambda n, p: f"C{p // 2}xBC{n // 2 - p // 2}",
           lambda n, p: comb(n // 2, p // 2), lambda n, p: f"su(2)^{n // 2} + so(2)",
           "(BC)_m", "C_qx(BC)_{m-q}", "mCq", "su(2)^m+so(2)"),
        _r(fid, "n=2(m+1), p=2q+1", lambda n, p: n % 2 == 0 and p % 2 == 1,
           lambda n, p: f"BC{n // 2 - 1}", lambda n, p: f"C{p // 2}xBC{n // 2 - 1 - p // 2}",
           lambda n, p: comb(n // 2 - 1, p // 2), lambda n, p: f"su(2)^{n // 2 - 1} + so(2)",
           "(BC)_m", "C_qx(BC)_{m-q}", "mCq", "su(2)^m+so(2)"),
        _r(fid, "n=2m, p=2q", lambda n, p: n % 2 == 0 and p % 2 == 0,
           lambda n, p: f"C{n // 2}", lambda n, p: f"C{p // 2}xC{n // 2 - p // 2}",
           lambda n, p: comb(n // 2, p // 2), lambda n, p: f"su(2)^{n // 2}",
           "C_m", "C_qxC_{m-q}", "mCq", "su(2)^m"),
    )


def _fam(fid, g, h, params, base, rows):
    return Family(fid, g, h, params, base[0], base[1], rows)


def _build_families() -> dict[str, Family]:
    F = []
    F.append(_fam("slC-slR", "sl(n,C)", "sl(n,R)", ("n",), N2, _split_m(
        "slC-slR", lambda n: f"R^{(n - 1) // 2} + so(2)^{n // 2}",
        lambda n: f"R^{(n - 1) // 2} + so(2)^{n // 2}",
        "R^{[(n-1)/2]}+so(2)^{[n/2]}", "R^{[(n-1)/2]}+so(2)^{[n/2]}",
        sub_odd="B", sub_even="D", idx_even=2)))
    F.append(_fam("slR2-slR", "sl(n,R)+sl(n,R)", "sl(n,R)", ("n",), N2,
                  _same_a("slR2-slR", lambda n: f"R^{n - 1}", "R^{n-1}")))
    F.append(_fam("slC-soC", "sl(n,C)", "so(n,C)", ("n",), N2,
                  _same_a("slC-soC", lambda n: "{0}", "{0}")))
    F.append(_fam("sl2nC-sustar", "sl(2n,C)", "su*(2n)", ("n",), N1,
                  _same_c("sl2nC-sustar", lambda n: f"R^{n - 1} + so(2)^{n}", "R^{n-1}+so(2)^n")))
    F.append(_fam("sustar2-sustar", "su*(2n)+su*(2n)", "su*(2n)", ("n",), N2,
                  _same_a("sustar2-sustar", lambda n: f"R^{n - 1} + sp(1)^{n}", "R^{n-1}+sp(1)^n")))
    F.append(_fam("sl2nC-spC", "sl(2n,C)", "sp(n,C)", ("n",), N2,
                  _same_a("sl2nC-spC", lambda n: f"sp(1,C)^{n}", "sp(1,C)^n")))
    F.append(_fam("slC-supq", "sl(n,C)", "su(p,n-p)", ("n", "p"), P_MID,
                  _axa("slC-supq", lambda n, p: f"so(2)^{n - 1}", "so(2)^{n-1}")))
    F.append(_fam("supq2-supq", "su(p,n-p)+su(p,n-p)", "su(p,n-p)", ("n", "p"), P_HALF, _split_p(
        "supq2-supq", True, True, lambda n, p: f"R^{p} + so(2)^{p} + su({n - 2 * p})",
        lambda n, p: f"R^{p} + so(2)^{p - 1}", "R^p+so(2)^p+su(n-2p)", "R^p+so(2)^{p-1}")))
    F.append(_fam("slC-slCslC", "sl(n,C)", "sl(p,C)+sl(n-p,C)+C", ("n", "p"), P_HALF, _split_p(
        "slC-slCslC", True, True, lambda n, p: f"C^{p} + sl({n - 2 * p},C)",
        lambda n, p: f"C^{p - 1}", "C^p+sl(n-2p,C)", "C^{p-1}")))
    F.append(_fam("soC2n-sostar", "so(2n,C)", "so*(2n)", ("n",), N2,
                  _d_a("soC2n-sostar", lambda n: f"so(2)^{n}", "so(2)^n")))
    F.append(_fam("sostar2-sostar", "so*(2n)+so*(2n)", "so*(2n)", ("n",), N2, _split_m(
        "sostar2-sostar", lambda n: f"R^{n // 2} + su(2)^{n // 2} + so(2)",
        lambda n: f"R^{n // 2} + su(2)^{n // 2}", "R^m+su(2)^m+so(2)", "R^m+su(2)^m")))
    F.append(_fam("soC2n-slC", "so(2n,C)", "sl(n,C)+C", ("n",), N2, _split_m(
        "soC2n-slC", lambda n: f"sl(2,C)^{n // 2} + C", lambda n: f"sl(2,C)^{n // 2}",
        "sl(2,C)^m+C", "sl(2,C)^m")))
    F.append(_fam("soC-sopq", "so(n,C)", "so(p,n-p)", ("n", "p"), (
        lambda n, p: 1 <= p <= n - 1 and n >= 3, "1<=p<=n-1, n>=3"), _so_c_so_pq()))
    F.append(_fam("sopq2-sopq", "so(p,n-p)+so(p,n-p)", "so(p,n-p)", ("n", "p"), P_HALF, (
        _r("sopq2-sopq", "n>2p", lambda n, p: n > 2 * p, lambda n, p: f"B{p}", lambda n, p: f"B{p}",
           lambda n, p: 1, lambda n, p: f"R^{p} + so({n - 2 * p})", "B_p", "B_p", "1", "R^p+so(n-2p)"),
        _r("sopq2-sopq", "n=2p", lambda n, p: n == 2 * p, lambda n, p: f"D{p}", lambda n, p: f"D{p}",
           lambda n, p: 1, lambda n, p: f"R^{p} + so({n - 2 * p})", "D_p", "D_p", "1", "R^p+so(n-2p)"),
    )))
    F.append(_fam("soC-soCsoC", "so(n,C)", "so(p,C)+so(n-p,C)", ("n", "p"), P_HALF, (
        _r("soC-soCsoC", "n>2p", lambda n, p: n > 2 * p, lambda n, p: f"B{p}", lambda n, p: f"B{p}",
           lambda n, p: 1, lambda n, p: f"so({n - 2 * p},C)", "B_p", "B_p", "1", "so(n-2p,C)"),
        _r("soC-soCsoC", "n=2p", lambda n, p: n == 2 * p, lambda n, p: f"D{p}", lambda n, p: f"D{p}",
           lambda n, p: 1, lambda n, p: f"so({n - 2 * p},C)", "D_p", "D_p", "1", "so(n-2p,C)"),
    )))
    F.append(_fam("spC-spR", "sp(n,C)", "sp(n,R)", ("n",), N1,
                  _c_a("spC-spR", lambda n: f"so(2)^{n}", "so(2)^n")))
    F.append(_fam("spR2-spR", "sp(n,R)+sp(n,R)", "sp(n,R)", ("n",), N1,
                  _same_c("spR2-spR", lambda n: f"R^{n}", "R^n")))
    F.append(_fam("spC-slC", "sp(n,C)", "sl(n,C)+C", ("n",), N1,
                  _same_c("spC-slC", lambda n: "{0}", "{0}")))
    F.append(_fam("spC-sppq", "sp(n,C)", "sp(p,n-p)", ("n", "p"), P_MID,
                  _c_cxc("spC-sppq", lambda n, p: f"so(2)^{n}", "so(2)^n")))
    F.append(_fam("sppq2-sppq", "sp(p,n-p)+sp(p,n-p)", "sp(p,n-p)", ("n", "p"), P_HALF, _split_p(
        "sppq2-sppq", True, True, lambda n, p: f"R^{p} + sp(1)^{p} + sp({n - 2 * p})",
        lambda n, p: f"R^{p} + sp(1)^{p} + sp({n - 2 * p})",
        "R^p+sp(1)^p+sp(n-2p)", "R^p+sp(1)^p+sp(n-2p)")))
    F.append(_fam("spC-spCspC", "sp(n,C)", "sp(p,C)+sp(n-p,C)", ("n", "p"), P_HALF, _split_p(
        "spC-spCspC", True, True, lambda n, p: f"sp(1,C)^{p} + sp({n - 2 * p},C)",
        lambda n, p: f"sp(1,C)^{p} + sp({n - 2 * p},C)",
        "sp(1,C)^p+sp(n-2p,C)", "sp(1,C)^p+sp(n-2p,C)")))
    F.append(_fam("slR-sopq", "sl(n,R)", "so(p,n-p)", ("n", "p"), P_MID,
                  _axa("slR-sopq", lambda n, p: "{0}", "{0}")))
    F.append(_fam("supq-sopq", "su(p,n-p)", "so(p,n-p)", ("n", "p"), P_HALF, _bc_b_split(
        "supq-sopq", lambda n, p: f"so({n - 2 * p})", lambda n, p: f"so({n - 2 * p})",
        "so(n-2p)", "so(n-2p)")))
    F.append(_fam("slR-slRslR", "sl(n,R)", "sl(p,R)+sl(n-p,R)+R", ("n", "p"), P_HALF, _bc_b_split(
        "slR-slRslR", lambda n, p: f"R^{p} + sl({n - 2 * p},R)", lambda n, p: f"R^{p - 1}",
        "R^p+sl(n-2p,R)", "R^{p-1}")))
    F.append(_fam("sustar-sppq", "su*(2n)", "sp(p,n-p)", ("n", "p"), P_MID,
                  _axa("sustar-sppq", lambda n, p: f"sp(1)^{n}", "sp(1)^n")))
    F.append(_fam("su2p2np-sppq", "su(2p,2(n-p))", "sp(p,n-p)", ("n", "p"), P_HALF, _split_p(
        "su2p2np-sppq", True, True, lambda n, p: f"sl(2,C)^{p} + sp({n - 2 * p})",
        lambda n, p: f"sl(2,C)^{p} + sp({n - 2 * p})", "sl(2,C)^p+sp(n-2p)", "sl(2,C)^p+sp(n-2p)")))
    F.append(_fam("sustar-sustarsustar", "su*(2n)", "su*(2p)+su*(2(n-p))+R", ("n", "p"), P_HALF,
                  _split_p("sustar-sustarsustar", True, True,
                           lambda n, p: f"R^{p} + sp(1)^{p} + su*({2 * (n - 2 * p)})",
                           lambda n, p: f"R^{p - 1} + sp(1)^{p}",
                           "R^p+sp(1)^p+su*(2(n-2p))", "R^{p-1}+sp(1)^p")))
    F.append(_fam("sl2nR-spR", "sl(2n,R)", "sp(n,R)", ("n",), N2,
                  _same_a("sl2nR-spR", lambda n: f"sp(1,R)^{n}", "sp(1,R)^n")))
    F.append(_fam("sustar-sostar", "su*(2n)", "so*(2n)", ("n",), N2,
                  _same_a("sustar-sostar", lambda n: f"u(1)^{n}", "u(1)^n")))
    F.append(_fam("sunn-sostar", "su(n,n)", "so*(2n)", ("n",), N1,
                  _same_c("sunn-sostar", lambda n: "{0}", "{0}")))
    F.append(_fam("sl2nR-slC", "sl(2n,R)", "sl(n,C)+so(2)", ("n",), N1,
                  _same_c("sl2nR-slC", lambda n: f"R^{n - 1}", "R^{n-1}")))
    F.append(_fam("sustar-slC", "su*(2n)", "sl(n,C)+so(2)", ("n",), N2, _split_m(
        "sustar-slC", lambda n: f"R^{n // 2} + su(2)^{n // 2} + so(2)",
        lambda n: f"R^{n // 2 - 1} + su(2)^{n // 2}", "R^m+su(2)^m+so(2)", "R^{m-1}+su(2)^m")))
    F.append(_fam("sunn-spR", "su(n,n)", "sp(n,R)", ("n",), N2, _split_m(
        "sunn-spR", lambda n: f"sp(1,C)^{n // 2} + sp(1,R)", lambda n: f"sp(1,C)^{n // 2}",
        "sp(1,C)^m+sp(1,R)", "sp(1,C)^m")))
    F.append(_fam("sunn-slC", "su(n,n)", "sl(n,C)+R", ("n",), N1,
                  _c_a("sunn-slC", lambda n: f"so(2)^{n - 1}", "so(2)^{n-1}")))
    F.append(_fam("sostar-supq", "so*(2n)", "su(p,n-p)+so(2)", ("n", "p"), P_MID, _so_star_su_pq()))
    F.append(_fam("so2p2np-supq", "so(2p,2(n-p))", "su(p,n-p)+so(2)", ("n", "p"), P_HALF, _split_p(
        "so2p2np-supq", True, True, lambda n, p: f"su(1,1)^{p} + u({n - 2 * p})",
        lambda n, p: f"su(1,1)^{p} + u({n - 2 * p})", "su(1,1)^p+u(n-2p)", "su(1,1)^p+u(n-2p)")))
    F.append(_fam("sostar-sostarsostar", "so*(2n)", "so*(2p)+so*(2(n-p))", ("n", "p"), P_HALF,
                  _split_p("sostar-sostarsostar", True, True,
                           lambda n, p: f"so(2)^{p} + so*({2 * (n - 2 * p)})",
                           lambda n, p: f"so(2)^{p} + so*({2 * (n - 2 * p)})",
                           "so(2)^p+so*(2(n-2p))", "so(2)^p+so*(2(n-2p))")))
    F.append(_fam("sonn-soC", "so(n,n)", "so(n,C)", ("n",), N2,
                  _d_a("sonn-soC", lambda n: "{0}", "{0}")))
    F.append(_fam("sostar-soC", "so*(2n)", "so(n,C)", ("n",), N2, _split_m(
        "sostar-soC", lambda n: f"so(2)^{n // 2}", lambda n: f"so(2)^{n // 2}",
        "so(2)^{[n/2]}", "so(2)^{[n/2]}", sub_odd="B", sub_even="D", idx_even=2)))
    F.append(_fam("sonn-slR", "so(n,n)", "sl(n,R)+R", ("n",), N2, _split_m(
        "sonn-slR", lambda n: f"R + sl(2,R)^{n // 2}", lambda n: f"sl(2,R)^{n // 2}",
        "R+sl(2,R)^m", "sl(2,R)^m", sub_odd="B", sub_even="D", idx_even=2)))
    F.append(_fam("sostar4n-sustar", "so*(4n)", "su*(2n)+R", ("n",), N1,
                  _c_a("sostar4n-sustar", lambda n: f"sp(1)^{n}", "sp(1)^n")))
    F.append(_fam("spR-supq", "sp(n,R)", "su(p,n-p)+so(2)", ("n", "p"), P_MID,
                  _c_cxc("spR-supq", lambda n, p: "{0}", "{0}")))
    F.append(_fam("sppq-supq", "sp(p,n-p)", "su(p,n-p)+so(2)", ("n", "p"), P_HALF, _split_p(
        "sppq-supq", True, True, lambda n, p: f"u(1)^{p} + u({n - 2 * p})",
        lambda n, p: f"u(1)^{p} + u({n - 2 * p})", "u(1)^p+u(n-2p)", "u(1)^p+u(n-2p)")))
    F.append(_fam("spR-spRspR", "sp(n,R)", "sp(p,R)+sp(n-p,R)", ("n", "p"), P_HALF, _split_p(
        "spR-spRspR", True, True, lambda n, p: f"sp(1,R)^{p} + sp({n - 2 * p},R)",
        lambda n, p: f"sp(1,R)^{p} + sp({n - 2 * p},R)", "sp(1,R)^p+sp(n-2p,R)",
        "sp(1,R)^p+sp(n-2p,R)")))
    F.append(_fam("spR-slR", "sp(n,R)", "sl(n,R)+R", ("n",), N1,
                  _c_a("spR-slR", lambda n: "{0}", "{0}")))
    F.append(_fam("spnn-spC", "sp(n,n)", "sp(n,C)", ("n",), N1,
                  _c_a("spnn-spC", lambda n: f"sp(1)^{n}", "sp(1)^n")))
    F.append(_fam("sp2nR-spC", "sp(2n,R)", "sp(n,C)", ("n",), N1,
                  _same_c("sp2nR-spC", lambda n: f"sp(1,R)^{n}", "sp(1,R)^n")))
    F.append(_fam("spnn-sustar", "sp(n,n)", "su*(2n)+R", ("n",), N1,
                  _same_c("spnn-sustar", lambda n: f"u(1)^{n}", "u(1)^n")))
    F.append(_fam("sunm-suij", "su(n,m)", "su(i,j)+su(n-i,m-j)+so(2)", ("n", "m", "i", "j"), NMIJ,
                  _nmij_rows("sunm-suij", "su")))
    F.append(_fam("sonm-soij", "so(n,m)", "so(i,j)+so(n-i,m-j)", ("n", "m", "i", "j"), NMIJ,
                  _nmij_rows("sonm-soij", "so")))
    F.append(_fam("spnm-spij", "sp(n,m)", "sp(i,j)+sp(n-i,m-j)", ("n", "m", "i", "j"), NMIJ,
                  _nmij_rows("spnm-spij", "sp")))
    return {f.family_id: f for f in F}


FAMILIES: dict[str, Family] = _build_families()

# instance aliases usable wherever a selector is accepted
ALIASES: dict[str, tuple[str, dict[str, int]]] = {
    "sl4R-so22": ("slR-sopq", {"n": 4, "p": 2}),
}


def family_ids() -> list[str]:
    return list(FAMILIES)


def _ambient_ok(delta: tuple[tuple[str, int], ...]) -> bool:
    (fam, r), = delta
    return r >= (2 if fam == "D" else 1)


def lookup_pair(family_id: str, params: dict[str, int] | None = None, **kw: int) -> SymmetricPairSpec:
    """Resolve a family and parameters to exactly one catalog row."""
    params = dict(params or {}, **kw)
    if family_id in ALIASES and not params:
        family_id, params = ALIASES[family_id][0], dict(ALIASES[family_id][1])
    fam = FAMILIES.get(family_id)
    if fam is None:
        raise UnknownPair(f"unknown family {family_id!r}")
    missing = [k for k in fam.params if k not in params]
    if missing:
        raise ConstraintViolated(f"{family_id} needs parameters {', '.join(missing)}")
    vals = {k: int(params[k]) for k in fam.params}
    if not fam.base(**vals):
        raise ConstraintViolated(f"{family_id}: {vals} violates {fam.base_text}")
    rows = [r for r in fam.rows if r.applies(**vals)]
    if len(rows) != 1:
        raise ConstraintViolated(f"{family_id}: {vals} matches {len(rows)} rows")
    row = rows[0]
    if not row.extra(**vals):
        raise ConstraintViolated(f"{family_id}: {vals} gives a degenerate factor for row {row.remark}")
    delta = parse_types(row.delta(**vals))
    delta_a = parse_types(row.delta_a(**vals))
    if not _ambient_ok(delta):
        raise ConstraintViolated(f"{family_id}: {vals} gives restricted root system {delta}")
    return SymmetricPairSpec(fam, row, tuple(vals.items()), delta, delta_a,
                             row.index(**vals), parse(row.hpis(**vals)))


def parse_selector(sel: str, **params: int) -> SymmetricPairSpec:
    """'slR-sopq:n=4:p=2', an alias such as 'sl4R-so22', or a family id plus params."""
    if sel in ALIASES:
        fid, p = ALIASES[sel]
        return lookup_pair(fid, {**p, **params})
    parts = sel.split(":")
    kv = dict(params)
    for part in parts[1:]:
        k, _, v = part.partition("=")
        kv[k] = int(v)
    return lookup_pair(parts[0], kv)


def hpis(spec: SymmetricPairSpec) -> LieAlgebraExpr:
    return spec.hpis_expr


def sweep(family_id: str, max_rank: int = 6, max_param: int = 14):
    """All valid specs of a family whose restricted root system has rank <= max_rank."""
    fam = FAMILIES[family_id]
    import itertools
    ranges = [range(0, max_param + 1)] * len(fam.params)
    for vals in itertools.product(*ranges):
        try:
            spec = lookup_pair(family_id, dict(zip(fam.params, vals)))
        except ConstraintViolated:
            continue
        if spec.delta[0][1] <= max_rank:
            yield spec


# --------------------------------------------------------------- signatures

@dataclass(frozen=True)
class SignatureTable:
    entries: dict  # root -> (m_plus, m_minus), or None when only support is known
    support: frozenset
    exact: bool

    def delta_a(self) -> frozenset:
        if self.exact:
            return frozenset(r for r, (mp, _) in self.entries.items() if mp > 0)
        return self.support


def _sl_r_so_pq_signatures(spec: SymmetricPairSpec) -> dict[Root, tuple[int, int]]:
    n, p = spec.param_dict["n"], spec.param_dict["p"]
    out = {}
    for r in spec.ambient().roots:
        i, j = [k for k, c in enumerate(r) if c]
        same = (i < p) == (j < p)
        out[r] = (1, 0) if same else (0, 1)
    return out


_EXACT_SIGNATURES = {("slR-sopq", (("n", 4), ("p", 2))): _sl_r_so_pq_signatures}


def signatures(spec: SymmetricPairSpec, support_only: bool = False) -> SignatureTable:
    """Signature data; raises unless exact values are encoded or support_only is set."""
    support = spec.subsystem().sub_roots
    fn = _EXACT_SIGNATURES.get((spec.family_id, spec.params))
    if fn is not None:
        return SignatureTable(fn(spec), support, True)
    if support_only:
        return SignatureTable({r: None for r in spec.ambient().roots}, support, False)
    raise SignatureDataUnavailable(
        f"only the positive-signature support is encoded for {spec.name}", support=support)


def signature_display(spec: SymmetricPairSpec) -> list[tuple[str, tuple[int, int]]]:
    """(simple root, (m+, m-)) rows for pairs with exact data."""
    from .rootsys import standard_simple_system
    table = signatures(spec)
    psi = standard_simple_system(spec.ambient())
    return [(format_root(a), table.entries[a]) for a in psi]


# -------------------------------------------------------------------- c-dual

_C_DUAL_PAIRS = [
    ("slR2-slR", "slC-slR"),
    ("sustar2-sustar", "sl2nC-sustar"),
    ("supq2-supq", "slC-supq"),
    ("sostar2-sostar", "soC2n-sostar"),
    ("sopq2-sopq", "soC-sopq"),
    ("spR2-spR", "spC-spR"),
    ("sppq2-sppq", "spC-sppq"),
    ("slR-sopq", "supq-sopq"),
]
# complex pairs (g, h) with g, h complex satisfy h + i q = g
_C_SELF = ["slC-soC", "sl2nC-spC", "slC-slCslC", "soC2n-slC", "soC-soCsoC", "spC-slC", "spC-spCspC"]


def _c_dual_map() -> dict[str, str]:
    m = {}
    for a, b in _C_DUAL_PAIRS:
        m[a], m[b] = b, a
    for a in _C_SELF:
        m[a] = a
    return m


C_DUAL = _c_dual_map()


def c_dual(spec: SymmetricPairSpec) -> SymmetricPairSpec:
    target = C_DUAL.get(spec.family_id)
    if target is None:
        raise UnknownPair(f"no encoded c-dual for {spec.family_id}")
    return lookup_pair(target, spec.param_dict)


# ------------------------------------------------------------------ catalog

def catalog_json() -> list[dict]:
    """One object per row, stable order."""
    out = []
    for fam in FAMILIES.values():
        for row in fam.rows:
            out.append({
                "family_id": fam.family_id, "g": fam.g, "h": fam.h, "params": list(fam.params),
                "constraints": fam.base_text, "delta": row.delta_text, "delta_a": row.delta_a_text,
                "index": row.index_text, "hpis": row.hpis_text, "remarks": row.remark,
                "c_dual": C_DUAL.get(fam.family_id),
            })
    return out


def catalog_dumps() -> str:
    return json.dumps(catalog_json(), indent=1, sort_keys=True, ensure_ascii=False)
