"""Embedded reference data and an independent evaluator for its row templates.

Row templates are kept as text close to the printed formulas, e.g.
'R^{k} + Σ sl(i_l-i_{l-1},R) + sp(n-i_k,R)'.  They are evaluated here with
a small arithmetic interpreter, separately from the rule functions used by
the orbit classifier, so the two can be compared.
"""
from __future__ import annotations

import ast
import json
import operator
import os
import re
from functools import lru_cache
from pathlib import Path

from .liealg import LieAlgebraExpr, parse

ENV_DIR = "SREP_GOLDEN_DIR"


def data_dir() -> Path:
    env = os.environ.get(ENV_DIR)
    return Path(env) if env else Path(__file__).with_name("data")


@lru_cache(maxsize=None)
def _load(name: str, root: str) -> dict:
    with open(Path(root) / name, encoding="utf-8") as fh:
        return json.load(fh)


def load(name: str) -> dict:
    return _load(name, str(data_dir()))


def htheta_blocks() -> list[dict]:
    return load("htheta_tables.json")["blocks"]


def table_a4_sl4r() -> dict:
    return load("hpis_table.json")


def example_a4() -> dict:
    return load("example_a4.json")


# ------------------------------------------------------------- arithmetic

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.FloorDiv: operator.floordiv}


def arith(text: str, env: dict[str, int]) -> int:
    """Integer arithmetic with + - * // and implicit products like 2(n-p)."""
    src = text.replace("i_k", "ik").replace(" ", "")
    src = re.sub(r"(\d)([a-z(])", r"\1*\2", src)
    src = re.sub(r"\)\(", ")*(", src)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise ValueError(f"unsupported expression {text!r}")
    return ev(ast.parse(src, mode="eval"))


def _split_terms(s: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    out.append(cur.strip())
    return [t for t in out if t]


_FACTOR = re.compile(r"^(?P<name>[A-Za-z]+\*?)(?:\((?P<args>.*)\))?(?:\^\{(?P<exp>[^}]*)\})?$")


def _split_args(s: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


def _factor(term: str, env: dict[str, int]) -> str:
    m = _FACTOR.match(term)
    if not m:
        raise ValueError(f"cannot read template term {term!r}")
    name, args, exp = m.group("name"), m.group("args"), m.group("exp")
    e = arith(exp, env) if exp else 1
    if e < 0:
        raise ValueError(f"negative exponent in {term!r}")
    if e == 0:
        return ""
    vals = []
    if args is not None:
        for a in _split_args(args):
            vals.append(a if a in ("R", "C") else str(arith(a, env)))
    body = name + (f"({','.join(vals)})" if args is not None else "")
    return body if e == 1 else f"{body}^{e}"


def evaluate_template(template: str, env: dict[str, int], blocks: list[int]) -> LieAlgebraExpr:
    """Evaluate a row template; 'Σ f(i_l-i_{l-1})' runs over the block sizes."""
    parts = []
    for term in _split_terms(template):
        if term.startswith("Σ"):
            body = term[1:].strip()
            for d in blocks:
                parts.append(_factor(body.replace("i_l-i_{l-1}", f"({d})"), env))
        else:
            parts.append(_factor(term, env))
    parts = [p for p in parts if p]
    return parse(" + ".join(parts) or "{0}")


# ---------------------------------------------------------- removal data

def removal_data(family: str, rank: int, removed: list[int]) -> tuple[str, dict, list[int]] | None:
    """('last' | 'diff', {k, ik}, block sizes) for removed Psi positions.

    Returns None for the type-D pattern with e_{r-1}-e_r removed and
    e_{r-1}+e_r kept, which no row covers directly.
    """
    rem = sorted(removed)
    if family == "A":
        pts = [0, *rem, rank + 1]
        return "diff", {"k": len(rem), "ik": rem[-1] if rem else 0}, [b - a for a, b in zip(pts, pts[1:])]
    if family == "D" and rank - 1 in rem and rank not in rem:
        return None
    kind = "last" if rem and rem[-1] == rank else "diff"
    pts = [0, *rem]
    return kind, {"k": len(rem), "ik": rem[-1] if rem else 0}, [b - a for a, b in zip(pts, pts[1:])]
