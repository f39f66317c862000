"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal or data error.  Errors are printed to stderr as JSON objects.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import golden
from .cosets import coset_reps, embed_subsystem, format_types, parse_types, verify_complete_system
from .errors import ConstraintViolated, SrepError, UnknownPair, UnsupportedEmbedding
from .liealg import render
from .orbits import elliptic_orbit_types, local_orbit_types
from .pairs import ALIASES, SymmetricPairSpec, catalog_json, lookup_pair, parse_selector
from .rootsys import DEFAULT_CAP, build_root_system, format_root, standard_simple_system
from .satake import load_golden_triple, parse_triple, recipe_trace, triple_for

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
FORMATS = ("text", "json", "markdown", "latex")
_TYPES_SEL = re.compile(r"^(?P<amb>(?:BC|A|B|C|D)_?\d+)-(?P<sub>[A-Za-z0-9_x×]+)(?::(?P<variant>\w+))?$")


class UsageError(Exception):
    pass


def _params(args) -> dict[str, int]:
    return {k: getattr(args, k) for k in ("n", "p", "m", "i", "j") if getattr(args, k) is not None}


def _spec(args) -> SymmetricPairSpec:
    try:
        return parse_selector(args.selector, **_params(args))
    except (UnknownPair, ConstraintViolated) as exc:
        raise UsageError(str(exc)) from exc


def _cap(args) -> int:
    if args.cap > DEFAULT_CAP:
        print(f"warning: group cap raised to {args.cap}; brute-force checks may be slow", file=sys.stderr)
    return args.cap


def _md_table(header: list[str], rows: list[list]) -> str:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return "\n".join(out) + "\n"


def _tex_escape(s: str) -> str:
    return s.replace("_", r"\_").replace("^", r"\^{}").replace("{", r"\{").replace("}", r"\}")


def _tex_table(header: list[str], rows: list[list]) -> str:
    out = [r"\begin{tabular}{" + "l" * len(header) + "}", r"\hline",
           " & ".join(_tex_escape(h) for h in header) + r" \\", r"\hline"]
    out += [" & ".join(_tex_escape(str(c)) for c in r) + r" \\" for r in rows]
    out += [r"\hline", r"\end{tabular}"]
    return "\n".join(out) + "\n"


def _emit_table(fmt: str, header: list[str], rows: list[list], payload) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=1, ensure_ascii=False) + "\n"
    if fmt == "latex":
        return _tex_table(header, rows)
    return _md_table(header, rows)


# ----------------------------------------------------------------- verbs

def cmd_pairs(args) -> tuple[int, str]:
    if args.selector:
        spec = _spec(args)
        d = spec.to_dict()
        d["selector"] = spec.slug
        rows = [[k, v] for k, v in d.items()]
        return EXIT_OK, _emit_table(args.format, ["field", "value"], rows, d)
    cat = catalog_json()
    header = ["family_id", "g", "h", "constraints", "remarks", "delta", "delta_a", "index", "hpis"]
    rows = [[c[k] for k in header] for c in cat]
    text = _emit_table(args.format, header, rows, {"pairs": cat, "aliases": {
        a: f"{f}" + "".join(f":{k}={v}" for k, v in p.items()) for a, (f, p) in ALIASES.items()}})
    if args.format in ("text", "markdown"):
        text += "\nSelectors: FAMILY_ID:n=..:p=.. or FAMILY_ID with --n/--p/--m/--i/--j; aliases: " \
                + ", ".join(ALIASES) + "\n"
    return EXIT_OK, text


def _coset_target(args):
    m = _TYPES_SEL.match(args.selector)
    if m:
        (fam, r), = parse_types(m.group("amb"))
        amb = build_root_system(fam, r)
        return amb, embed_subsystem(amb, m.group("sub"), m.group("variant") or ""), args.selector
    spec = _spec(args)
    return spec.ambient(), spec.subsystem(), spec.slug


def cmd_cosets(args) -> tuple[int, str]:
    try:
        amb, sub, name = _coset_target(args)
    except UnsupportedEmbedding as exc:
        raise UsageError(str(exc)) from exc
    cs = coset_reps(amb, sub)
    psi = standard_simple_system(amb)
    rows = [[lab, repr(w), ", ".join(format_root(w(a)) for a in psi)] for w, lab in zip(cs.reps, cs.labels)]
    payload = {"ambient": amb.label, "subsystem": sub.label, "count": len(cs.reps),
               "reps": [{"label": r[0], "element": r[1], "w_psi": r[2].split(", ")} for r in rows]}
    status = EXIT_OK
    if args.oracle:
        rep = verify_complete_system(cs, _cap(args))
        payload["oracle"] = rep.to_dict()
        status = EXIT_OK if rep.ok else EXIT_FAIL
    text = _emit_table(args.format, ["w", "signed permutation", "w.Psi"], rows, payload)
    if args.format != "json":
        text = f"{name}: {len(cs.reps)} representatives of W({amb.label})/W({sub.label})\n\n" + text
        if args.oracle:
            text += f"\noracle: {'PASS' if payload['oracle']['ok'] else 'FAIL'} " \
                    f"(|W|={payload['oracle']['group_order']}, |W^a|={payload['oracle']['subgroup_order']})\n"
    return status, text


def cmd_index(args) -> tuple[int, str]:
    from .cosets import brute_force_index
    try:
        amb, sub, name = _coset_target(args)
    except UnsupportedEmbedding as exc:
        raise UsageError(str(exc)) from exc
    from .cosets import index_formula
    idx = index_formula(amb, sub)
    payload = {"selector": name, "delta": amb.label, "delta_a": sub.label, "index": idx}
    status = EXIT_OK
    if args.oracle:
        brute = brute_force_index(amb, sub, _cap(args))
        payload["oracle_index"] = brute
        status = EXIT_OK if brute == idx else EXIT_FAIL
    if args.format == "json":
        return status, json.dumps(payload) + "\n"
    if args.format == "text":
        return status, f"{idx}\n"
    rows = [[k, v] for k, v in payload.items()]
    return status, _emit_table(args.format, ["field", "value"], rows, payload)


def cmd_hpis(args) -> tuple[int, str]:
    spec = _spec(args)
    expr = spec.hpis_expr
    payload = {"pair": spec.name, "selector": spec.slug, "hpis": str(expr)}
    status = EXIT_OK
    if args.recipe:
        t = recipe_trace(triple_for(spec.family_id, **spec.param_dict))
        payload["recipe"] = t.to_dict()
        payload["recipe_matches"] = t.z_h == expr
        status = EXIT_OK if t.z_h == expr else EXIT_FAIL
    if args.format == "json":
        return status, json.dumps(payload, indent=1) + "\n"
    if args.format == "latex":
        return status, f"$ {render(expr, 'latex')} $\n"
    text = f"{spec.name}: {expr}\n"
    if args.recipe:
        text += f"recipe: {payload['recipe']['z_h']} ({'match' if payload['recipe_matches'] else 'MISMATCH'})\n"
    return status, text


def cmd_orbits(args) -> tuple[int, str]:
    spec = _spec(args)
    fn = elliptic_orbit_types if args.elliptic else local_orbit_types
    table = fn(spec, annotated=not args.merge_iso)
    if args.format == "json":
        return EXIT_OK, table.to_json() + "\n"
    if args.format == "latex":
        return EXIT_OK, table.to_latex()
    return EXIT_OK, table.to_markdown()


def cmd_satake(args) -> tuple[int, str]:
    if args.file:
        path = Path(args.file)
        triple = parse_triple(path.read_text(encoding="utf-8")) if path.exists() else load_golden_triple(args.file)
    else:
        spec = _spec(args)
        triple = triple_for(spec.family_id, **spec.param_dict)
    t = recipe_trace(triple)
    if args.format == "json":
        return EXIT_OK, t.to_json() + "\n"
    d = t.to_dict()
    rows = [[" ".join(c["component"]), c["type"], c["case"], c["factor"], c["h_part"],
             f"{c['toral']['k_h']},{c['toral']['p_h']}"] for c in d["components"]]
    text = _emit_table(args.format, ["component", "type", "case", "factor", "h part", "toral k,p"], rows, d)
    if args.format == "latex":
        return EXIT_OK, text
    st = d["step4"]
    head = (f"{triple.name}: z_h = {d['z_h']}\nranks: {d['ranks']}\n"
            f"center: R^{st['p_h_center']} + so(2)^{st['k_h_center']}\n\n")
    return EXIT_OK, head + text


def cmd_verify(args) -> tuple[int, str]:
    from .verify import golden_items
    items = golden_items(max_rank=args.max_rank, cap=_cap(args))
    ok = all(i.ok for i in items)
    if args.format == "json":
        text = json.dumps({"ok": ok, "items": [i.to_dict() for i in items]}, indent=1) + "\n"
    else:
        text = "".join(f"{'PASS' if i.ok else 'FAIL'} {i.name}  {i.detail}\n" for i in items)
        text += f"{sum(i.ok for i in items)}/{len(items)} items pass\n"
    return (EXIT_OK if ok else EXIT_FAIL), text


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="group-size cap for brute-force checks")
    common.add_argument("--oracle", action="store_true", help="also run brute-force checks")
    for k in ("n", "p", "m", "i", "j"):
        common.add_argument(f"--{k}", type=int)
    ap = argparse.ArgumentParser(prog="srep", description="Orbit types of s-representations of classical symmetric pairs.")
    ap.add_argument("--golden-dir", help=f"golden data directory (also ${golden.ENV_DIR})")
    sub = ap.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("pairs", parents=[common], help="list the catalog or show one pair")
    p.add_argument("selector", nargs="?")
    p = sub.add_parser("cosets", parents=[common], help="coset representatives, e.g. A4-A1xA2")
    p.add_argument("selector")
    p = sub.add_parser("index", parents=[common], help="index of W(Delta^a) in W(Delta)")
    p.add_argument("selector")
    p = sub.add_parser("hpis", parents=[common], help="hyperbolic principal isotropy subalgebra")
    p.add_argument("selector")
    p.add_argument("--recipe", action="store_true", help="run the Satake recipe on the encoded triple")
    p = sub.add_parser("orbits", parents=[common], help="local orbit types")
    p.add_argument("selector")
    p.add_argument("--elliptic", action="store_true")
    p.add_argument("--merge-iso", action="store_true", help="merge so(n,0) with so(0,n)")
    p = sub.add_parser("satake", parents=[common], help="recipe trace for a Satake triple")
    p.add_argument("selector", nargs="?")
    p.add_argument("--file", help="triple file (path or golden file name)")
    p = sub.add_parser("verify", parents=[common], help="run the golden suite")
    p.add_argument("--max-rank", type=int, default=6)
    return ap


COMMANDS = {"pairs": cmd_pairs, "cosets": cmd_cosets, "index": cmd_index, "hpis": cmd_hpis,
            "orbits": cmd_orbits, "satake": cmd_satake, "verify": cmd_verify}


def _error(code: str, message: str) -> None:
    print(json.dumps({"error": code, "message": message}), file=sys.stderr)


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse and execute; returns (exit status, rendered output)."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_USAGE), ""
    if args.golden_dir:
        import os
        os.environ[golden.ENV_DIR] = args.golden_dir
    if args.verb == "satake" and not (args.selector or args.file):
        _error("usage", "satake needs a selector or --file")
        return EXIT_USAGE, ""
    try:
        return COMMANDS[args.verb](args)
    except UsageError as exc:
        _error("usage", str(exc))
        return EXIT_USAGE, ""
    except SrepError as exc:
        d = exc.to_dict()
        _error(d["error"], d["message"])
        return EXIT_INTERNAL, ""
    except (OSError, ValueError, KeyError) as exc:
        _error("internal", f"{type(exc).__name__}: {exc}")
        return EXIT_INTERNAL, ""


def main(argv: list[str] | None = None) -> int:
    status, text = run(argv)
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
