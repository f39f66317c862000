"""Satake diagrams, compatible triples and the HPIS recipe engine.

A diagram is a Dynkin graph with a black node set and arrow classes on
white nodes.  A triple holds the diagrams for the maximal split abelian
subspaces a (inside p ∩ q), a_q (inside q) and a_p (inside p); the
centraliser of a in h is read off component by component from the black
part of the first diagram.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .errors import Case4Detected, InvalidDiagram, ParseError, UnknownDiagramClassification
from .liealg import LieAlgebraExpr, lsum, parse

Edge = tuple[str, str, int]  # (u, v, multiplicity); for multiplicity 2, u is the long root


# ----------------------------------------------------------------- diagrams

@dataclass(frozen=True)
class SatakeDiagram:
    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]
    black: frozenset
    arrows: tuple[frozenset, ...] = ()

    def __post_init__(self):
        ns = set(self.nodes)
        if len(ns) != len(self.nodes):
            raise InvalidDiagram("duplicate node labels")
        for u, v, m in self.edges:
            if u not in ns or v not in ns or u == v or m not in (1, 2, 3):
                raise InvalidDiagram(f"bad edge {u}-{v} ({m})")
        if not self.black <= ns:
            raise InvalidDiagram("black set names unknown nodes")
        seen: set = set()
        for cls in self.arrows:
            if len(cls) < 2:
                raise InvalidDiagram("arrow class with fewer than two nodes")
            if cls & self.black:
                raise InvalidDiagram("arrow touches a black node")
            if cls & seen or not cls <= ns:
                raise InvalidDiagram("arrow classes overlap or name unknown nodes")
            seen |= cls

    @property
    def white(self) -> list[str]:
        return [v for v in self.nodes if v not in self.black]

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        for u, v, m in self.edges:
            g.add_edge(u, v, mult=m)
        return g

    def neighbours(self, v: str) -> set[str]:
        return {b if a == v else a for a, b, _ in self.edges if v in (a, b)}

    def arrow_class(self, v: str) -> frozenset:
        for cls in self.arrows:
            if v in cls:
                return cls
        return frozenset({v})

    def is_involutive(self) -> bool:
        return all(len(c) == 2 for c in self.arrows)

    def partner(self, v: str) -> str:
        """Arrow involution extended by the identity."""
        cls = self.arrow_class(v)
        if len(cls) > 2:
            raise InvalidDiagram(f"arrow class of {v} is not a pair")
        return next(iter(cls - {v})) if len(cls) == 2 else v

    def white_classes(self) -> int:
        """Number of white nodes modulo arrows (= dimension of the split part)."""
        return len({self.arrow_class(v) for v in self.white})

    def restrict(self, subset) -> "SatakeDiagram":
        sub = set(subset)
        arrows = tuple(c for c in self.arrows if c <= sub)
        return SatakeDiagram(tuple(v for v in self.nodes if v in sub),
                             tuple(e for e in self.edges if e[0] in sub and e[1] in sub),
                             frozenset(self.black & sub), arrows)


def _diagram_graph(d: SatakeDiagram) -> nx.DiGraph:
    g = nx.DiGraph()
    for v in d.nodes:
        g.add_node(v, black=v in d.black)
    def add(u, v, tag):
        if g.has_edge(u, v):
            g[u][v]["kinds"] = g[u][v]["kinds"] | {tag}
        else:
            g.add_edge(u, v, kinds=frozenset({tag}))
    for u, v, m in d.edges:
        if m == 1:
            add(u, v, "b1")
            add(v, u, "b1")
        else:
            add(u, v, f"b{m}L")
            add(v, u, f"b{m}S")
    for cls in d.arrows:
        for u, v in combinations(sorted(cls), 2):
            add(u, v, "arr")
            add(v, u, "arr")
    return g


def diagrams_isomorphic(a: SatakeDiagram, b: SatakeDiagram) -> bool:
    """Isomorphic as decorated diagrams (Dynkin automorphisms allowed)."""
    if len(a.nodes) != len(b.nodes):
        return False
    gm = GraphMatcher(_diagram_graph(a), _diagram_graph(b),
                      node_match=lambda x, y: x["black"] == y["black"],
                      edge_match=lambda x, y: x["kinds"] == y["kinds"])
    return gm.is_isomorphic()


def components(d: SatakeDiagram, subset=None) -> list[list[str]]:
    """Connected components of the Dynkin graph restricted to `subset`, in node order."""
    sub = set(d.nodes if subset is None else subset)
    g = d.graph().subgraph(sub)
    order = {v: i for i, v in enumerate(d.nodes)}
    comps = [sorted(c, key=order.__getitem__) for c in nx.connected_components(g)]
    return sorted(comps, key=lambda c: order[c[0]])


def dynkin_type(d: SatakeDiagram, nodes) -> tuple[str, int]:
    """(family, rank) of a connected classical Dynkin subgraph.  B2 is reported as C2
    when its long root is an end node of the double bond, which is always; callers
    treat B2 and C2 as one type."""
    sub = d.restrict(nodes)
    g = sub.graph()
    r = len(sub.nodes)
    if r == 0 or not nx.is_connected(g):
        raise InvalidDiagram("type requested for a non-connected node set")
    doubles = [(u, v) for u, v, m in sub.edges if m == 2]
    degs = [deg for _, deg in g.degree()]
    if any(m == 3 for _, _, m in sub.edges):
        raise InvalidDiagram("exceptional bond")
    if not doubles:
        if max(degs, default=0) <= 2:
            return ("A", r)
        if degs.count(3) == 1 and r >= 4:
            return ("D", r)
        raise InvalidDiagram("not a classical Dynkin graph")
    if len(doubles) > 1 or max(degs) > 2:
        raise InvalidDiagram("not a classical Dynkin graph")
    long_, short = doubles[0]
    if r == 2:
        return ("C", 2)
    if g.degree(short) == 1:
        return ("B", r)
    if g.degree(long_) == 1:
        return ("C", r)
    raise InvalidDiagram("double bond must sit at the end of the chain")


# ------------------------------------------------------------------- triples

@dataclass(frozen=True)
class Ranks:
    rank_gC: int
    rank_gh: int
    rank_gk: int
    s_rank: int

    def to_dict(self) -> dict:
        return {"rank_gC": self.rank_gC, "rank_gh": self.rank_gh,
                "rank_gk": self.rank_gk, "s_rank": self.s_rank}


@dataclass(frozen=True)
class SatakeTriple:
    d_a: SatakeDiagram
    d_q: SatakeDiagram
    d_p: SatakeDiagram
    name: str = ""

    def __post_init__(self):
        if not (self.d_a.nodes == self.d_q.nodes == self.d_p.nodes
                and set(self.d_a.edges) == set(self.d_q.edges) == set(self.d_p.edges)):
            raise InvalidDiagram("the three diagrams must share one Dynkin graph")
        if not (self.d_q.black <= self.d_a.black and self.d_p.black <= self.d_a.black):
            raise InvalidDiagram("black nodes of the a_q and a_p diagrams must be black for a")
        for d, label in ((self.d_q, "a_q"), (self.d_p, "a_p")):
            if not d.is_involutive():
                raise InvalidDiagram(f"{label} arrows must form an involution")
            validate_riemannian(d, label)

    @property
    def ranks(self) -> Ranks:
        return Ranks(len(self.d_a.nodes), self.d_q.white_classes(),
                     self.d_p.white_classes(), self.d_a.white_classes())


def validate_riemannian(d: SatakeDiagram, label: str = "") -> None:
    """Arrow-level consistency for a diagram of a Riemannian type.

    Some automorphism of the Dynkin graph preserving the black set must agree
    with the arrow involution on white nodes, and a white node not joined to
    any black node must have a partner with the same property.
    """
    g = _diagram_graph(SatakeDiagram(d.nodes, d.edges, d.black))
    gm = GraphMatcher(g, g, node_match=lambda x, y: x["black"] == y["black"],
                      edge_match=lambda x, y: x["kinds"] == y["kinds"])
    if not any(all(m[v] == d.partner(v) for v in d.white) for m in gm.isomorphisms_iter()):
        raise InvalidDiagram(f"{label}: arrows do not extend to a diagram automorphism")
    for v in d.white:
        free = not (d.neighbours(v) & d.black)
        if free and d.neighbours(d.partner(v)) & d.black:
            raise InvalidDiagram(f"{label}: partner of {v} is joined to a black node")


# ------------------------------------------------------ real-form catalogue

def _chain(prefix: str, r: int, family: str) -> tuple[tuple[str, ...], tuple[Edge, ...]]:
    nodes = tuple(f"{prefix}{i}" for i in range(1, r + 1))
    edges = [(nodes[i], nodes[i + 1], 1) for i in range(r - 1)]
    if family == "B" and r >= 2:
        edges[-1] = (nodes[r - 2], nodes[r - 1], 2)
    elif family == "C" and r >= 2:
        edges[-1] = (nodes[r - 1], nodes[r - 2], 2)
    elif family == "D" and r >= 3:
        edges[-1] = (nodes[r - 3], nodes[r - 1], 1)
    return nodes, tuple(edges)


@dataclass(frozen=True)
class RealForm:
    name: LieAlgebraExpr      # the noncompact real form
    maximal_compact: LieAlgebraExpr
    diagram: SatakeDiagram


def _sat(family: str, r: int, black, arrows=()) -> SatakeDiagram:
    nodes, edges = _chain("x", r, family)
    return SatakeDiagram(nodes, edges, frozenset(nodes[i - 1] for i in black),
                         tuple(frozenset({nodes[a - 1], nodes[b - 1]}) for a, b in arrows))


def real_forms(family: str, r: int) -> list[RealForm]:
    """Satake diagrams of all real forms of a classical simple type, compact one included."""
    out: list[RealForm] = []
    P = parse
    allb = range(1, r + 1)
    if family == "A":
        n = r + 1
        out.append(RealForm(P(compact_name("A", r)), P(compact_name("A", r)), _sat("A", r, allb)))
        out.append(RealForm(P(f"sl({n},R)"), P(f"so({n})"), _sat("A", r, ())))
        if n % 2 == 0 and n >= 4:
            out.append(RealForm(P(f"su*({n})"), P(f"sp({n // 2})"),
                                _sat("A", r, range(1, r + 1, 2))))
        for p in range(1, n // 2 + 1):
            q = n - p
            arrows = [(i, n - i) for i in range(1, p + 1) if i != n - i]
            black = range(p + 1, q) if p < q else ()
            out.append(RealForm(P(f"su({p},{q})"), P(f"su({p}) + su({q}) + so(2)"),
                                _sat("A", r, black, arrows)))
    elif family == "B":
        out.append(RealForm(P(f"so({2 * r + 1})"), P(f"so({2 * r + 1})"), _sat("B", r, allb)))
        for p in range(1, r + 1):
            q = 2 * r + 1 - p
            out.append(RealForm(P(f"so({p},{q})"), P(f"so({p}) + so({q})"),
                                _sat("B", r, range(p + 1, r + 1))))
    elif family == "C":
        out.append(RealForm(P(compact_name("C", r)), P(compact_name("C", r)), _sat("C", r, allb)))
        out.append(RealForm(P(f"sp({r},R)"), P(f"u({r})"), _sat("C", r, ())))
        for p in range(1, r // 2 + 1):
            q = r - p
            black = [i for i in range(1, 2 * p) if i % 2 == 1] + list(range(2 * p + 1, r + 1))
            out.append(RealForm(P(f"sp({p},{q})"), P(f"sp({p}) + sp({q})"), _sat("C", r, black)))
    elif family == "D":
        n = 2 * r
        out.append(RealForm(P(f"so({n})"), P(f"so({n})"), _sat("D", r, allb)))
        for p in range(1, r + 1):
            q = n - p
            if p <= r - 2:
                d = _sat("D", r, range(p + 1, r + 1))
            elif p == r - 1:
                d = _sat("D", r, (), [(r - 1, r)])
            else:
                d = _sat("D", r, ())
            out.append(RealForm(P(f"so({p},{q})"), P(f"so({p}) + so({q})"), d))
        if r % 2 == 0:
            d = _sat("D", r, range(1, r, 2))
        else:
            d = _sat("D", r, range(1, r - 1, 2), [(r - 1, r)])
        out.append(RealForm(P(f"so*({n})"), P(f"u({r})"), d))
    else:
        raise UnknownDiagramClassification(f"no real-form table for family {family}")
    return out


def compact_name(family: str, r: int) -> str:
    # A1 = C1 is written sp(1), matching the catalog's compact factors
    if family == "A":
        return "sp(1)" if r == 1 else f"su({r + 1})"
    return {"B": f"so({2 * r + 1})", "C": f"sp({r})", "D": f"so({2 * r})"}[family]


def complex_name(family: str, r: int) -> str:
    return {"A": f"sl({r + 1},C)", "B": f"so({2 * r + 1},C)", "C": f"sp({r},C)",
            "D": f"so({2 * r},C)"}[family]


def classify_real_form(d: SatakeDiagram) -> RealForm:
    """Identify a connected Satake diagram against the classical real-form tables."""
    fam, r = dynkin_type(d, d.nodes)
    candidates = real_forms(fam, r)
    if fam == "C" and r == 2:
        candidates = candidates + real_forms("B", 2)
    if fam == "D" and r == 3:
        candidates = candidates + real_forms("A", 3)
    for rf in candidates:
        if diagrams_isomorphic(rf.diagram, d):
            return rf
    raise UnknownDiagramClassification(f"no classical real form has this {fam}{r} Satake diagram")


# ------------------------------------------------------------------- recipe

CASES = ("Case1", "Case2", "Case3", "Case5", "Case6")


@dataclass(frozen=True)
class ComponentCase:
    component: tuple[str, ...]
    case_tag: str


def components_phi0(triple: SatakeTriple) -> list[tuple[str, ...]]:
    return [tuple(c) for c in components(triple.d_a, triple.d_a.black)]


def _invariant(d: SatakeDiagram, nodes: set) -> bool:
    return all(d.partner(v) in nodes for v in nodes)


def classify_component(triple: SatakeTriple, component) -> ComponentCase:
    comp = set(component)
    off_p = comp - triple.d_p.black
    off_q = comp - triple.d_q.black
    tag = None
    if not off_p and not off_q:
        tag = "Case1"
    elif off_p and not _invariant(triple.d_p, off_p):
        tag = "Case5"
    elif off_q and not _invariant(triple.d_q, off_q):
        tag = "Case6"
    elif off_p and off_q:
        raise Case4Detected(f"component {sorted(comp)} is split in both a_q and a_p diagrams")
    elif off_p:
        tag = "Case2"
    else:
        tag = "Case3"
    return ComponentCase(tuple(component), tag)


@dataclass
class ComponentResult:
    component: tuple[str, ...]
    case_tag: str
    dynkin: str
    factor: LieAlgebraExpr
    h_part: LieAlgebraExpr
    toral_kh: int
    toral_ph: int
    partner: tuple[str, ...] | None = None
    merged_into: tuple[str, ...] | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {"component": list(self.component), "case": self.case_tag, "type": self.dynkin,
                "factor": str(self.factor), "h_part": str(self.h_part),
                "toral": {"k_h": self.toral_kh, "p_h": self.toral_ph},
                "partner": list(self.partner) if self.partner else None,
                "merged_into": list(self.merged_into) if self.merged_into else None,
                "note": self.note}


def _paired_half(triple: SatakeTriple, d: SatakeDiagram, comp: tuple[str, ...]) -> tuple[str, ...]:
    image = {d.partner(v) for v in comp}
    for other in components_phi0(triple):
        if set(other) == image:
            if set(other) == set(comp):
                break
            if dynkin_type(triple.d_a, other) != dynkin_type(triple.d_a, comp):
                raise InvalidDiagram("paired components have different types")
            return other
    raise InvalidDiagram(f"image of {list(comp)} under the arrows is not a separate component")


def component_factor(triple: SatakeTriple, cc: ComponentCase) -> tuple[LieAlgebraExpr, LieAlgebraExpr]:
    res = _component_result(triple, cc)
    return res.factor, res.h_part


def _component_result(triple: SatakeTriple, cc: ComponentCase) -> ComponentResult:
    comp = cc.component
    fam, r = dynkin_type(triple.d_a, comp)
    label = f"{fam}{r}"
    if cc.case_tag == "Case1":
        f = parse(compact_name(fam, r))
        return ComponentResult(comp, "Case1", label, f, f, r, 0)
    if cc.case_tag == "Case2":
        rf = classify_real_form(triple.d_p.restrict(comp))
        rr = triple.d_p.restrict(comp).white_classes()
        return ComponentResult(comp, "Case2", label, rf.name, rf.name, r - rr, rr)
    if cc.case_tag == "Case3":
        d = triple.d_q.restrict(comp)
        rf = classify_real_form(d)
        rr = d.white_classes()
        return ComponentResult(comp, "Case3", label, parse(compact_name(fam, r)),
                               rf.maximal_compact, r - rr, 0,
                               note=f"compact dual of {rf.name}")
    if cc.case_tag == "Case5":
        if set(comp) & triple.d_p.black:
            raise InvalidDiagram("a Case 5 component must be white for a_p")
        other = _paired_half(triple, triple.d_p, comp)
        f = parse(complex_name(fam, r))
        return ComponentResult(comp, "Case5", label, f, f, r, r, partner=other)
    if cc.case_tag == "Case6":
        other = _paired_half(triple, triple.d_q, comp)
        m = parse(compact_name(fam, r))
        return ComponentResult(comp, "Case6", label, m + m, m, r, 0, partner=other)
    raise Case4Detected(cc.case_tag)


@dataclass
class RecipeTrace:
    name: str
    ranks: Ranks
    results: list[ComponentResult]
    kh_total: int
    ph_total: int
    kh_center: int
    ph_center: int
    z_h: LieAlgebraExpr

    def to_dict(self) -> dict:
        return {"pair": self.name, "ranks": self.ranks.to_dict(),
                "components": [r.to_dict() for r in self.results],
                "step4": {"k_h_total": self.kh_total, "p_h_total": self.ph_total,
                          "k_h_center": self.kh_center, "p_h_center": self.ph_center},
                "z_h": str(self.z_h)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, ensure_ascii=False)


def recipe_trace(triple: SatakeTriple) -> RecipeTrace:
    results: list[ComponentResult] = []
    done: dict[tuple, tuple] = {}
    for comp in components_phi0(triple):
        if comp in done:
            cc = classify_component(triple, comp)
            fam, r = dynkin_type(triple.d_a, comp)
            results.append(ComponentResult(comp, cc.case_tag, f"{fam}{r}", LieAlgebraExpr.zero(),
                                           LieAlgebraExpr.zero(), 0, 0, merged_into=done[comp]))
            continue
        res = _component_result(triple, classify_component(triple, comp))
        if res.partner is not None:
            done[res.partner] = comp
        results.append(res)
    rk = triple.ranks
    kh = rk.rank_gC - rk.rank_gh - rk.rank_gk + rk.s_rank
    ph = rk.rank_gk - rk.s_rank
    kh_c = kh - sum(r.toral_kh for r in results)
    ph_c = ph - sum(r.toral_ph for r in results)
    if min(kh, ph, kh_c, ph_c) < 0:
        raise InvalidDiagram(f"negative toral dimension (k_h={kh_c}, p_h={ph_c}); check the diagrams")
    z = lsum([LieAlgebraExpr.of("R", exp=ph_c), LieAlgebraExpr.of("so2", exp=kh_c)]
             + [r.h_part for r in results])
    return RecipeTrace(triple.name, rk, results, kh, ph, kh_c, ph_c, z)


def recipe_run(triple: SatakeTriple) -> LieAlgebraExpr:
    return recipe_trace(triple).z_h


# ------------------------------------------------------------- text format

def serialize_diagram(d: SatakeDiagram, label: str) -> str:
    lines = [f"diagram {label}", "nodes " + " ".join(d.nodes)]
    edge_txt = [f"{u}-{v}" if m == 1 else f"{u}{'=' * (m - 1)}>{v}" for u, v, m in d.edges]
    lines.append("edges " + " ".join(edge_txt))
    order = {v: i for i, v in enumerate(d.nodes)}
    lines.append("black " + " ".join(sorted(d.black, key=order.__getitem__)))
    cls = sorted((sorted(c, key=order.__getitem__) for c in d.arrows), key=lambda c: order[c[0]])
    lines.append("arrows " + " ".join(":".join(c) for c in cls))
    lines.append("end")
    return "\n".join(line.rstrip() for line in lines)


def serialize_triple(t: SatakeTriple) -> str:
    head = [f"triple {t.name}"] if t.name else ["triple"]
    body = [serialize_diagram(d, lab) for d, lab in ((t.d_a, "a"), (t.d_q, "a_q"), (t.d_p, "a_p"))]
    return "\n".join(head + body) + "\n"


def _parse_edge(tok: str) -> Edge:
    if ">" in tok:
        left, v = tok.split(">")
        m = left.count("=") + 1
        return (left.rstrip("="), v, m)
    if "-" in tok:
        u, v = tok.split("-", 1)
        return (u, v, 1)
    raise ParseError(f"bad edge token {tok!r}")


def parse_triple(text: str) -> SatakeTriple:
    name = ""
    diagrams: dict[str, SatakeDiagram] = {}
    cur: dict | None = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        toks = rest.split()
        if key == "triple":
            name = rest.strip()
        elif key == "diagram":
            cur = {"label": rest.strip(), "nodes": (), "edges": (), "black": (), "arrows": ()}
        elif cur is None:
            raise ParseError(f"line outside a diagram block: {raw!r}")
        elif key == "nodes":
            cur["nodes"] = tuple(toks)
        elif key == "edges":
            cur["edges"] = tuple(_parse_edge(t) for t in toks)
        elif key == "black":
            cur["black"] = tuple(toks)
        elif key == "arrows":
            cur["arrows"] = tuple(frozenset(t.split(":")) for t in toks)
        elif key == "end":
            diagrams[cur["label"]] = SatakeDiagram(cur["nodes"], cur["edges"],
                                                   frozenset(cur["black"]), cur["arrows"])
            cur = None
        else:
            raise ParseError(f"unknown keyword {key!r}")
    if cur is not None:
        raise ParseError("unterminated diagram block")
    try:
        return SatakeTriple(diagrams["a"], diagrams["a_q"], diagrams["a_p"], name)
    except KeyError as exc:
        raise ParseError(f"missing diagram {exc}") from None


# ----------------------------------------------------------------- builders

def _a_chain(prefix: str, r: int) -> tuple[tuple[str, ...], tuple[Edge, ...]]:
    return _chain(prefix, r, "A")


def su2p2np_sppq_triple(n: int, p: int) -> SatakeTriple:
    """Triple for (su(2p, 2(n-p)), sp(p, n-p)), 1 <= p, 2p <= n."""
    if not (p >= 1 and 2 * p <= n):
        raise InvalidDiagram("need 1 <= p and 2p <= n")
    r = 2 * n - 1
    nodes, edges = _chain("", r, "A")
    N = lambda i: str(i)  # noqa: E731
    chain = set(range(2 * p + 1, 2 * n - 2 * p))
    black_a = {i for i in range(1, r + 1) if i % 2 == 1 and (i <= 2 * p - 1 or i >= 2 * n - 2 * p + 1)}
    black_a |= chain
    arrows_a = {frozenset({N(2 * i), N(2 * n - 2 * i)}) for i in range(1, p + 1) if 2 * i != n}
    d_a = SatakeDiagram(nodes, edges, frozenset(map(N, black_a)), tuple(sorted(arrows_a, key=_ckey)))
    d_q = SatakeDiagram(nodes, edges, frozenset(N(i) for i in range(1, r + 1, 2)), ())
    arrows_p = {frozenset({N(i), N(2 * n - i)}) for i in range(1, 2 * p + 1) if i != n}
    d_p = SatakeDiagram(nodes, edges, frozenset(map(N, chain)), tuple(sorted(arrows_p, key=_ckey)))
    return SatakeTriple(d_a, d_q, d_p, f"su2p2np-sppq n={n} p={p}")


def slC_slR_triple(n: int) -> SatakeTriple:
    """Triple for (sl(n,C), sl(n,R)), n >= 2: two A_{n-1} chains, all white."""
    if n < 2:
        raise InvalidDiagram("need n >= 2")
    a_nodes, a_edges = _chain("a", n - 1, "A")
    b_nodes, b_edges = _chain("b", n - 1, "A")
    nodes, edges = a_nodes + b_nodes, a_edges + b_edges
    a = lambda i: f"a{i}"  # noqa: E731
    b = lambda i: f"b{i}"  # noqa: E731
    classes = {frozenset({a(i), a(n - i), b(i), b(n - i)}) for i in range(1, n)}
    d_a = SatakeDiagram(nodes, edges, frozenset(), tuple(sorted(classes, key=_ckey)))
    pairs = {frozenset({a(i), b(n - i)}) for i in range(1, n)}
    d_qp = SatakeDiagram(nodes, edges, frozenset(), tuple(sorted(pairs, key=_ckey)))
    return SatakeTriple(d_a, d_qp, d_qp, f"slC-slR n={n}")


def _ckey(cls: frozenset) -> tuple:
    import re
    return min((re.sub(r"\d+", "", v), int(re.sub(r"\D", "", v) or 0)) for v in cls)


TRIPLE_BUILDERS = {
    "su2p2np-sppq": lambda n, p: su2p2np_sppq_triple(n, p),
    "slC-slR": lambda n: slC_slR_triple(n),
}


def triple_for(family_id: str, **params: int) -> SatakeTriple:
    if family_id not in TRIPLE_BUILDERS:
        raise UnknownDiagramClassification(f"no encoded Satake triple for {family_id}")
    return TRIPLE_BUILDERS[family_id](**params)


def golden_dir() -> Path:
    from .golden import data_dir
    return data_dir()


def load_golden_triple(filename: str) -> SatakeTriple:
    return parse_triple((golden_dir() / "satake" / filename).read_text(encoding="utf-8"))
