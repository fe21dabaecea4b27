"""Necessary conditions for a vertex-minimal counterexample, as checkable predicates.

A graph that *fails* any check cannot be a minimal counterexample.  A graph
that passes every check is only a candidate: minimality over all smaller
graphs cannot be checked locally, so a "pass" on a large graph proves nothing.
Exhaustion over small orders (see :mod:`vertexcuts.census`) supplies the
minimality part.

Checks run cheap-first and stop at the first failure unless ``run_all`` is set.
Every failure carries a witness that :func:`witness_confirms` can re-verify.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import bipstats
from .cuts import (
    BIPARTITE,
    CutClass,
    QualityParams,
    find_cut_set,
    in_class,
    is_cut,
    quality,
)
from .graph import (
    FourKind,
    Graph,
    VertexSet,
    classify_four,
    edges_within,
    induced,
    is_k_connected,
    members,
    popcount,
    vset,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    basis: str
    passed: bool
    witness: VertexSet | None = None
    detail: str = ""

    def to_record(self) -> dict:
        return {
            "check": self.name,
            "basis": self.basis,
            "verdict": "pass" if self.passed else "fail",
            "witness": None if self.witness is None else members(self.witness),
            "detail": self.detail,
        }

    def __str__(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        out = f"{self.name:<28} {verdict:<5} {self.basis}"
        if self.witness is not None:
            out += f"  witness={members(self.witness)}"
        if self.detail:
            out += f"  ({self.detail})"
        return out


@dataclass
class FilterReport:
    checks: list[CheckResult] = field(default_factory=list)
    diagnostics: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_text(self) -> str:
        lines = [str(c) for c in self.checks]
        lines += [f"[diagnostic] {c}" for c in self.diagnostics]
        lines.append(f"overall: {'pass (candidate)' if self.passed else 'fail'}")
        return "\n".join(lines)

    def to_records(self) -> list[dict]:
        out = [c.to_record() for c in self.checks]
        out += [{**c.to_record(), "diagnostic": True} for c in self.diagnostics]
        out.append({"overall": "pass" if self.passed else "fail"})
        return out

    def to_json_lines(self) -> str:
        return "\n".join(json.dumps(r, sort_keys=True) for r in self.to_records())


# single checks: each returns (witness, detail) on failure, None on pass -------------

def _order(g, p):
    if g.n < 7:
        return g.full, f"n = {g.n} < 7"


def _quality(g, p):
    q = quality(g, p)
    if q <= 0:
        return g.full, f"q = {q} <= 0"


def _bad_low_degree(g: Graph, v: int) -> str | None:
    d = g.degree(v)
    if d < 4:
        return f"deg({v}) = {d} < 4"
    if d == 4:
        kind = classify_four(induced(g, g.adj[v]))
        if kind not in (FourKind.T0, FourKind.T1):
            return f"N({v}) induces {kind.value}"
    return None


def _min_degree(g, p):
    for v in range(g.n):
        why = _bad_low_degree(g, v)
        if why:
            return 1 << v, why


def _small_cut(g: Graph, max_size: int, accept: Callable[[VertexSet], bool]):
    for size in range(max_size + 1):
        for combo in combinations(range(g.n), size):
            s = vset(combo)
            if is_cut(g, s) and not accept(s):
                return s
    return None


def _kind(g: Graph, s: VertexSet) -> FourKind:
    return classify_four(induced(g, s))


def _four_cut_of_kind(g: Graph, kind: FourKind):
    for combo in combinations(range(g.n), 4):
        s = vset(combo)
        if _kind(g, s) is kind and is_cut(g, s):
            return s
    return None


def _four_connected(g, p):
    if not is_k_connected(g, 4):
        s = _small_cut(g, 3, lambda s: False)
        if s is None:
            return g.full, f"only {g.n} vertices"
        return s, f"cut of size {popcount(s)}"
    s = _four_cut_of_kind(g, FourKind.K4)
    if s is not None:
        return s, "K4 cut"


def _no_diamond_cut(g, p):
    s = _four_cut_of_kind(g, FourKind.DIAMOND)
    if s is not None:
        return s, "diamond cut"


def _no_c4_cut(g, p):
    s = _four_cut_of_kind(g, FourKind.C4)
    if s is not None:
        return s, "C4 cut"


def _t_cut(g: Graph, s: VertexSet) -> bool:
    return popcount(s) == 4 and _kind(g, s) in (FourKind.T0, FourKind.T1)


def _small_cuts_are_t(g, p):
    s = _small_cut(g, 4, lambda s: _t_cut(g, s))
    if s is not None:
        return s, f"cut of size {popcount(s)} is not T0/T1"


def _complete_nbhd(g: Graph, v: int) -> bool:
    d = g.degree(v)
    return edges_within(g.adj, g.adj[v]) == d * (d - 1) // 2


def _no_complete_nbhd(g, p):
    for v in range(g.n):
        if _complete_nbhd(g, v):
            return 1 << v, f"N({v}) is complete"


def _no_cut_of(cls: CutClass):
    def check(g, p):
        s = find_cut_set(g, cls)
        if s is not None:
            return s, f"{cls.value} cut"
    return check


def _deg4(g: Graph) -> VertexSet:
    return vset(v for v in range(g.n) if g.degree(v) == 4)


def _deg4_in_k4(g, p):
    u_set = _deg4(g)
    for u in members(u_set):
        for v in members(g.adj[u] & u_set):
            if v < u:
                continue
            common = members(g.adj[u] & g.adj[v])
            for a, b in combinations(common, 2):
                if g.has_edge(a, b):
                    return vset((u, v, a, b)), f"degree-4 vertices {u}, {v} in a K4"


def _deg4_matching(g, p):
    u_set = _deg4(g)
    for u in members(u_set):
        inner = members(g.adj[u] & u_set)
        if len(inner) > 1:
            return vset((u, inner[0], inner[1])), f"vertex {u} has {len(inner)} degree-4 neighbours"


def _pair_three_common(g, p):
    for a, b in combinations(range(g.n), 2):
        if not g.has_edge(a, b) and popcount(g.adj[a] & g.adj[b]) >= 3:
            return vset((a, b)), f"{a}, {b} share {popcount(g.adj[a] & g.adj[b])} neighbours"


def _deg4_triangle(g, p):
    u_set = _deg4(g)
    for t in combinations(members(u_set), 3):
        if edges_within(g.adj, vset(t)) == 3:
            return vset(t), "triangle of degree-4 vertices"


def _bip_source(g: Graph):
    a = bipstats.best_independent_source(g)
    return bipstats.stats(g, a)


def _red_deg5(g, p):
    s = _bip_source(g)
    for v in members(s.a):
        if g.degree(v) == 5 and s.red_at(v) < 2:
            return 1 << v, f"degree-5 vertex {v} of A has {s.red_at(v)} red edges"


# registry ------------------------------------------------------------------------

COMMON = (
    ("order", "n >= 7", _order),
    ("quality", "q(G) > 0", _quality),
    ("min-degree", "min degree >= 4; degree-4 neighbourhoods are T0/T1", _min_degree),
    ("four-connected", "4-connected, no K4 cut", _four_connected),
    ("no-diamond-cut", "no cut inducing K4 - e", _no_diamond_cut),
    ("no-c4-cut", "no cut inducing C4", _no_c4_cut),
    ("small-cuts-t0-t1", "every cut of size <= 4 induces T0 or T1", _small_cuts_are_t),
    ("no-complete-neighbourhood", "no vertex neighbourhood is a clique", _no_complete_nbhd),
)

FOREST_EXTRA = (
    ("no-forest-cut", "no forest cut", _no_cut_of(CutClass.FOREST)),
    ("deg4-not-in-common-k4", "no two degree-4 vertices in one K4", _deg4_in_k4),
    ("deg4-matching", "degree-4 vertices induce isolated vertices and edges", _deg4_matching),
)

FOREST_BASIC = FOREST_EXTRA[:1]

BIPARTITE_EXTRA = (
    ("no-bipartite-cut", "no bipartite cut", _no_cut_of(CutClass.BIPARTITE)),
    ("no-pair-three-common", "no non-adjacent pair with >= 3 common neighbours", _pair_three_common),
    ("no-deg4-triangle", "no triangle of degree-4 vertices", _deg4_triangle),
    ("deg4-max-degree-1", "degree-4 vertices induce max degree <= 1", _deg4_matching),
)

RED_CHECK = ("red-edges-deg5", "degree-5 vertices of A carry >= 2 red edges", _red_deg5)

_ALL = {name: fn for name, _, fn in COMMON + FOREST_EXTRA + BIPARTITE_EXTRA + (RED_CHECK,)}


def _require(p: QualityParams, forest: bool = False):
    if not p.admissible:
        raise ValueError(f"parameters {p} must satisfy 4*alpha - beta = 6 and 2 < alpha <= 3")
    if forest and p.alpha > Fraction(5, 2):
        raise ValueError(f"forest filter needs alpha <= 5/2, got {p.alpha}")


def _run(g: Graph, p: QualityParams, registry, run_all: bool, report: FilterReport) -> bool:
    for name, basis, fn in registry:
        hit = fn(g, p)
        if hit is None:
            report.checks.append(CheckResult(name, basis, True))
        else:
            witness, detail = hit
            report.checks.append(CheckResult(name, basis, False, witness, detail))
            if not run_all:
                return False
    return True


def check_common(g: Graph, p: QualityParams, run_all: bool = False) -> FilterReport:
    _require(p)
    report = FilterReport()
    _run(g, p, COMMON, run_all, report)
    return report


def check_forest_candidate(g: Graph, p: QualityParams, run_all: bool = False) -> FilterReport:
    _require(p, forest=True)
    report = FilterReport()
    if _run(g, p, COMMON, run_all, report) or run_all:
        _run(g, p, FOREST_EXTRA, run_all, report)
    return report


def check_forest_basic(g: Graph, p: QualityParams, run_all: bool = False) -> FilterReport:
    """Common checks plus "no forest cut"; usable for any admissible alpha."""
    _require(p)
    report = FilterReport()
    if _run(g, p, COMMON, run_all, report) or run_all:
        _run(g, p, FOREST_BASIC, run_all, report)
    return report


def check_bipartite_candidate(g: Graph, p: QualityParams, run_all: bool = False) -> FilterReport:
    _require(p)
    report = FilterReport()
    ok = _run(g, p, COMMON, run_all, report) or run_all
    ok = ok and (_run(g, p, BIPARTITE_EXTRA, run_all, report) or run_all)
    if ok and p == BIPARTITE and g.n <= bipstats.MAX_SCAN:
        _run(g, p, (RED_CHECK,), run_all, report)
        s = _bip_source(g)
        for ineq in bipstats.check_inequalities(g, s):
            report.diagnostics.append(CheckResult(ineq.name, ineq.statement, ineq.holds,
                                                  detail=f"{ineq.lhs} vs {ineq.rhs}"))
    return report


def check_candidate(g: Graph, cls: CutClass, p: QualityParams, run_all: bool = False) -> FilterReport:
    if cls is CutClass.FOREST:
        if p.alpha <= Fraction(5, 2):
            return check_forest_candidate(g, p, run_all)
        return check_forest_basic(g, p, run_all)
    if cls is CutClass.BIPARTITE:
        return check_bipartite_candidate(g, p, run_all)
    raise ValueError("no candidate filter for independent cuts")


# witness re-verification -----------------------------------------------------------

def witness_confirms(g: Graph, p: QualityParams, name: str, witness: VertexSet) -> bool:
    """Re-derive a failure of check ``name`` from its witness alone."""
    w = members(witness)
    if name == "order":
        return witness == g.full and g.n < 7
    if name == "quality":
        return witness == g.full and quality(g, p) <= 0
    if name == "min-degree":
        return len(w) == 1 and _bad_low_degree(g, w[0]) is not None
    if name == "four-connected":
        if witness == g.full and g.n <= 4:
            return True
        return is_cut(g, witness) and (len(w) < 4 or (len(w) == 4 and _kind(g, witness) is FourKind.K4))
    if name == "no-diamond-cut":
        return len(w) == 4 and is_cut(g, witness) and _kind(g, witness) is FourKind.DIAMOND
    if name == "no-c4-cut":
        return len(w) == 4 and is_cut(g, witness) and _kind(g, witness) is FourKind.C4
    if name == "small-cuts-t0-t1":
        return len(w) <= 4 and is_cut(g, witness) and not _t_cut(g, witness)
    if name == "no-complete-neighbourhood":
        return len(w) == 1 and _complete_nbhd(g, w[0])
    if name == "no-forest-cut":
        return is_cut(g, witness) and in_class(g.adj, witness, CutClass.FOREST)
    if name == "no-bipartite-cut":
        return is_cut(g, witness) and in_class(g.adj, witness, CutClass.BIPARTITE)
    if name == "deg4-not-in-common-k4":
        return (len(w) == 4 and edges_within(g.adj, witness) == 6
                and sum(1 for v in w if g.degree(v) == 4) >= 2)
    if name in ("deg4-matching", "deg4-max-degree-1"):
        if len(w) != 3 or any(g.degree(v) != 4 for v in w):
            return False
        return any(g.has_edge(c, a) and g.has_edge(c, b)
                   for c, a, b in ((w[0], w[1], w[2]), (w[1], w[0], w[2]), (w[2], w[0], w[1])))
    if name == "no-pair-three-common":
        return len(w) == 2 and not g.has_edge(*w) and popcount(g.adj[w[0]] & g.adj[w[1]]) >= 3
    if name == "no-deg4-triangle":
        return len(w) == 3 and edges_within(g.adj, witness) == 3 and all(g.degree(v) == 4 for v in w)
    if name == "red-edges-deg5":
        s = _bip_source(g)
        return len(w) == 1 and s.a >> w[0] & 1 and g.degree(w[0]) == 5 and s.red_at(w[0]) < 2
    raise KeyError(f"unknown check {name!r}")


def run_single(g: Graph, p: QualityParams, name: str):
    """Run one named check in isolation; returns (witness, detail) or None."""
    return _ALL[name](g, p)
