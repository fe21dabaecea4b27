"""Exhaustive small-graph census.

Enumerate connected graphs (labeled, or one representative per isomorphism
class) or read graph6 streams, then check every theorem instance.
Reports are deterministic: counts are order-free sums and violations are
sorted by graph6 string.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product
from multiprocessing import Pool
from typing import Iterable, Iterator

from .cuts import CutClass, QualityParams, Theorem, below_threshold, find_cut_set, quality_of
from .filters import FilterReport, check_candidate
from .graph import Graph, is_connected, members, parse_graph6, popcount, reach, to_graph6

MAX_ENUM_N = 8
MAX_ISO_N = 7


# labeled enumeration ------------------------------------------------------------

def _columns(n: int) -> list[int]:
    # Column j of the graph6 bit string holds the pairs (i, j), i < j; it starts at bit j(j-1)/2.
    return [j * (j - 1) // 2 for j in range(n)]


def enumerate_labeled(n: int, max_edges: int, start_mask: int = 0) -> Iterator[tuple[int, Graph]]:
    """All labeled graphs on ``n`` vertices with at most ``max_edges`` edges and no isolated vertex
    (n >= 2), as ``(edge_mask, graph)`` in ascending edge-mask order.

    Bit ``j(j-1)/2 + i`` of the mask is the pair (i, j); this is the graph6 bit order.
    Restart from a checkpoint with ``start_mask``.
    """
    off = _columns(n)
    adj = [0] * n

    def rec(j: int, mask: int, used: int):
        if j == 0:
            if n >= 2 and not adj[0]:
                return
            if mask >= start_mask:
                yield mask, Graph._trusted(n, adj, used)
            return
        base = off[j]
        low_fill = (1 << base) - 1
        for c in range(1 << j):
            k = popcount(c)
            if used + k > max_edges:
                continue
            m = mask | c << base
            if m | low_fill < start_mask:
                continue
            if not (adj[j] | c):
                continue
            adj[j] |= c
            x = c
            while x:
                low = x & -x
                adj[low.bit_length() - 1] |= 1 << j
                x ^= low
            yield from rec(j - 1, m, used + k)
            adj[j] &= ~c
            x = c
            while x:
                low = x & -x
                adj[low.bit_length() - 1] &= ~(1 << j)
                x ^= low

    if n == 0:
        return
    if n == 1:
        if start_mask == 0:
            yield 0, Graph._trusted(1, [0], 0)
        return
    yield from rec(n - 1, 0, 0)


# isomorphism rejection ------------------------------------------------------------

def _refined_cells(g: Graph) -> list[list[int]]:
    colour = [0] * g.n
    count = 1
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in members(g.adj[v])))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        colour = [ranks[s] for s in sig]
        if len(ranks) == count:
            break
        count = len(ranks)
    cells: list[list[int]] = [[] for _ in range(count)]
    for v in range(g.n):
        cells[colour[v]].append(v)
    return cells


def canonical_form(g: Graph) -> Graph:
    """Relabel ``g`` to the ordering, among those respecting colour refinement,
    whose graph6 bit string is least.  Isomorphic graphs give equal results.
    """
    n = g.n
    off = _columns(n)
    best = None
    best_order = None
    for parts in product(*(permutations(c) for c in _refined_cells(g))):
        order = [v for part in parts for v in part]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        key = 0
        for j in range(1, n):
            c = 0
            for u in members(g.adj[order[j]]):
                if pos[u] < j:
                    c |= 1 << pos[u]
            key |= c << off[j]
        if best is None or key < best:
            best, best_order = key, order
    if best_order is None:
        return g
    pos = [0] * n
    for i, v in enumerate(best_order):
        pos[v] = i
    adj = [0] * n
    for v in range(n):
        row = 0
        for u in members(g.adj[v]):
            row |= 1 << pos[u]
        adj[pos[v]] = row
    return Graph._trusted(n, adj, g.m)


def connected_classes(n: int, max_edges: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs.

    Grown by vertex addition: every connected graph minus a non-cut vertex is
    connected and one vertex smaller.
    """
    if n < 1:
        return []
    if n == 1:
        return [Graph._trusted(1, [0], 0)]
    seen: dict[bytes, Graph] = {}
    for h in connected_classes(n - 1, max_edges - 1):
        new = n - 1
        for t in range(1, 1 << new):
            if h.m + popcount(t) > max_edges:
                continue
            adj = list(h.adj) + [t]
            for u in members(t):
                adj[u] |= 1 << new
            c = canonical_form(Graph._trusted(n, adj, h.m + popcount(t)))
            seen.setdefault(to_graph6(c), c)
    return [seen[k] for k in sorted(seen)]


def enumerate_connected(n: int, max_edges: int, iso_reject: bool = False,
                        start_mask: int = 0) -> Iterator[Graph]:
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"built-in enumerator covers 1 <= n <= {MAX_ENUM_N}; use a graph6 stream for n={n}")
    if iso_reject:
        if n > MAX_ISO_N:
            raise ValueError(f"isomorphism rejection is limited to n <= {MAX_ISO_N}")
        yield from connected_classes(n, max_edges)
        return
    full = (1 << n) - 1
    for _, g in enumerate_labeled(n, max_edges, start_mask):
        if reach(g.adj, 1, full) == full:
            yield g


def read_graph6(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    for ln in lines:
        ln = ln.strip()
        if ln:
            yield parse_graph6(ln)


# verification -------------------------------------------------------------------------

@dataclass
class NCounts:
    scanned: int = 0
    skipped: int = 0
    verified: int = 0
    under_threshold: int = 0
    cuts_found: int = 0

    def add(self, other: "NCounts"):
        for k in vars(self):
            setattr(self, k, getattr(self, k) + getattr(other, k))


@dataclass
class CensusReport:
    theorem: Theorem
    params: QualityParams
    source: str
    per_n: dict[int, NCounts] = field(default_factory=dict)
    violations: list[tuple[str, str]] = field(default_factory=list)
    skip_reasons: Counter = field(default_factory=Counter)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def totals(self) -> NCounts:
        t = NCounts()
        for c in self.per_n.values():
            t.add(c)
        return t

    @property
    def n_range(self) -> str:
        if not self.per_n:
            return "-"
        return f"{min(self.per_n)}..{max(self.per_n)}"

    def to_text(self, timing: bool = True) -> str:
        lines = [
            f"theorem {self.theorem.value} (cut class {self.theorem.cut_class.value}), "
            f"params {self.params}, source {self.source}, n {self.n_range}",
            f"{'n':>3} {'scanned':>10} {'skipped':>8} {'verified':>10} {'under':>10} {'cuts':>10}",
        ]
        for n in sorted(self.per_n):
            c = self.per_n[n]
            lines.append(f"{n:>3} {c.scanned:>10} {c.skipped:>8} {c.verified:>10} "
                         f"{c.under_threshold:>10} {c.cuts_found:>10}")
        for reason, count in sorted(self.skip_reasons.items()):
            lines.append(f"skipped ({reason}): {count}")
        lines.append(f"violations: {len(self.violations)}")
        lines += [f"  {g6}  {why}" for g6, why in self.violations]
        if timing:
            lines.append(f"wall time: {self.wall_time:.2f}s")
        return "\n".join(lines)

    def to_records(self, timing: bool = True) -> list[dict]:
        head = {"record": "census", "theorem": self.theorem.value,
                "alpha": str(self.params.alpha), "beta": str(self.params.beta),
                "source": self.source, "violations": len(self.violations)}
        out = [head]
        for n in sorted(self.per_n):
            out.append({"record": "n", "n": n, **vars(self.per_n[n])})
        out += [{"record": "violation", "graph6": g6, "reason": why} for g6, why in self.violations]
        out += [{"record": "skip", "reason": r, "count": c} for r, c in sorted(self.skip_reasons.items())]
        if timing:
            out.append({"record": "timing", "wall_time": round(self.wall_time, 3)})
        return out

    def to_json_lines(self, timing: bool = True) -> str:
        return "\n".join(json.dumps(r, sort_keys=True) for r in self.to_records(timing))


def _gate(theorem: Theorem, params: QualityParams | None):
    """Predicate on (n, e) selecting the graphs a census must check."""
    if params is None or params == theorem.preset:
        return lambda n, e: below_threshold(theorem, n, e)
    return lambda n, e: quality_of(n, e, params) > 0


def _examine(task):
    # Unit of work; module-level so worker processes can pickle it.
    g, theorem, params = task
    if g.n < 4:
        return g.n, "skip", "fewer than 4 vertices", None
    if not is_connected(g):
        return g.n, "skip", "disconnected", None
    if not _gate(theorem, params)(g.n, g.m):
        return g.n, "above", None, None
    if find_cut_set(g, theorem.cut_class) is not None:
        return g.n, "cut", None, None
    return g.n, "violation", f"no {theorem.cut_class.value} cut", to_graph6(g).decode()


def verify_theorem(source: Iterable[Graph], theorem: Theorem, params: QualityParams | None = None,
                   jobs: int = 1, label: str = "stream") -> CensusReport:
    """Look for a ``theorem.cut_class`` cut in every graph meeting the edge hypothesis.

    With ``params`` left as ``None`` (or equal to the theorem's preset) the gate is the
    exact integer threshold; any other ``params`` gate on q(G) > 0 instead.
    """
    start = time.perf_counter()
    report = CensusReport(theorem, params or theorem.preset, label)
    tasks = ((g, theorem, params) for g in source)
    if jobs > 1:
        pool = Pool(jobs)
        results = pool.imap_unordered(_examine, tasks, chunksize=2048)
    else:
        pool = None
        results = map(_examine, tasks)
    try:
        for n, status, reason, g6 in results:
            c = report.per_n.setdefault(n, NCounts())
            c.scanned += 1
            if status == "skip":
                c.skipped += 1
                report.skip_reasons[reason] += 1
                continue
            c.verified += 1
            if status == "above":
                continue
            c.under_threshold += 1
            if status == "cut":
                c.cuts_found += 1
            else:
                report.violations.append((g6, reason))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    report.violations.sort()
    report.wall_time = time.perf_counter() - start
    return report


def census(theorem: Theorem, n_min: int = 4, n_max: int = 7, iso_reject: bool = False,
           allow_n8: bool = False, params: QualityParams | None = None, jobs: int = 1) -> CensusReport:
    """Run the built-in enumerator over ``n_min..n_max``, only generating graphs up to the edge threshold."""
    if n_max >= 8 and not allow_n8:
        raise ValueError("n = 8 enumerates ~5e7 labeled graphs; pass allow_n8=True to opt in")

    def stream():
        for n in range(n_min, n_max + 1):
            yield from enumerate_connected(n, max_edges_for(theorem, n, params), iso_reject)

    mode = "isomorphism classes" if iso_reject else "labeled"
    return verify_theorem(stream(), theorem, params, jobs, label=f"enumerate ({mode})")


def max_edges_for(theorem: Theorem, n: int, params: QualityParams | None = None) -> int:
    gate = _gate(theorem, params)
    return max((e for e in range(n * (n - 1) // 2 + 1) if gate(n, e)), default=-1)


def search_counterexample(source: Iterable[Graph], cls: CutClass, p: QualityParams,
                          run_all: bool = False) -> list[tuple[str, FilterReport]]:
    """Graphs passing every necessary condition for a minimal counterexample."""
    hits = []
    for g in source:
        if g.n < 4 or not is_connected(g):
            continue
        report = check_candidate(g, cls, p, run_all)
        if report.passed:
            hits.append((to_graph6(g).decode(), report))
    hits.sort(key=lambda h: h[0])
    return hits


def open_source(path: str) -> Iterator[Graph]:
    with open(path) as fh:
        yield from read_graph6(fh)
