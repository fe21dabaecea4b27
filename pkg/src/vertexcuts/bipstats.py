"""Counting machinery around a degree-maximising independent set.

For a graph G, ``A`` is an independent set maximising f(A) = e(A, V - A)
(ties go to maximal sets, then to the lexicographically least vertex tuple)
and ``B = V - A``.  An A-B edge is *red* when its B endpoint has at least two
neighbours in A.

This module also re-checks the linear-combination arithmetic that turns the
structural edge bounds into the two edge thresholds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .cuts import Theorem, below_threshold
from .graph import Graph, VertexSet, format_set, members, popcount

MAX_SCAN = 30


def maximal_independent_sets(g: Graph) -> Iterator[VertexSet]:
    """Bron-Kerbosch with pivoting, run on the complement."""
    full = g.full
    co = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]

    def expand(r, p, x):
        if not p and not x:
            yield r
            return
        pivot = max(members(p | x), key=lambda u: popcount(p & co[u]))
        for v in members(p & ~co[pivot]):
            yield from expand(r | 1 << v, p & co[v], x & co[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        yield 0
        return
    yield from expand(0, full, 0)


def cut_size(g: Graph, x: VertexSet) -> int:
    """f(X) = number of edges between X and its complement."""
    rest = g.full & ~x
    return sum(popcount(g.adj[v] & rest) for v in members(x))


def best_independent_source(g: Graph) -> VertexSet:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.n > MAX_SCAN:
        raise ValueError(f"independent-set scan is limited to n <= {MAX_SCAN}, got {g.n}")
    # Some maximal set attains the maximum: extending an independent set never lowers f.
    best = None
    best_key = None
    for a in maximal_independent_sets(g):
        key = (-cut_size(g, a), members(a))
        if best_key is None or key < best_key:
            best, best_key = a, key
    return best


def _require_independent(g: Graph, a: VertexSet):
    if any(g.adj[v] & a for v in members(a)):
        raise ValueError(f"{format_set(a)} is not independent")


def red_edges(g: Graph, a: VertexSet) -> frozenset[tuple[int, int]]:
    _require_independent(g, a)
    b = g.full & ~a
    out = set()
    for v in members(b):
        hits = g.adj[v] & a
        if popcount(hits) >= 2:
            out.update((min(u, v), max(u, v)) for u in members(hits))
    return frozenset(out)


@dataclass(frozen=True)
class BipStats:
    a: VertexSet
    b: VertexSet
    k: int
    m: int
    x: int
    y: int
    z: int
    red: frozenset
    n: int
    e: int

    @property
    def r(self) -> int:
        return len(self.red)

    def red_at(self, v: int) -> int:
        return sum(1 for e in self.red if v in e)

    def to_record(self) -> dict:
        return {
            "A": members(self.a),
            "B": members(self.b),
            "n": self.n,
            "e": self.e,
            "k": self.k,
            "m": self.m,
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "r": self.r,
            "red": sorted(self.red),
        }


def stats(g: Graph, a: VertexSet) -> BipStats:
    _require_independent(g, a)
    degs = g.degrees()
    four = {v for v in range(g.n) if degs[v] == 4}
    in_a = members(a)
    x = sum(1 for v in in_a if degs[v] == 4)
    y = sum(1 for v in in_a if degs[v] == 5)
    z = sum(1 for v in in_a if v in four and any(u in four for u in members(g.adj[v])))
    return BipStats(
        a=a,
        b=g.full & ~a,
        k=len(in_a),
        m=cut_size(g, a),
        x=x,
        y=y,
        z=z,
        red=red_edges(g, a),
        n=g.n,
        e=g.m,
    )


@dataclass(frozen=True)
class Inequality:
    name: str
    statement: str
    lhs: int
    rhs: int
    strict: bool = False

    @property
    def holds(self) -> bool:
        return self.lhs > self.rhs if self.strict else self.lhs >= self.rhs

    def to_record(self) -> dict:
        return {"name": self.name, "statement": self.statement, "lhs": self.lhs,
                "rhs": self.rhs, "holds": self.holds}

    def __str__(self) -> str:
        rel = ">" if self.strict else ">="
        mark = "holds" if self.holds else "VIOLATED"
        return f"{self.name}: {self.statement}  [{self.lhs} {rel} {self.rhs}] {mark}"


def check_inequalities(g: Graph, s: BipStats) -> list[Inequality]:
    """Evaluate the structural bounds on (n, e, k, m, x, y, z, r).

    These are proved only for minimal counterexamples; on other graphs the
    verdicts are informational.
    """
    n, e, k, m, x, y, z = g.n, g.m, s.k, s.m, s.x, s.y, s.z
    return [
        Inequality("edges-vs-m", "e >= m + 2n - 2k - 3", e, m + 2 * n - 2 * k - 3),
        Inequality("deg4-pairs", "e >= 2n + 3z - 3", e, 2 * n + 3 * z - 3),
        Inequality("m-by-degree", "m >= 6k - 2x - y", m, 6 * k - 2 * x - y),
        Inequality("edges-by-degree", "e >= 2n + 4k - 2x - y - 3", e, 2 * n + 4 * k - 2 * x - y - 3),
        Inequality("red-count", "r >= 3z + 4(x - z) + 2y + k - x - y", s.r,
                   3 * z + 4 * (x - z) + 2 * y + k - x - y),
        Inequality("m-by-red", "2m >= 2n - k + 3x + y - z", 2 * m, 2 * n - k + 3 * x + y - z),
        Inequality("edges-by-red", "2e >= 6n - 5k + 3x + y - z - 6", 2 * e,
                   6 * n - 5 * k + 3 * x + y - z - 6),
        Inequality("combined", "31e >= 80n + 3k - 6z + 3x - 3y - 93", 31 * e,
                   80 * n + 3 * k - 6 * z + 3 * x - 3 * y - 93),
        Inequality("threshold", "31e > 80n - 134", 31 * e, 80 * n - 134, strict=True),
    ]


# linear-combination arithmetic ---------------------------------------------------

# A form {var: coeff, "": const} encodes  sum(coeff * var) + const >= 0.
Form = dict

FOREST_STEPS = (
    ("low-degree removal", Fraction(1, 4), {"e": 1, "n": -2, "u": Fraction(-3, 2), "": 3}),
    ("degree count", Fraction(3, 4), {"e": 1, "n": Fraction(-5, 2), "u": Fraction(1, 2)}),
)
FOREST_TARGET = {"e": 1, "n": Fraction(-19, 8), "": Fraction(3, 4)}

BIPARTITE_STEPS = (
    ("deg4-pairs", 1, {"e": 1, "n": -2, "z": -3, "": 3}),
    ("edges-by-degree", 12, {"e": 1, "n": -2, "k": -4, "x": 2, "y": 1, "": 3}),
    ("edges-by-red", 9, {"e": 2, "n": -6, "k": 5, "x": -3, "y": -1, "z": 1, "": 6}),
)
BIPARTITE_TARGET = {"e": 31, "n": -80, "k": -3, "z": 6, "x": -3, "y": 3, "": 93}


def weighted_sum(steps) -> Form:
    out: dict[str, Fraction] = {}
    for _, weight, form in steps:
        for var, coeff in form.items():
            out[var] = out.get(var, Fraction(0)) + Fraction(weight) * Fraction(coeff)
    return {v: c for v, c in out.items() if c != 0}


def evaluate(form: Form, values: dict) -> Fraction:
    return sum((Fraction(c) * (1 if v == "" else values[v]) for v, c in form.items()), Fraction(0))


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def forest_arithmetic_trials(trials: int, seed: int = 0) -> list[dict]:
    """Sample (n, u, e) meeting both forest-side edge bounds; return the tuples that escape the threshold.

    Each sample must satisfy e >= (19/8) n - 3/4 and therefore fail 8e < 19n - 28.
    """
    combo = weighted_sum(FOREST_STEPS)
    if combo != {k: Fraction(v) for k, v in FOREST_TARGET.items()}:
        return [{"combination": combo}]
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        n = rng.randint(4, 10_000)
        u = rng.randint(0, n)
        lo = max(_ceil(Fraction(2 * n) + Fraction(3, 2) * u - 3), _ceil(Fraction(5, 2) * n - Fraction(u, 2)))
        e = lo + rng.choice((0, 0, 1, rng.randint(0, n)))
        vals = {"n": n, "u": u, "e": e}
        if any(evaluate(f, vals) < 0 for _, _, f in FOREST_STEPS):
            bad.append({**vals, "reason": "sample outside the antecedent"})
        elif evaluate(combo, vals) < 0 or below_threshold(Theorem.FOREST, n, e):
            bad.append(vals)
    return bad


def bipartite_arithmetic_trials(trials: int, seed: int = 0) -> list[dict]:
    """Sample (n, e, k, x, y, z) meeting the three bipartite-side bounds and 0 <= z <= x, x + y <= k.

    Each must give 31e > 80n - 134.
    """
    combo = weighted_sum(BIPARTITE_STEPS)
    if combo != {k: Fraction(v) for k, v in BIPARTITE_TARGET.items()}:
        return [{"combination": combo}]
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        n = rng.randint(4, 10_000)
        k = rng.randint(1, n)
        x = rng.randint(0, k)
        y = rng.randint(0, k - x)
        z = rng.randint(0, x)
        lo = max(
            2 * n + 3 * z - 3,
            2 * n + 4 * k - 2 * x - y - 3,
            _ceil(Fraction(6 * n - 5 * k + 3 * x + y - z - 6, 2)),
        )
        e = lo + rng.choice((0, 0, 1, rng.randint(0, n)))
        vals = {"n": n, "e": e, "k": k, "x": x, "y": y, "z": z}
        if any(evaluate(f, vals) < 0 for _, _, f in BIPARTITE_STEPS):
            bad.append({**vals, "reason": "sample outside the antecedent"})
        elif evaluate(combo, vals) < 0 or below_threshold(Theorem.BIPARTITE, n, e):
            bad.append(vals)
    return bad
