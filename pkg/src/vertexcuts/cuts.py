"""Vertex cuts, separations, the quality function and the cut constructions.

All quality and threshold arithmetic is exact (``fractions.Fraction`` or
integer cross-multiplication).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import (
    FourKind,
    Graph,
    VertexSet,
    bipartite_within,
    classify_four,
    components_within,
    edges_within,
    forest_within,
    format_set,
    induced,
    lifted_labels,
    members,
    merge_two,
    popcount,
    reach,
    vset,
)


class PreconditionError(ValueError):
    """An operation's input violates its stated preconditions.

    ``failures`` lists every violated condition, one message each.
    """

    def __init__(self, failures: list[str]):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


# quality -------------------------------------------------------------------

@dataclass(frozen=True)
class QualityParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    @property
    def on_line(self) -> bool:
        return 4 * self.alpha - self.beta == 6

    @property
    def admissible(self) -> bool:
        """4a - b = 6 and 2 < a <= 3."""
        return self.on_line and 2 < self.alpha <= 3

    def __str__(self) -> str:
        return f"(alpha={self.alpha}, beta={self.beta})"


FOREST = QualityParams(Fraction(19, 8), Fraction(28, 8))
BIPARTITE = QualityParams(Fraction(80, 31), Fraction(134, 31))
CONJECTURE = QualityParams(Fraction(3), Fraction(6))
# e <= 2n - 4  <=>  2n - e - 3 > 0; off the 4a - b = 6 line.
INDEPENDENT_GATE = QualityParams(Fraction(2), Fraction(3))

PRESETS = {
    "forest": FOREST,
    "bipartite": BIPARTITE,
    "conjecture": CONJECTURE,
    "chen-yu": INDEPENDENT_GATE,
}


def quality(g: Graph, p: QualityParams) -> Fraction:
    return p.alpha * g.n - g.m - p.beta


def quality_of(n: int, e: int, p: QualityParams) -> Fraction:
    return p.alpha * n - e - p.beta


# classes and thresholds --------------------------------------------------------

class CutClass(enum.Enum):
    INDEPENDENT = "independent"
    FOREST = "forest"
    BIPARTITE = "bipartite"


class Theorem(enum.Enum):
    INDEPENDENT = "independent"
    FOREST = "forest"
    BIPARTITE = "bipartite"
    CONJECTURE = "conjecture"

    @property
    def cut_class(self) -> CutClass:
        return {
            Theorem.INDEPENDENT: CutClass.INDEPENDENT,
            Theorem.FOREST: CutClass.FOREST,
            Theorem.BIPARTITE: CutClass.BIPARTITE,
            Theorem.CONJECTURE: CutClass.FOREST,
        }[self]

    @property
    def preset(self) -> QualityParams:
        return {
            Theorem.INDEPENDENT: INDEPENDENT_GATE,
            Theorem.FOREST: FOREST,
            Theorem.BIPARTITE: BIPARTITE,
            Theorem.CONJECTURE: CONJECTURE,
        }[self]

    @property
    def proven(self) -> bool:
        return self is not Theorem.CONJECTURE


def below_threshold(theorem: Theorem, n: int, e: int) -> bool:
    """Exact edge-count hypothesis of each theorem."""
    if theorem is Theorem.INDEPENDENT:
        return e <= 2 * n - 4
    if n < 4:
        raise ValueError(f"{theorem.value} threshold is stated for n >= 4, got n={n}")
    if theorem is Theorem.FOREST:
        return 8 * e < 19 * n - 28
    if theorem is Theorem.BIPARTITE:
        return 31 * e < 80 * n - 134
    return e < 3 * n - 6


def in_class(adj, s: VertexSet, cls: CutClass) -> bool:
    if cls is CutClass.INDEPENDENT:
        return all(not adj[v] & s for v in members(s))
    if cls is CutClass.FOREST:
        return forest_within(adj, s)
    return bipartite_within(adj, s)


# cuts --------------------------------------------------------------------------

def splits(adj, rest: VertexSet) -> bool:
    """True iff ``rest`` has at least two vertices and is disconnected."""
    if rest & (rest - 1) == 0:
        return False
    return reach(adj, rest & -rest, rest) != rest


def is_cut(g: Graph, s: VertexSet) -> bool:
    return splits(g.adj, g.full & ~s)


def is_cut_within(g: Graph, universe: VertexSet, s: VertexSet) -> bool:
    """``is_cut`` for the subgraph induced on ``universe``, in ``g``'s own labels."""
    return splits(g.adj, universe & ~s)


@dataclass(frozen=True)
class Separation:
    m: VertexSet
    left: VertexSet
    right: VertexSet

    def problems(self, g: Graph) -> list[str]:
        out = []
        if self.m & self.left or self.m & self.right or self.left & self.right:
            out.append("M, L, R are not pairwise disjoint")
        if self.m | self.left | self.right != g.full:
            out.append("M, L, R do not cover V(G)")
        if not self.left:
            out.append("L is empty")
        if not self.right:
            out.append("R is empty")
        for v in members(self.left):
            if g.adj[v] & self.right:
                out.append(f"edge between L and R at vertex {v}")
                break
        return out

    def validate(self, g: Graph) -> "Separation":
        bad = self.problems(g)
        if bad:
            raise PreconditionError(bad)
        return self

    def __str__(self) -> str:
        return f"M = {format_set(self.m)}; L = {format_set(self.left)}; R = {format_set(self.right)}"


def separation_from_cut(g: Graph, s: VertexSet) -> Separation:
    rest = g.full & ~s
    if not splits(g.adj, rest):
        raise PreconditionError([f"{format_set(s)} is not a cut"])
    left = reach(g.adj, rest & -rest, rest)
    return Separation(s, left, rest & ~left)


def class_name(adj, s: VertexSet) -> str:
    for cls in CutClass:
        if in_class(adj, s, cls):
            return cls.value
    return "other"


@dataclass(frozen=True)
class CutCertificate:
    s: VertexSet
    components: tuple[VertexSet, ...]
    independent: bool
    forest: bool
    bipartite: bool

    @classmethod
    def build(cls, g: Graph, s: VertexSet) -> "CutCertificate":
        comps = tuple(components_within(g.adj, g.full & ~s))
        return cls(
            s,
            comps,
            in_class(g.adj, s, CutClass.INDEPENDENT),
            in_class(g.adj, s, CutClass.FOREST),
            in_class(g.adj, s, CutClass.BIPARTITE),
        )

    @property
    def kind(self) -> str:
        if self.independent:
            return "independent"
        if self.forest:
            return "forest"
        if self.bipartite:
            return "bipartite"
        return "other"

    @property
    def vertices(self) -> list[int]:
        return members(self.s)

    def __str__(self) -> str:
        comps = ",".join(format_set(c) for c in self.components)
        return f"S = {format_set(self.s)}; components = [{comps}]; class = {self.kind}"

    def to_record(self) -> dict:
        return {
            "S": members(self.s),
            "components": [members(c) for c in self.components],
            "class": self.kind,
        }


@lru_cache(maxsize=None)
def _subset_order(n: int) -> tuple[int, ...]:
    out = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            out.append(vset(combo))
    return tuple(out)


def _candidate_sets(n: int) -> Iterator[VertexSet]:
    # Removing n - 1 or more vertices can never disconnect anything.
    if n <= 16:
        order = _subset_order(n)
        limit = len(order) - n - 1
        yield from order[:limit]
        return
    for size in range(max(n - 1, 0)):
        for combo in combinations(range(n), size):
            yield vset(combo)


def enumerate_cuts(g: Graph, cls: CutClass | None = None) -> Iterator[CutCertificate]:
    """All cuts (optionally of one class) by size, then lexicographically."""
    adj, full = g.adj, g.full
    for s in _candidate_sets(g.n):
        if splits(adj, full & ~s) and (cls is None or in_class(adj, s, cls)):
            yield CutCertificate.build(g, s)


def find_cut_set(g: Graph, cls: CutClass) -> VertexSet | None:
    # Hot path of the census: flood fill and the independence test are inlined.
    adj, full = g.adj, g.full
    independent = cls is CutClass.INDEPENDENT
    for s in _candidate_sets(g.n):
        if independent:
            x = s
            while x:
                low = x & -x
                if adj[low.bit_length() - 1] & s:
                    break
                x ^= low
            if x:
                continue
        rest = full & ~s
        seen = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rest & ~seen
            seen |= new
            frontier |= new
        if seen == rest or rest & (rest - 1) == 0:
            continue
        if independent or in_class(adj, s, cls):
            return s
    return None


def find_cut(g: Graph, cls: CutClass) -> CutCertificate | None:
    s = find_cut_set(g, cls)
    return None if s is None else CutCertificate.build(g, s)


def has_cut(g: Graph, cls: CutClass) -> bool:
    return find_cut_set(g, cls) is not None


# separations: quality split, cut propagation, gluing -----------------------

def modularity_split(g: Graph, sep: Separation, p: QualityParams):
    """Quality of G|_{L+M}, G|_{R+M}, G|_M and G for a separation (M, L, R).

    The four values satisfy qG == qLM + qRM - qM exactly.
    """
    sep.validate(g)

    def q(s):
        return p.alpha * popcount(s) - edges_within(g.adj, s) - p.beta

    return q(sep.left | sep.m), q(sep.right | sep.m), q(sep.m), quality(g, p)


class PropagationCase(enum.Flag):
    NEITHER = 0
    CUT_OF_G = enum.auto()
    CUT_OF_M = enum.auto()
    BOTH = CUT_OF_G | CUT_OF_M


def propagation_case(g: Graph, sep: Separation, s: VertexSet) -> PropagationCase:
    """Which of "S is a cut of G" / "S & M is a cut of G|_M" hold for a cut S of G|_{L+M}.

    ``NEITHER`` never occurs for valid input; callers treat it as a defect.
    """
    sep.validate(g)
    side = sep.left | sep.m
    bad = []
    if s & ~side:
        bad.append(f"S = {format_set(s)} is not inside L + M")
    elif not is_cut_within(g, side, s):
        bad.append(f"S = {format_set(s)} is not a cut of G|_(L+M)")
    if bad:
        raise PreconditionError(bad)
    out = PropagationCase.NEITHER
    if is_cut(g, s):
        out |= PropagationCase.CUT_OF_G
    if is_cut_within(g, sep.m, s & sep.m):
        out |= PropagationCase.CUT_OF_M
    return out


def glue_cuts(g: Graph, sep: Separation, s_left: VertexSet, s_right: VertexSet) -> CutCertificate:
    """Union of a cut of G|_{L+M} and a cut of G|_{R+M} that agree on M and leave two M-vertices."""
    sep.validate(g)
    lm, rm = sep.left | sep.m, sep.right | sep.m
    bad = []
    if s_left & ~lm:
        bad.append("S_L is not inside L + M")
    elif not is_cut_within(g, lm, s_left):
        bad.append("S_L is not a cut of G|_(L+M)")
    if s_right & ~rm:
        bad.append("S_R is not inside R + M")
    elif not is_cut_within(g, rm, s_right):
        bad.append("S_R is not a cut of G|_(R+M)")
    if s_left & sep.m != s_right & sep.m:
        bad.append("S_L and S_R differ on M")
    if popcount(sep.m & ~s_left) != 2:
        bad.append(f"|M - S_L| = {popcount(sep.m & ~s_left)}, need 2")
    if bad:
        raise PreconditionError(bad)
    s = s_left | s_right
    if not is_cut(g, s):
        raise AssertionError(f"glued set {format_set(s)} does not disconnect the graph")
    return CutCertificate.build(g, s)


# forest cut from an independent cut of G - U -------------------------------------

def extension_problems(g: Graph, m0: VertexSet) -> list[str]:
    degs = g.degrees()
    u_set = vset(v for v in range(g.n) if degs[v] == 4)
    bad = []
    for u in members(u_set):
        inner = g.adj[u] & u_set
        if popcount(inner) > 1:
            bad.append(f"vertex {u} has {popcount(inner)} degree-4 neighbours")
            continue
        if inner:
            v = inner.bit_length() - 1
            tri = g.adj[u] & ~inner
            if edges_within(g.adj, tri) != 3:
                bad.append(f"N({u}) - {{{v}}} is not a triangle")
            elif tri & u_set:
                bad.append(f"triangle of {u} meets the degree-4 set")
        else:
            kind = classify_four(induced(g, g.adj[u]))
            if kind not in (FourKind.T0, FourKind.T1):
                bad.append(f"N({u}) induces {kind.value}, need T0 or T1")
    rest = g.full & ~u_set
    if m0 & u_set:
        bad.append("m0 meets the degree-4 set")
    elif any(g.adj[v] & m0 for v in members(m0)):
        bad.append("m0 is not independent")
    elif not is_cut_within(g, rest, m0):
        bad.append("m0 is not a cut of G - U")
    return bad


def _triangle_of(g: Graph, nbrs: VertexSet) -> VertexSet:
    # The unique triangle inside a T0/T1 neighbourhood.
    for a, b, c in combinations(members(nbrs), 3):
        if g.adj[a] >> b & 1 and g.adj[a] >> c & 1 and g.adj[b] >> c & 1:
            return vset((a, b, c))
    raise AssertionError("no triangle in neighbourhood")


def _side_of(tri: VertexSet, left: VertexSet, right: VertexSet, who: int) -> str:
    in_l, in_r = tri & left, tri & right
    if in_l and in_r:
        raise AssertionError(f"triangle of {who} straddles both sides")
    if not (in_l or in_r):
        raise AssertionError(f"triangle of {who} lies inside M")
    return "L" if in_l else "R"


def extend_independent_to_forest(g: Graph, m0: VertexSet) -> CutCertificate:
    """Grow an independent cut of G - U into a forest cut of G, U = degree-4 vertices.

    Components of G|_U are handled in order of least vertex.  A lone u joins
    its triangle's side unless its fourth neighbour sits on the other side, in
    which case it joins M.  For an edge uv (u < v), u joins its triangle's
    side and v joins M.
    """
    bad = extension_problems(g, m0)
    if bad:
        raise PreconditionError(bad)
    degs = g.degrees()
    u_set = vset(v for v in range(g.n) if degs[v] == 4)
    rest = g.full & ~u_set
    left = reach(g.adj, (rest & ~m0) & -(rest & ~m0), rest & ~m0)
    right = rest & ~m0 & ~left
    m = m0
    for comp in components_within(g.adj, u_set):
        if popcount(comp) == 1:
            u = comp.bit_length() - 1
            tri = _triangle_of(g, g.adj[u])
            fourth = g.adj[u] & ~tri
            if _side_of(tri, left, right, u) == "L":
                if fourth & right:
                    m |= comp
                else:
                    left |= comp
            else:
                if fourth & left:
                    m |= comp
                else:
                    right |= comp
        else:
            u, v = members(comp)
            tri = g.adj[u] & ~(1 << v)
            if _side_of(tri, left, right, u) == "L":
                left |= 1 << u
            else:
                right |= 1 << u
            m |= 1 << v
    cert = CutCertificate.build(g, m)
    if not is_cut(g, m) or not cert.forest:
        raise AssertionError(f"constructed set {format_set(m)} is not a forest cut")
    return cert


# lifting a cut through a merge ---------------------------------------------------

def lift_merged_cut(g: Graph, u1: int, u2: int, s_prime: VertexSet) -> CutCertificate:
    """Pull a bipartite cut of ``merge_two(g, u1, u2)`` containing the merged vertex back to ``g``."""
    h = merge_two(g, u1, u2)
    merged = h.n - 1
    if not s_prime >> merged & 1:
        raise PreconditionError([f"S' = {format_set(s_prime)} does not contain the merged vertex {merged}"])
    labels = lifted_labels(g.n, u1, u2)
    s = (1 << u1) | (1 << u2)
    for i in members(s_prime & ~(1 << merged)):
        s |= 1 << labels[i]
    bad = []
    if not is_cut(g, s):
        bad.append(f"lifted set {format_set(s)} is not a cut")
    if not bipartite_within(g.adj, s):
        bad.append(f"lifted set {format_set(s)} is not bipartite")
    if bad:
        raise PreconditionError(bad)
    return CutCertificate.build(g, s)
