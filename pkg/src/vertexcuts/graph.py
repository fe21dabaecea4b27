"""Immutable small graphs stored as adjacency bit rows.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v`` is in
the set).  Every operation here is pure; ``Graph`` values never change after
construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 62

VertexSet = int


class GraphError(ValueError):
    """Raised for malformed graph input (bad vertices, loops, bad encodings)."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def format_set(mask: VertexSet) -> str:
    return "{" + ",".join(str(v) for v in members(mask)) + "}"


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    m: int = -1

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
            total += popcount(row)
        if self.m == -1:
            object.__setattr__(self, "m", total // 2)
        elif self.m != total // 2:
            raise GraphError("cached edge count disagrees with adjacency rows")

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int], m: int | None = None) -> "Graph":
        # Skips validation; only for rows built by this package.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        if m is None:
            m = sum(popcount(r) for r in adj) // 2
        object.__setattr__(g, "m", m)
        return g

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in members(self.adj[v] & ((1 << v) - 1))]

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self).decode()!r})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


# graph6 --------------------------------------------------------------------

def _pair_bits(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def to_graph6(g: Graph) -> bytes:
    out = bytearray([63 + g.n])
    acc = nbits = 0
    for i, j in _pair_bits(g.n):
        acc = (acc << 1) | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(63 + acc)
            acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphError("empty graph6 string")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphError(f"malformed graph6 byte {b!r} at offset {pos}")
    n = data[0] - 63
    if n > MAX_VERTICES:
        raise GraphError("long-form graph6 (n > 62) is not supported")
    pairs = _pair_bits(n)
    need = -(-len(pairs) // 6)
    payload = data[1:]
    if len(payload) < need:
        raise GraphError(f"truncated graph6 payload: need {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise GraphError(f"trailing bytes after graph6 payload ({len(payload) - need} extra)")
    adj = [0] * n
    bit = 0
    for byte in payload:
        val = byte - 63
        for k in range(5, -1, -1):
            if val >> k & 1:
                if bit >= len(pairs):
                    raise GraphError("nonzero padding bits in graph6 payload")
                i, j = pairs[bit]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph._trusted(n, adj)


# plain edge lists ------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n, m = (int(t) for t in lines[0].split())
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise GraphError(f"edge list header announces {m} edges, body has {len(edges)} lines")
    return from_edge_list(n, edges)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


# structure -----------------------------------------------------------------

def induced(g: Graph, s: VertexSet) -> Graph:
    keep = members(s & g.full)
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in members(g.adj[v] & s):
            row |= 1 << index[u]
        adj.append(row)
    return Graph._trusted(len(keep), adj)


def reach(adj: Sequence[int], start: VertexSet, allowed: VertexSet) -> VertexSet:
    """Vertices of ``allowed`` reachable from ``start`` inside ``allowed``."""
    seen = frontier = start & allowed
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & allowed & ~seen
        seen |= new
        frontier |= new
    return seen


def components_within(adj: Sequence[int], allowed: VertexSet) -> list[VertexSet]:
    comps = []
    rest = allowed
    while rest:
        c = reach(adj, rest & -rest, allowed)
        comps.append(c)
        rest &= ~c
    return comps


def components(g: Graph) -> list[VertexSet]:
    return components_within(g.adj, g.full)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return reach(g.adj, 1, g.full) == g.full


def edges_within(adj: Sequence[int], s: VertexSet) -> int:
    return sum(popcount(adj[v] & s) for v in members(s)) // 2


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[v] & s for v in members(s))


def forest_within(adj: Sequence[int], s: VertexSet) -> bool:
    return edges_within(adj, s) == popcount(s) - len(components_within(adj, s))


def bipartite_within(adj: Sequence[int], s: VertexSet) -> bool:
    uncolored = s
    while uncolored:
        side = [uncolored & -uncolored, 0]
        frontier = side[0]
        colour = 0
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= adj[v] & s
            if nxt & side[colour]:
                return False
            colour ^= 1
            nxt &= ~side[colour]
            side[colour] |= nxt
            frontier = nxt
        uncolored &= ~(side[0] | side[1])
    return True


def is_forest(g: Graph) -> bool:
    return forest_within(g.adj, g.full)


def is_bipartite(g: Graph) -> bool:
    return bipartite_within(g.adj, g.full)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no set of fewer than ``k`` vertices disconnects it.

    ``k <= 0`` only asks for connectivity.  Removal sets are scanned by brute force.
    """
    if not is_connected(g):
        return False
    if k <= 0:
        return True
    if g.n <= k:
        return False
    full = g.full
    for size in range(k):
        for combo in combinations(range(g.n), size):
            rest = full & ~vset(combo)
            if reach(g.adj, rest & -rest, rest) != rest:
                return False
    return True


class FourKind(enum.Enum):
    K4 = "K4"
    DIAMOND = "Diamond"
    C4 = "C4"
    T1 = "T1"
    T0 = "T0"
    OTHER_FOREST = "OtherForest"
    # Every 4-vertex graph outside the five named ones is acyclic.
    OTHER_NON_FOREST = "OtherNonForest"


def classify_four(g: Graph) -> FourKind:
    if g.n != 4:
        raise GraphError(f"classify_four needs a 4-vertex graph, got n={g.n}")
    degs = sorted(g.degrees())
    if g.m == 6:
        return FourKind.K4
    if g.m == 5:
        return FourKind.DIAMOND
    if g.m == 4:
        return FourKind.C4 if degs == [2, 2, 2, 2] else FourKind.T1
    if g.m == 3 and degs == [0, 2, 2, 2]:
        return FourKind.T0
    if not is_forest(g):
        return FourKind.OTHER_NON_FOREST
    return FourKind.OTHER_FOREST


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"loop edge at vertex {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"edge ({u}, {v}) out of range for n={g.n}")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph._trusted(g.n, adj, g.m + 1)


def merge_two(g: Graph, u1: int, u2: int) -> Graph:
    """Replace non-adjacent ``u1``, ``u2`` by one new last vertex joined to N(u1) | N(u2).

    Surviving vertices keep their relative order.
    """
    if u1 == u2:
        raise GraphError("merge_two needs two distinct vertices")
    if not (0 <= u1 < g.n and 0 <= u2 < g.n):
        raise GraphError(f"vertices ({u1}, {u2}) out of range for n={g.n}")
    if g.has_edge(u1, u2):
        raise GraphError(f"vertices {u1} and {u2} are adjacent")
    drop = (1 << u1) | (1 << u2)
    keep = g.full & ~drop
    h = induced(g, keep)
    union = (g.adj[u1] | g.adj[u2]) & keep
    new = h.n
    adj = list(h.adj) + [0]
    for i, v in enumerate(members(keep)):
        if union >> v & 1:
            adj[i] |= 1 << new
            adj[new] |= 1 << i
    return Graph._trusted(new + 1, adj)


def lifted_labels(n: int, u1: int, u2: int) -> list[int]:
    """Map vertex labels of ``merge_two(g, u1, u2)`` (minus the merged vertex) back to ``g``."""
    return [v for v in range(n) if v != u1 and v != u2]
