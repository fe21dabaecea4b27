"""Deterministic generators for named graphs and the extremal families.

Labelings:

* ``K<n>``, ``C<n>``, ``P<n>``, ``E<n>`` (edgeless), ``S<n>`` (star, centre 0):
  vertices ``0..n-1`` in the obvious order; cycles and paths go 0-1-...-(n-1).
* ``K<a>,<b>``: parts ``0..a-1`` and ``a..a+b-1``.
* ``prism``: triangles 012 and 345, rungs 0-3, 1-4, 2-5.
* ``T0``: triangle 012 plus isolated 3.  ``T1``: triangle 012 plus pendant 3-0.
* ``diamond``: K4 minus the edge 2-3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .cuts import CutClass, has_cut, extension_problems
from .graph import Graph, GraphError, VertexSet, edges_within, from_edge_list, vset


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism() -> Graph:
    return from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


_FIXED = {
    "prism": prism,
    "T0": lambda: from_edge_list(4, [(0, 1), (1, 2), (0, 2)]),
    "T1": lambda: from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    "diamond": lambda: from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "D": lambda: _FIXED["diamond"](),
}


def named(tag: str) -> Graph:
    """Build a standard graph from a short tag such as ``K4``, ``C5``, ``K2,3`` or ``prism``."""
    if tag in _FIXED:
        return _FIXED[tag]()
    m = re.fullmatch(r"K(\d+),(\d+)", tag)
    if m:
        return complete_bipartite(int(m[1]), int(m[2]))
    m = re.fullmatch(r"([KCPES])(\d+)", tag)
    if not m:
        raise GraphError(f"unknown graph tag {tag!r}")
    kind, n = m[1], int(m[2])
    if kind == "C":
        return cycle(n)
    if n < 1:
        raise GraphError(f"{tag}: size must be positive")
    return {"K": complete, "P": path, "E": lambda k: from_edge_list(k, []), "S": star}[kind](n)


# 3-trees ---------------------------------------------------------------------------

def apollonian(n: int, choices: Sequence[int] = ()) -> Graph:
    """3-tree on ``n`` vertices grown from the triangle 012.

    Vertex ``3 + i`` is joined to triangle ``choices[i]`` of the running
    triangle list (creation order, starting with (0, 1, 2)); missing choices
    default to 0.  Adding v on (a, b, c) appends (a, b, v), (a, c, v), (b, c, v).
    """
    if n < 3:
        raise GraphError(f"a 3-tree needs n >= 3, got {n}")
    if len(choices) > n - 3:
        raise GraphError(f"{len(choices)} choices given for {n - 3} insertions")
    triangles = [(0, 1, 2)]
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        i = v - 3
        c = choices[i] if i < len(choices) else 0
        if not 0 <= c < len(triangles):
            raise GraphError(f"triangle index {c} out of range (have {len(triangles)})")
        a, b, d = triangles[c]
        edges += [(a, v), (b, v), (d, v)]
        triangles += [(a, b, v), (a, d, v), (b, d, v)]
    return from_edge_list(n, edges)


# gluing ----------------------------------------------------------------------------

@dataclass(frozen=True)
class GlueSpec:
    host: Graph
    guest: Graph
    mapping: Mapping[int, int] = field(default_factory=dict)  # guest vertex -> host vertex


def _is_clique(g: Graph, vs: Sequence[int]) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def glue(spec: GlueSpec) -> Graph:
    """Identify a clique of the guest with a clique of the host.

    Host vertices keep their labels; unmapped guest vertices follow in ascending order.
    """
    host, guest, mapping = spec.host, spec.guest, dict(spec.mapping)
    k = len(mapping)
    if k not in (2, 3, 4):
        raise GraphError(f"glue cliques must have 2, 3 or 4 vertices, got {k}")
    if len(set(mapping.values())) != k:
        raise GraphError("glue mapping is not injective")
    src, dst = list(mapping), list(mapping.values())
    if any(not 0 <= v < guest.n for v in src) or any(not 0 <= v < host.n for v in dst):
        raise GraphError("glue mapping refers to missing vertices")
    if not _is_clique(guest, src):
        raise GraphError(f"guest vertices {sorted(src)} are not a clique")
    if not _is_clique(host, dst):
        raise GraphError(f"host vertices {sorted(dst)} are not a clique")
    label = dict(mapping)
    nxt = host.n
    for v in range(guest.n):
        if v not in label:
            label[v] = nxt
            nxt += 1
    edges = set(host.edges())
    for a, b in guest.edges():
        x, y = label[a], label[b]
        edges.add((min(x, y), max(x, y)))
    return from_edge_list(nxt, sorted(edges))


def robust_chain(parts: Sequence[str], joints: Sequence[str]) -> Graph:
    """Chain of K3 / prism blocks, each glued to the previous block along an edge or triangle.

    A block's attachment site is its last two (edge) or last three (triangle)
    vertices; the new block attaches through its own vertices 0,1 (or 0,1,2).
    """
    if not parts:
        raise GraphError("robust_chain needs at least one part")
    if len(joints) != len(parts) - 1:
        raise GraphError(f"{len(parts)} parts need {len(parts) - 1} joints, got {len(joints)}")
    blocks = {"K3": lambda: complete(3), "prism": prism}
    for p in parts:
        if p not in blocks:
            raise GraphError(f"unknown chain part {p!r}")
    for j in joints:
        if j not in ("edge", "triangle"):
            raise GraphError(f"invalid joint {j!r}")
    g = blocks[parts[0]]()
    last = list(range(g.n))
    for part, joint in zip(parts[1:], joints):
        guest = blocks[part]()
        k = 2 if joint == "edge" else 3
        mapping = dict(zip(range(k), last[-k:]))
        before = g.n
        g = glue(GlueSpec(g, guest, mapping))
        fresh = iter(range(before, g.n))
        last = [mapping[v] if v in mapping else next(fresh) for v in range(guest.n)]
    if g.m != 2 * g.n - 3:
        raise AssertionError(f"chain has {g.m} edges, expected {2 * g.n - 3}")
    return g


# fixtures for extend_independent_to_forest -----------------------------------------

def _double_k6() -> list[tuple[int, int]]:
    # a1..a6 -> 0..5, b1..b6 -> 6..11; cross edges a1-b1, a2-b2.
    edges = list(combinations(range(6), 2)) + list(combinations(range(6, 12), 2))
    return edges + [(0, 6), (1, 7)]


def extension_fixture(variant: str) -> tuple[Graph, VertexSet]:
    """Two K6 blocks joined by a1-b1, a2-b2, with degree-4 gadgets; m0 = {a1, b2}.

    ``isolated``: apex 12 on {a4, a5, a6, b3}.  ``paired``: u=12 on {a4, a5, a6},
    v=13 on {b4, b5, b6}, plus edge uv.  ``empty``: the bare base.
    """
    edges = _double_k6()
    if variant == "isolated":
        n = 13
        edges += [(3, 12), (4, 12), (5, 12), (8, 12)]
    elif variant == "paired":
        n = 14
        edges += [(3, 12), (4, 12), (5, 12), (9, 13), (10, 13), (11, 13), (12, 13)]
    elif variant == "empty":
        n = 12
    else:
        raise GraphError(f"unknown fixture variant {variant!r}")
    g = from_edge_list(n, edges)
    m0 = vset((0, 7))
    bad = extension_problems(g, m0)
    if bad:
        raise AssertionError(f"fixture {variant} breaks preconditions: {bad}")
    return g, m0


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [t for t in combinations(range(g.n), 3) if edges_within(g.adj, vset(t)) == 3]


def is_critical_for(g: Graph, cls: CutClass) -> bool:
    """No ``cls`` cut, but deleting any single edge creates one (brute force)."""
    if has_cut(g, cls):
        return False
    for u, v in g.edges():
        edges = [e for e in g.edges() if e != (u, v)]
        if not has_cut(from_edge_list(g.n, edges), cls):
            return False
    return True


# construction scripts ----------------------------------------------------------------

SCRIPT_HELP = """\
One operation per line; '#' starts a comment.  Lines look like
    NAME = OP ARGS...      or just   OP ARGS...   (result named '_')
Ops:
    named TAG                         K5, C6, P4, K2,3, prism, T0, T1, diamond
    apollonian N [CHOICE ...]         3-tree, triangle indices in creation order
    glue HOST GUEST g:h [g:h ...]     identify guest vertex g with host vertex h
    chain PART [JOINT PART ...]       PART in K3|prism, JOINT in edge|triangle
    fixture VARIANT                   isolated | paired | empty (degree-4 gadgets)
    add_edge G U V
    merge G U1 U2
    emit NAME                         result of the script (default: last line)
"""


def run_script(text: str) -> Graph:
    from .graph import add_edge, merge_two

    env: dict[str, Graph] = {}
    result = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name = "_"
        if "=" in line:
            name, line = (t.strip() for t in line.split("=", 1))
        op, *args = line.split() or ["?"]

        def graph(token):
            if token not in env:
                raise GraphError(f"line {lineno}: unknown graph {token!r}")
            return env[token]

        try:
            if op == "emit":
                result = graph(args[0])
                continue
            if op == "named":
                g = named(args[0])
            elif op == "apollonian":
                g = apollonian(int(args[0]), [int(a) for a in args[1:]])
            elif op == "glue":
                mapping = {}
                for pair in args[2:]:
                    a, b = pair.split(":")
                    mapping[int(a)] = int(b)
                g = glue(GlueSpec(graph(args[0]), graph(args[1]), mapping))
            elif op == "chain":
                g = robust_chain(args[0::2], args[1::2])
            elif op == "fixture":
                g = extension_fixture(args[0])[0]
            elif op == "add_edge":
                g = add_edge(graph(args[0]), int(args[1]), int(args[2]))
            elif op == "merge":
                g = merge_two(graph(args[0]), int(args[1]), int(args[2]))
            else:
                raise GraphError(f"unknown op {op!r}")
        except IndexError:
            raise GraphError(f"line {lineno}: missing argument for {op}") from None
        except ValueError as exc:
            if str(exc).startswith("line "):
                raise
            raise GraphError(f"line {lineno}: {exc}") from None
        env[name] = g
        result = g
    if result is None:
        raise GraphError("script produced no graph")
    return result
