"""Seeded random instance generators shared by the property and acceptance suites."""

import random
from itertools import combinations

from vertexcuts.cuts import CutClass, Separation, enumerate_cuts, is_cut_within, extension_problems
from vertexcuts.graph import (
    Graph,
    components_within,
    from_edge_list,
    is_connected,
    members,
    merge_two,
    popcount,
    vset,
)

from conftest import random_connected


def random_separation(rng: random.Random, g: Graph) -> Separation | None:
    """A cut M of g with its components split randomly (non-empty) between L and R."""
    cuts = [c.s for c in enumerate_cuts(g)]
    if not cuts:
        return None
    m = rng.choice(cuts)
    comps = components_within(g.adj, g.full & ~m)
    rng.shuffle(comps)
    k = rng.randint(1, len(comps) - 1)
    left = 0
    for c in comps[:k]:
        left |= c
    return Separation(m, left, g.full & ~m & ~left)


def separation_instances(rng: random.Random, count: int, n_lo=4, n_hi=9):
    out = []
    while len(out) < count:
        g = random_connected(rng, n_lo, n_hi, 0.2, 0.6)
        sep = random_separation(rng, g)
        if sep is not None:
            out.append((g, sep))
    return out


def _subsets(universe: int):
    vs = members(universe)
    for size in range(len(vs) + 1):
        for combo in combinations(vs, size):
            yield vset(combo)


def propagation_instance(rng: random.Random, g: Graph, sep: Separation):
    """Random S that cuts G|_{L+M}, or None."""
    side = sep.left | sep.m
    options = [s for s in _subsets(side) if is_cut_within(g, side, s)]
    return rng.choice(options) if options else None


def glue_instance(rng: random.Random, g: Graph, sep: Separation):
    """Random (S_L, S_R) agreeing on M with |M - S_L| = 2, or None."""
    if popcount(sep.m) < 2:
        return None
    lm, rm = sep.left | sep.m, sep.right | sep.m
    kept = rng.sample(members(sep.m), 2)
    t = sep.m & ~vset(kept)
    ls = [t | x for x in _subsets(sep.left) if is_cut_within(g, lm, t | x)]
    rs = [t | x for x in _subsets(sep.right) if is_cut_within(g, rm, t | x)]
    if not ls or not rs:
        return None
    return rng.choice(ls), rng.choice(rs)


def _dense_block(rng, labels, p):
    return [e for e in combinations(labels, 2) if rng.random() < p]


def extension_instance(rng: random.Random):
    """Graph with degree-4 gadgets over a base that has an independent cut m0.

    Returns (g, m0) satisfying every precondition of the independent-to-forest
    extension, or None when the random draw breaks one (the caller retries).
    """
    a_size, b_size, m_size = rng.randint(3, 6), rng.randint(3, 6), rng.randint(1, 3)
    a = list(range(a_size))
    b = list(range(a_size, a_size + b_size))
    mm = list(range(a_size + b_size, a_size + b_size + m_size))
    edges = _dense_block(rng, a, 0.85) + _dense_block(rng, b, 0.85)
    for v in mm:
        edges += [(x, v) for x in a + b if rng.random() < 0.5]
    n = a_size + b_size + m_size
    base = from_edge_list(n, edges)
    tri = [t for side in (a, b) for t in combinations(side, 3) if all(base.has_edge(x, y) for x, y in combinations(t, 2))]
    tri += [t for t in combinations(range(n), 3) if popcount(vset(t) & vset(mm)) == 1
            and all(base.has_edge(x, y) for x, y in combinations(t, 2))]
    if not tri:
        return None
    gadgets = []
    for _ in range(rng.randint(1, 3)):
        if rng.random() < 0.5:
            t = rng.choice(tri)
            fourth = rng.choice([v for v in range(n) if v not in t])
            gadgets.append(("lone", n, t, fourth))
            n += 1
        else:
            gadgets.append(("pair", n, rng.choice(tri), rng.choice(tri)))
            n += 2
    for g_ in gadgets:
        if g_[0] == "lone":
            _, u, t, fourth = g_
            edges += [(x, u) for x in t] + [(fourth, u)]
        else:
            _, u, t1, t2 = g_
            edges += [(x, u) for x in t1] + [(x, u + 1) for x in t2] + [(u, u + 1)]
    g = from_edge_list(n, edges)
    if not is_connected(g):
        return None
    m0 = vset(mm)
    if extension_problems(g, m0):
        return None
    return g, m0


def extension_instances(rng: random.Random, count: int):
    out = []
    while len(out) < count:
        inst = extension_instance(rng)
        if inst is not None:
            out.append(inst)
    return out


def merge_instance(rng: random.Random):
    """(g, u1, u2, S') with u1, u2 non-adjacent sharing >= 3 neighbours and S' a bipartite cut
    of the merged graph that contains the merged vertex; or None."""
    g = random_connected(rng, 6, 10, 0.3, 0.7)
    pairs = [(x, y) for x, y in combinations(range(g.n), 2)
             if not g.has_edge(x, y) and popcount(g.adj[x] & g.adj[y]) >= 3]
    if not pairs:
        return None
    u1, u2 = rng.choice(pairs)
    h = merge_two(g, u1, u2)
    w = h.n - 1
    cuts = [c.s for c in enumerate_cuts(h, CutClass.BIPARTITE) if c.s >> w & 1]
    if not cuts:
        return None
    return g, u1, u2, rng.choice(cuts)
