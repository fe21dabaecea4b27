from fractions import Fraction

import pytest
import sympy

from vertexcuts.bipstats import (
    BIPARTITE_STEPS,
    BIPARTITE_TARGET,
    FOREST_STEPS,
    FOREST_TARGET,
    best_independent_source,
    bipartite_arithmetic_trials,
    check_inequalities,
    cut_size,
    forest_arithmetic_trials,
    maximal_independent_sets,
    red_edges,
    stats,
)
from vertexcuts.families import apollonian, cycle, named, path, prism, star
from vertexcuts.graph import members, popcount, vset

from conftest import random_graph


def brute_best(g):
    """Full subset scan: maximise f, prefer maximal sets, then the lexicographically least list."""
    indep = [s for s in range(1 << g.n) if all(not g.adj[v] & s for v in members(s))]
    maximal = set(s for s in indep if all(s >> v & 1 or g.adj[v] & s for v in range(g.n)))

    def f(s):
        return sum(1 for a, b in g.edges() if (s >> a & 1) != (s >> b & 1))

    return min(indep, key=lambda s: (-f(s), s not in maximal, members(s))), f


def test_best_examples():
    a = best_independent_source(cycle(4))
    assert members(a) == [0, 2] and cut_size(cycle(4), a) == 4
    a = best_independent_source(named("K4"))
    assert members(a) == [0] and cut_size(named("K4"), a) == 3
    a = best_independent_source(prism())
    assert cut_size(prism(), a) == 6 and popcount(a) == 2


def test_best_matches_brute_force(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 10), rng.uniform(0.1, 0.8))
        a = best_independent_source(g)
        expected, f = brute_best(g)
        assert a == expected
        assert cut_size(g, a) == f(a)
        # every B vertex sees A (maximality); isolated vertices are always in A
        assert all(g.adj[v] & a for v in members(g.full & ~a))


def test_maximal_sets_match_networkx(rng):
    import networkx as nx
    from conftest import to_nx
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 10), rng.uniform(0.1, 0.8))
        ours = sorted(members(s) for s in maximal_independent_sets(g))
        theirs = sorted(sorted(c) for c in nx.find_cliques(nx.complement(to_nx(g))))
        assert ours == theirs


def test_red_edges_examples():
    assert red_edges(cycle(4), vset((0, 2))) == frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
    s = star(5)
    assert red_edges(s, vset((1, 2, 3, 4))) == frozenset(s.edges())
    assert red_edges(path(3), vset((0,))) == frozenset()
    with pytest.raises(ValueError):
        red_edges(cycle(4), vset((0, 1)))


def test_red_edges_definition(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 10), 0.4)
        a = best_independent_source(g)
        red = red_edges(g, a)
        expected = set()
        for u, v in g.edges():
            for x, y in ((u, v), (v, u)):
                if a >> x & 1 and not a >> y & 1 and popcount(g.adj[y] & a) >= 2:
                    expected.add((u, v))
        assert red == expected


def test_stats_examples():
    s = stats(cycle(4), vset((0, 2)))
    assert (s.k, s.m, s.x, s.y, s.z, s.r) == (2, 4, 0, 0, 0, 4)
    g = apollonian(6, [0, 1, 2][:3])
    s = stats(g, best_independent_source(g))
    degs = g.degrees()
    a = members(s.a)
    assert s.k == len(a)
    assert s.m == sum(degs[v] for v in a)
    assert s.x == sum(degs[v] == 4 for v in a) and s.y == sum(degs[v] == 5 for v in a)
    assert s.z == sum(degs[v] == 4 and any(degs[u] == 4 for u in members(g.adj[v])) for v in a)
    assert s.z <= s.x and s.x + s.y <= s.k


def test_check_inequalities_report():
    g = apollonian(6, [0, 1, 2])
    s = stats(g, best_independent_source(g))
    report = {q.name: q for q in check_inequalities(g, s)}
    assert report["threshold"].lhs == 31 * g.m and report["threshold"].rhs == 80 * g.n - 134
    assert report["threshold"].holds  # 3-trees are far above the bipartite threshold
    c4 = check_inequalities(cycle(4), stats(cycle(4), vset((0, 2))))
    assert not all(q.holds for q in c4)  # C4 is no candidate; violations are expected


def _sym(form):
    syms = {v: sympy.Symbol(v) for v in form if v}
    return sum(sympy.Rational(c.numerator, c.denominator) * (syms[v] if v else 1)
               for v, c in ((v, Fraction(c)) for v, c in form.items()))


def test_forest_combination_symbolic():
    total = sum(sympy.Rational(Fraction(w).numerator, Fraction(w).denominator) * _sym(f)
                for _, w, f in FOREST_STEPS)
    assert sympy.expand(total - _sym(FOREST_TARGET)) == 0
    # e - 19n/8 + 3/4 >= 0 contradicts 8e < 19n - 28 for integers
    e, n = sympy.symbols("e n")
    assert sympy.simplify((8 * e - 19 * n + 6) - (8 * e - 19 * n + 28)) == -22


def test_bipartite_combination_symbolic():
    total = sum(w * _sym(f) for _, w, f in BIPARTITE_STEPS)
    assert sympy.expand(total - _sym(BIPARTITE_TARGET)) == 0


def test_arithmetic_trials_small():
    assert forest_arithmetic_trials(2000, seed=3) == []
    assert bipartite_arithmetic_trials(2000, seed=3) == []
