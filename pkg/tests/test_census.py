from collections import Counter
from itertools import combinations

import networkx as nx
import pytest

from vertexcuts.census import (
    canonical_form,
    census,
    connected_classes,
    enumerate_connected,
    enumerate_labeled,
    max_edges_for,
    read_graph6,
    search_counterexample,
    verify_theorem,
)
from vertexcuts.cuts import CONJECTURE, FOREST, CutClass, Theorem
from vertexcuts.families import named
from vertexcuts.graph import from_edge_list, is_connected, parse_graph6, to_graph6

from conftest import to_nx


def brute_connected(n, max_edges):
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(pairs)):
        es = [e for i, e in enumerate(pairs) if mask >> i & 1]
        if len(es) <= max_edges:
            g = from_edge_list(n, es)
            if is_connected(g) and not (n >= 2 and not es):
                out.append(g)
    return out


def test_enumeration_examples():
    assert len(list(enumerate_connected(4, 6))) == 38
    got = list(enumerate_connected(3, 3))
    assert len(got) == 4 and sum(g.m == 3 for g in got) == 1
    assert list(enumerate_connected(2, 0)) == []
    assert len(list(enumerate_connected(1, 0))) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    for max_edges in range(n * (n - 1) // 2 + 1):
        ours = {to_graph6(g) for g in enumerate_connected(n, max_edges)}
        theirs = {to_graph6(g) for g in brute_connected(n, max_edges)}
        assert ours == theirs


def test_labeled_counts_n6():
    # connected labeled graphs: 1, 1, 4, 38, 728, 26704 (OEIS A001187)
    assert [sum(1 for _ in enumerate_connected(n, 15)) for n in range(1, 7)] == [1, 1, 4, 38, 728, 26704]


def test_enumeration_order_and_checkpoint():
    items = list(enumerate_labeled(5, 6))
    masks = [m for m, _ in items]
    assert masks == sorted(masks)
    cut = masks[len(masks) // 3]
    assert [m for m, _ in enumerate_labeled(5, 6, start_mask=cut)] == [m for m in masks if m >= cut]


def test_isomorphism_classes_match_atlas():
    atlas = Counter(len(h) for h in nx.graph_atlas_g() if len(h) and nx.is_connected(h))
    for n in range(1, 8):
        classes = list(enumerate_connected(n, 21, iso_reject=True))
        assert len(classes) == atlas[n]
    for n in range(1, 6):
        hashes = [nx.weisfeiler_lehman_graph_hash(to_nx(g)) for g in connected_classes(n, 10)]
        labeled = {to_graph6(canonical_form(g)) for g in enumerate_connected(n, 10)}
        assert len(labeled) == len(hashes)


def test_canonical_form_invariant(rng):
    for _ in range(100):
        n = rng.randint(1, 7)
        g = from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        perm = list(range(n))
        rng.shuffle(perm)
        h = from_edge_list(n, [(perm[a], perm[b]) for a, b in g.edges()])
        assert canonical_form(g) == canonical_form(h)
        assert nx.is_isomorphic(to_nx(canonical_form(g)), to_nx(g))


def test_enumerator_limits():
    with pytest.raises(ValueError):
        list(enumerate_connected(9, 10))
    with pytest.raises(ValueError):
        list(enumerate_connected(8, 10, iso_reject=True))
    with pytest.raises(ValueError):
        census(Theorem.FOREST, 8, 8)


def test_verify_examples():
    assert census(Theorem.FOREST, 5, 5).violations == []
    assert census(Theorem.INDEPENDENT, 6, 6).violations == []
    r = census(Theorem.BIPARTITE, 7, 7, iso_reject=True)
    assert r.ok and r.totals.under_threshold > 0


def test_iso_and_labeled_agree_on_violations():
    # independent cuts gated at q_{3,6} > 0 fail on many graphs: compare up to isomorphism
    def classes(report):
        return {to_graph6(canonical_form(parse_graph6(g6))) for g6, _ in report.violations}

    for n in range(4, 7):
        lab = census(Theorem.INDEPENDENT, n, n, params=CONJECTURE)
        iso = census(Theorem.INDEPENDENT, n, n, iso_reject=True, params=CONJECTURE)
        assert lab.violations and classes(lab) == classes(iso)
        assert len(iso.violations) == len(classes(iso))


def test_report_determinism_across_jobs():
    a = census(Theorem.INDEPENDENT, 4, 6, params=CONJECTURE)
    b = census(Theorem.INDEPENDENT, 4, 6, params=CONJECTURE, jobs=2)
    assert a.to_json_lines(timing=False) == b.to_json_lines(timing=False)
    assert a.to_text(timing=False) == b.to_text(timing=False)


def test_skip_accounting():
    stream = [named("K3"), from_edge_list(5, [(0, 1), (2, 3)]), named("C5"), named("K4"), named("P5")]
    r = verify_theorem(stream, Theorem.FOREST)
    t = r.totals
    assert t.scanned == 5 and t.skipped == 2 and t.scanned == t.verified + t.skipped
    assert r.skip_reasons == {"fewer than 4 vertices": 1, "disconnected": 1}
    for c in r.per_n.values():
        assert c.scanned == c.verified + c.skipped
    assert r.ok


def test_violation_reported_as_graph6():
    # wheel: every cut holds the hub, which sees everything, so no independent cut
    wheel = from_edge_list(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])
    r = verify_theorem([wheel, named("K4"), named("prism")], Theorem.INDEPENDENT, params=CONJECTURE)
    assert [g6 for g6, _ in r.violations] == sorted([to_graph6(wheel).decode(),
                                                      to_graph6(named("prism")).decode()])
    assert r.per_n[4].under_threshold == 0  # q(K4) = 0 is not above zero
    recs = r.to_records(timing=False)
    assert sum(1 for x in recs if x.get("record") == "violation") == 2


def test_max_edges_for():
    assert max_edges_for(Theorem.INDEPENDENT, 7) == 10
    assert max_edges_for(Theorem.FOREST, 7) == 13   # 8e < 105
    assert max_edges_for(Theorem.BIPARTITE, 7) == 13  # 31e < 426
    assert max_edges_for(Theorem.CONJECTURE, 7) == 14


def test_search_counterexample_small():
    assert search_counterexample([named("K5"), named("K7")], CutClass.FOREST, CONJECTURE) == []
    assert search_counterexample(enumerate_connected(7, 13, iso_reject=True), CutClass.FOREST, FOREST) == []


def test_read_graph6_skips_blank_lines():
    assert [g.n for g in read_graph6(["C~", "", "Dhc\n"])] == [4, 5]
