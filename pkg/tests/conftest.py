import random
from itertools import combinations

import networkx as nx
import pytest

from vertexcuts.graph import Graph, from_edge_list, is_connected


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected(rng: random.Random, n_lo: int, n_hi: int, p_lo=0.25, p_hi=0.8) -> Graph:
    while True:
        g = random_graph(rng, rng.randint(n_lo, n_hi), rng.uniform(p_lo, p_hi))
        if is_connected(g):
            return g


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
