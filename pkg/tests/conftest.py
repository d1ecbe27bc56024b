from __future__ import annotations

import networkx as nx
from hypothesis import settings, strategies as st

from bellcolor.graph import Graph

# exhaustive oracles are slow on dense inputs; timing is not under test
settings.register_profile("bell", deadline=None)
settings.load_profile("bell")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 6) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_perm(draw, max_n: int = 7) -> tuple[Graph, list[int]]:
    g = draw(graphs(0, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
