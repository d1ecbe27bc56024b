from __future__ import annotations

from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from bellcolor.bell import build_bell, build_coloring_graph, degree_stats
from bellcolor.canon import is_isomorphic, is_multigraph_isomorphic
from bellcolor.errors import BadBudget
from bellcolor.graph import Graph, complete, cycle, disjoint_union, empty, path, star
from bellcolor.partitions import format_partition

from conftest import graphs


def _minus(parts, v, k):
    """Multiset of k parts with v removed (empty parts kept as ())."""
    rest = [tuple(x for x in p if x != v) for p in parts]
    rest += [()] * (k - len(parts))
    return Counter(rest)


def _oracle_edges(b) -> dict[tuple[int, int], set[int]]:
    """All-pairs restriction comparison, independent of move generation."""
    out = {}
    n = b.base.n
    for i, j in combinations(range(b.order), 2):
        p, q = b.vertices[i], b.vertices[j]
        w = {v for v in range(n) if _minus(p.parts, v, b.k) == _minus(q.parts, v, b.k)}
        if w:
            out[(i, j)] = w
    return out


def _chromatic_count(n: int, edges: frozenset, k: int) -> int:
    """Proper k-colourings by deletion-contraction."""
    if not edges:
        return k**n
    e = min(edges, key=sorted)
    u, v = sorted(e)
    rest = edges - {e}
    merged = frozenset(frozenset(u if x == v else x for x in f) for f in rest)
    merged = frozenset(f for f in merged if len(f) == 2)
    return _chromatic_count(n, rest, k) - _chromatic_count(n - 1, merged, k)


@given(graphs(0, 5), st.integers(1, 5))
@settings(max_examples=80)
def test_edges_match_all_pairs_oracle(g, k):
    b = build_bell(g, k)
    assert {(e.i, e.j): set(e.witnesses) for e in b.edges} == _oracle_edges(b)


def test_path_four_is_square():
    b = build_bell(path(4), 3)
    assert [format_partition(p) for p in b.vertices] == ["0|13|2", "02|1|3", "02|13", "03|1|2"]
    assert is_isomorphic(b.to_simple(), cycle(4))
    doubled = [e for e in b.edges if len(e.witnesses) == 2]
    # both doubled edges touch the partition {02, 13} with an empty part
    assert len(doubled) == 2 and all(2 in (e.i, e.j) for e in doubled)


def test_claw_is_k4():
    assert is_isomorphic(build_bell(star(3), 3).to_simple(), complete(4))


def test_triangle_plus_vertex_is_k4():
    b = build_bell(disjoint_union(complete(3), empty(1)), 4)
    assert is_isomorphic(b.to_simple(), complete(4))


def test_three_isolated_vertices():
    b = build_bell(empty(3), 3)
    stats = degree_stats(b)
    assert stats.degrees == (4, 4, 4, 3, 3) and stats.edge_count == 9
    assert [format_partition(b.vertices[i]) for i in stats.max_degree_vertices] == ["0|12", "01|2", "02|1"]


def test_multigraph_distinguishes_equal_simple_graphs():
    a = build_bell(star(3), 3).to_multigraph()
    b = build_bell(disjoint_union(complete(3), empty(1)), 4).to_multigraph()
    c = build_bell(empty(3), 2).to_multigraph()
    assert not is_multigraph_isomorphic(a, b)
    assert is_multigraph_isomorphic(a, c)


def test_complete_graph_has_one_partition():
    b = build_bell(complete(4), 4)
    assert b.order == 1 and b.edges == ()


def test_star_is_regular():
    stats = degree_stats(build_bell(star(5), 3))
    assert set(stats.degrees) == {5} and len(stats.degrees) == 16


def test_bad_budget():
    with pytest.raises(BadBudget):
        build_bell(path(3), 0)
    with pytest.raises(BadBudget):
        build_coloring_graph(path(3), 0)


@given(graphs(0, 4), st.integers(1, 3))
@settings(max_examples=60)
def test_colouring_graph_counts_match_deletion_contraction(g, k):
    c = build_coloring_graph(g, k)
    expected = _chromatic_count(g.n, frozenset(frozenset(e) for e in g.edges), k)
    assert c.n == expected


@given(graphs(0, 4), st.integers(1, 3))
@settings(max_examples=60)
def test_colouring_identity(g, k):
    lhs = build_bell(disjoint_union(g, complete(k)), k).to_simple()
    assert is_isomorphic(lhs, build_coloring_graph(g, k))


@given(graphs(1, 5), st.integers(1, 4))
@settings(max_examples=60)
def test_universal_vertex_identity(g, k):
    w = g.n
    h = Graph.from_edges(g.n + 1, list(g.edges) + [(v, w) for v in range(g.n)])
    assert is_isomorphic(build_bell(h, k + 1).to_simple(), build_bell(g, k).to_simple())


@given(graphs(0, 5), st.integers(1, 6))
@settings(max_examples=80)
def test_witness_sets_are_small(g, k):
    assert all(1 <= len(e.witnesses) <= 2 for e in build_bell(g, k).edges)
