from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import assume, given, settings, strategies as st

from bellcolor.canon import is_isomorphic
from bellcolor.errors import BadCycleLength, NotATree, NotNearPerfect, NotUniquelyUnmatched, TrianglePresent
from bellcolor.graph import (
    Graph,
    complement,
    complete,
    cycle,
    disjoint_union,
    ear_graph,
    empty,
    path,
    star,
    subdivide_each_edge,
)
from bellcolor.matchings import (
    Matching,
    build_matching_graph,
    ear_graph_cycle_order,
    ear_graph_named_matchings,
    enumerate_matchings,
    join_uniquely_unmatched,
    near_perfect_adjacent,
    near_perfect_matching_graph,
    perfect_matching_count,
    phi,
    realize_cycle,
    realize_tree,
    unique_perfect_matching,
    verify_join_identity,
    verify_phi_isomorphism,
)

from conftest import graphs

BANNER = Graph.from_edges(5, [(0, 1), (1, 3), (3, 2), (2, 0), (3, 4)])  # a b c d e


def _oracle_matchings(g: Graph, k: int) -> set[frozenset]:
    out = set()
    es = g.sorted_edges()
    for r in range(k, len(es) + 1):
        for combo in combinations(es, r):
            if len({x for e in combo for x in e}) == 2 * r:
                out.add(frozenset(combo))
    return out


@given(graphs(0, 7), st.integers(0, 3))
def test_enumeration_matches_subset_oracle(g, k):
    ms = enumerate_matchings(g, k)
    assert {m.edges for m in ms} == _oracle_matchings(g, k)
    assert len(ms) == len(set(ms))


@pytest.mark.parametrize("g, k, count", [(cycle(5), 2, 5), (path(3), 1, 2), (BANNER, 2, 4)])
def test_enumeration_examples(g, k, count):
    assert len(enumerate_matchings(g, k)) == count


def test_banner_matchings():
    got = {tuple(m.sorted_edges()) for m in enumerate_matchings(BANNER, 2)}
    assert got == {((0, 1), (2, 3)), ((0, 1), (3, 4)), ((0, 2), (3, 4)), ((0, 2), (1, 3))}


@given(graphs(0, 6), st.integers(0, 3))
@settings(max_examples=80)
def test_matching_graph_matches_pairwise_oracle(g, k):
    mg = build_matching_graph(g, k)
    expected = set()
    for i, j in combinations(range(len(mg.matchings)), 2):
        a, b = mg.matchings[i], mg.matchings[j]
        if any(
            {e for e in a.edges if v not in e} == {e for e in b.edges if v not in e}
            for v in range(g.n)
        ):
            expected.add((i, j))
    assert set(mg.graph.edges) == expected


@pytest.mark.parametrize(
    "g, k, target",
    [(BANNER, 2, path(4)), (cycle(7), 3, cycle(7)), (ear_graph(6), 3, cycle(8))],
)
def test_matching_graph_examples(g, k, target):
    assert is_isomorphic(build_matching_graph(g, k).graph, target)


def test_near_perfect_adjacency_on_c5():
    g = cycle(5)
    ms = {m.unmatched()[0]: m for m in near_perfect_matching_graph(g).matchings}
    r = near_perfect_adjacent(g, ms[0], ms[2])
    assert r.adjacent and r.witness == 1
    assert r.restriction_equal and r.edge_swap and r.local_agreement
    r = near_perfect_adjacent(g, ms[0], ms[1])
    assert not (r.adjacent or r.edge_swap or r.local_agreement)
    with pytest.raises(NotNearPerfect):
        near_perfect_adjacent(g, ms[0], ms[0])
    with pytest.raises(NotNearPerfect):
        near_perfect_adjacent(cycle(4), Matching.of(4, [(0, 1)]), Matching.of(4, [(1, 2)]))


@pytest.mark.parametrize("g", [cycle(5), cycle(7), ear_graph(4), ear_graph(6), subdivide_each_edge(star(3))])
def test_near_perfect_conditions_agree(g):
    mg = near_perfect_matching_graph(g)
    for i, j in combinations(range(len(mg.matchings)), 2):
        r = near_perfect_adjacent(g, mg.matchings[i], mg.matchings[j])
        assert r.restriction_equal == r.edge_swap == r.local_agreement
        assert r.adjacent == ((i, j) in mg.graph.edges)


def test_phi_examples():
    p = phi(Matching.of(5, [(0, 1), (2, 3)]), BANNER, 2)
    assert p.parts == ((0, 1), (2, 3), (4,)) and p.k == 3
    assert phi(Matching.of(3, []), path(3), 0).parts == ((0,), (1,), (2,))
    assert phi(Matching.of(2, [(0, 1)]), path(2), 1).parts == ((0, 1),)
    with pytest.raises(TrianglePresent):
        phi(Matching.of(3, []), complete(3), 0)


@pytest.mark.parametrize("g, k", [(BANNER, 2), (cycle(7), 3), (ear_graph(6), 3), (path(1), 1), (Graph(0), 0)])
def test_phi_isomorphism_examples(g, k):
    assert verify_phi_isomorphism(g, k)


@given(graphs(1, 6), st.integers(0, 3))
@settings(max_examples=60)
def test_phi_isomorphism_random(g, k):
    assume(not g.has_triangle())
    assert verify_phi_isomorphism(g, k)


def test_phi_isomorphism_rejects_triangles():
    with pytest.raises(TrianglePresent):
        verify_phi_isomorphism(complete(3), 1)


def test_unique_perfect_matching():
    assert unique_perfect_matching(path(4)).sorted_edges() == [(0, 1), (2, 3)]
    assert unique_perfect_matching(cycle(4)) is None and perfect_matching_count(cycle(4)) == 2
    assert unique_perfect_matching(path(3)) is None and perfect_matching_count(path(3)) == 0


@given(graphs(0, 8))
def test_perfect_matching_count_matches_oracle(g):
    expected = sum(1 for m in _oracle_matchings(g, 0) if 2 * len(m) == g.n) if g.n % 2 == 0 else 0
    assert perfect_matching_count(g) == expected


def test_joins():
    assert is_isomorphic(join_uniquely_unmatched(path(3), 0, path(3), 0), path(5))
    eight = join_uniquely_unmatched(cycle(5), 0, cycle(5), 0)
    assert eight.n == 9 and sorted(eight.degrees()) == [2] * 8 + [4]
    with pytest.raises(NotUniquelyUnmatched):
        join_uniquely_unmatched(path(3), 1, path(3), 0)


@pytest.mark.parametrize("h1, h2", [(cycle(5), cycle(5)), (cycle(5), cycle(7)), (path(3), cycle(5))])
def test_join_identity(h1, h2):
    assert verify_join_identity(h1, 0, h2, 0)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_ear_graph_labelled_cycle(n):
    named = ear_graph_named_matchings(n)
    mg = near_perfect_matching_graph(ear_graph(n))
    assert len(named) == n + 2 == len(mg.matchings)
    assert set(named.values()) == set(mg.matchings)
    order = [mg.index_of(named[x]) for x in ear_graph_cycle_order(n)]
    ring = {tuple(sorted((order[i - 1], order[i]))) for i in range(len(order))}
    assert ring == set(mg.graph.edges)


@pytest.mark.parametrize("k", range(1, 7))
def test_odd_cycles_are_matching_graphs(k):
    assert is_isomorphic(build_matching_graph(cycle(2 * k + 1), k).graph, cycle(2 * k + 1))


def test_realize_small_trees():
    c = realize_tree(path(2))
    assert is_isomorphic(c.base, complement(path(3))) and c.k == 2 and c.check()
    c = realize_tree(star(3))
    assert c.base.n == 7 and c.k == 4 and c.check()
    c = realize_tree(path(5))
    assert is_isomorphic(c.base, complement(path(9))) and c.k == 5 and c.check()
    with pytest.raises(NotATree):
        realize_tree(cycle(4))


@given(st.integers(2, 7), st.randoms(use_true_random=False))
@settings(max_examples=25, deadline=None)
def test_realize_random_tree(n, rnd):
    t = nx.random_labeled_tree(n, seed=rnd.randint(0, 10**6))
    g = Graph.from_edges(n, list(t.edges))
    assert realize_tree(g).check()


@pytest.mark.parametrize(
    "m, base, k",
    [
        (3, disjoint_union(complete(3), empty(1)), 3),
        (4, disjoint_union(complete(2), empty(2)), 2),
        (7, complement(cycle(7)), 4),
        (8, complement(ear_graph(6)), 4),
    ],
)
def test_realize_cycle_examples(m, base, k):
    c = realize_cycle(m)
    assert c.base == base and c.k == k and c.check()


def test_realize_cycle_rejects_short():
    with pytest.raises(BadCycleLength):
        realize_cycle(2)


def test_certificate_check_detects_tampering():
    c = realize_cycle(5)
    bad = type(c)(c.target, c.base, c.k, (c.iso[1], c.iso[0]) + c.iso[2:])
    assert not bad.check()
