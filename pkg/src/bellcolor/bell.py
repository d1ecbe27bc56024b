"""Bell k-colouring graphs and multigraphs, plus labelled colouring graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import NamedTuple

from .errors import BadBudget
from .graph import Graph, Multigraph
from .partitions import StablePartition, enumerate_stable_partitions, legal_moves


class BellEdge(NamedTuple):
    i: int
    j: int
    witnesses: frozenset[int]


@dataclass(frozen=True)
class BellGraph:
    base: Graph
    k: int
    vertices: tuple[StablePartition, ...]
    edges: tuple[BellEdge, ...]
    index: dict[StablePartition, int] = field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def witness_map(self) -> dict[tuple[int, int], frozenset[int]]:
        return {(e.i, e.j): e.witnesses for e in self.edges}

    def witnesses_of(self, i: int, j: int) -> frozenset[int]:
        if i > j:
            i, j = j, i
        return self._wmap.get((i, j), frozenset())

    @cached_property
    def _wmap(self) -> dict[tuple[int, int], frozenset[int]]:
        return self.witness_map()

    def neighbors(self, i: int) -> frozenset[int]:
        return self.to_simple().adj[i]

    def to_simple(self) -> Graph:
        return self._simple

    @cached_property
    def _simple(self) -> Graph:
        return Graph(self.order, frozenset((e.i, e.j) for e in self.edges))

    def to_multigraph(self) -> Multigraph:
        return Multigraph(self.order, {(e.i, e.j): len(e.witnesses) for e in self.edges})


def build_bell(g: Graph, k: int) -> BellGraph:
    """``B_k(g)`` with every edge annotated by its responsible vertices."""
    if k < 1:
        raise BadBudget(f"budget must be >= 1, got {k}")
    verts = tuple(enumerate_stable_partitions(g, k))
    index = {p: i for i, p in enumerate(verts)}
    acc: dict[tuple[int, int], set[int]] = {}
    for i, p in enumerate(verts):
        for v, q in legal_moves(p, g):
            j = index[q]
            if i < j:
                acc.setdefault((i, j), set()).add(v)
    edges = tuple(BellEdge(i, j, frozenset(w)) for (i, j), w in sorted(acc.items()))
    return BellGraph(g, k, verts, edges, index)


def to_simple(b: BellGraph) -> Graph:
    return b.to_simple()


def to_multigraph(b: BellGraph) -> Multigraph:
    return b.to_multigraph()


def build_coloring_graph(g: Graph, k: int) -> Graph:
    """Labelled colouring graph: proper maps ``V -> {0..k-1}``, one recolouring per edge.

    Vertices are the colourings in lexicographic order.
    """
    if k < 1:
        raise BadBudget(f"colour count must be >= 1, got {k}")
    cols = [
        c
        for c in product(range(k), repeat=g.n)
        if all(c[u] != c[v] for u, v in g.edges)
    ]
    index = {c: i for i, c in enumerate(cols)}
    edges = set()
    for i, c in enumerate(cols):
        for v in range(g.n):
            for col in range(k):
                if col == c[v]:
                    continue
                d = c[:v] + (col,) + c[v + 1 :]
                j = index.get(d)
                if j is not None and i < j:
                    edges.add((i, j))
    return Graph(len(cols), frozenset(edges))


class DegreeStats(NamedTuple):
    degrees: tuple[int, ...]
    edge_count: int
    max_degree_vertices: tuple[int, ...]


def degree_stats(b: BellGraph) -> DegreeStats:
    """Degree sequence (non-increasing) of the simple projection, edge count, argmax ids."""
    g = b.to_simple()
    degs = g.degrees()
    top = max(degs, default=0)
    return DegreeStats(
        tuple(sorted(degs, reverse=True)),
        len(g.edges),
        tuple(i for i, d in enumerate(degs) if d == top),
    )
