"""Simple graphs, multigraphs, standard families and graph operations.

Vertices are always the dense ids ``0..n-1``; edges are stored as sorted
pairs ``(i, j)`` with ``i < j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import BadFamilyParams, IndexOutOfRange

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("order must be non-negative")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexOutOfRange(f"edge {(u, v)} out of range for order {self.n}")
            clean.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        return tuple(sum(1 << w for w in s) for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled in the order given."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(
            len(vs),
            frozenset(
                _norm(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
            ),
        )

    def remove_vertex(self, v: int) -> Graph:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} out of range for order {self.n}")
        return self.induced(w for w in range(self.n) if w != v)

    def relabel(self, perm: Mapping[int, int] | list[int]) -> Graph:
        """Apply ``v -> perm[v]``; ``perm`` must be a bijection on ``0..n-1``."""
        return Graph(self.n, frozenset(_norm(perm[u], perm[v]) for u, v in self.edges))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1 and self.is_connected()

    def has_triangle(self) -> bool:
        adj = self.adj
        for u, v in self.edges:
            if adj[u] & adj[v]:
                return True
        return False

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


class Multigraph:
    """Loopless multigraph with positive integer edge multiplicities."""

    def __init__(self, n: int, mult: Mapping[Edge, int] | Iterable[tuple[Edge, int]] = ()):
        items: dict[Edge, int] = {}
        pairs = mult.items() if isinstance(mult, Mapping) else mult
        for (u, v), m in pairs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge {(u, v)} out of range for order {n}")
            if int(m) < 1:
                raise ValueError(f"multiplicity must be positive, got {m}")
            key = _norm(u, v)
            items[key] = items.get(key, 0) + int(m)
        self.n = n
        self._items = tuple(sorted(items.items()))

    @property
    def mult(self) -> dict[Edge, int]:
        return dict(self._items)

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get(_norm(u, v), 0)

    @cached_property
    def adj(self) -> tuple[dict[int, int], ...]:
        nbrs: list[dict[int, int]] = [{} for _ in range(self.n)]
        for (u, v), m in self._items:
            nbrs[u][v] = m
            nbrs[v][u] = m
        return tuple(nbrs)

    def underlying(self) -> Graph:
        return Graph(self.n, frozenset(e for e, _ in self._items))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Multigraph)
            and self.n == other.n
            and self._items == other._items
        )

    def __hash__(self) -> int:
        return hash((self.n, self._items))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, mult={dict(self._items)})"


# -- operations -------------------------------------------------------------


def complement(g: Graph) -> Graph:
    return Graph(
        g.n,
        frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges),
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    s = g.n
    return Graph(g.n + h.n, g.edges | {(u + s, v + s) for u, v in h.edges})


def identify_vertices(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Glue ``u`` of ``g`` to ``v`` of ``h``.

    The merged vertex keeps id ``u``; the remaining vertices of ``h`` follow
    those of ``g`` in their original order.
    """
    if not 0 <= u < g.n:
        raise IndexOutOfRange(f"vertex {u} out of range for order {g.n}")
    if not 0 <= v < h.n:
        raise IndexOutOfRange(f"vertex {v} out of range for order {h.n}")
    new_id = {}
    nxt = g.n
    for x in range(h.n):
        if x == v:
            new_id[x] = u
        else:
            new_id[x] = nxt
            nxt += 1
    edges = set(g.edges)
    edges.update(_norm(new_id[a], new_id[b]) for a, b in h.edges)
    return Graph(g.n + h.n - 1, frozenset(edges))


def subdivide_each_edge(t: Graph) -> Graph:
    """Replace every edge by a path of length two.

    Original vertices keep their ids; the vertex subdividing the ``i``-th
    edge in sorted order gets id ``n + i``.
    """
    edges = set()
    for i, (u, v) in enumerate(t.sorted_edges()):
        x = t.n + i
        edges.add((u, x))
        edges.add((v, x))
    return Graph(t.n + len(t.edges), frozenset(edges))


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in sorted order."""
    es = g.sorted_edges()
    out = set()
    for i, j in combinations(range(len(es)), 2):
        if set(es[i]) & set(es[j]):
            out.add((i, j))
    return Graph(len(es), frozenset(out))


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == g.n - 1]


def core(g: Graph) -> Graph:
    """Induced subgraph on the non-universal vertices."""
    uni = set(universal_vertices(g))
    return g.induced(v for v in range(g.n) if v not in uni)


# -- families ---------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 0:
        raise BadFamilyParams("path order must be >= 0")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadFamilyParams("cycle order must be >= 3")
    return Graph(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))


def star(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    if m < 0:
        raise BadFamilyParams("star needs m >= 0")
    return Graph(m + 1, frozenset((0, i) for i in range(1, m + 1)))


def complete(n: int) -> Graph:
    if n < 0:
        raise BadFamilyParams("order must be >= 0")
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty(n: int) -> Graph:
    if n < 0:
        raise BadFamilyParams("order must be >= 0")
    return Graph(n)


def double_broom(a: int, b: int) -> Graph:
    """Path 0-1-2 with ``a`` leaves on 0 and ``b`` leaves on 2 (order a+b+3)."""
    if not (a >= b >= 0):
        raise BadFamilyParams(f"double broom needs a >= b >= 0, got ({a}, {b})")
    edges = [(0, 1), (1, 2)]
    nxt = 3
    for _ in range(a):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(b):
        edges.append((2, nxt))
        nxt += 1
    return Graph.from_edges(nxt, edges)


def ear_graph(n: int) -> Graph:
    """Even path-with-ears graph on ``n+1`` vertices.

    Ids: u=0, w=1, v_i=1+i for i=1..n-1. Edges v_i v_{i+1} (1<=i<=n-2) and
    u v_1, w v_1, u v_{n-1}, w v_{n-1}.
    """
    if n < 4 or n % 2:
        raise BadFamilyParams(f"ear graph needs even n >= 4, got {n}")
    u, w = 0, 1

    def vi(i: int) -> int:
        return 1 + i

    edges = [(vi(i), vi(i + 1)) for i in range(1, n - 1)]
    edges += [(u, vi(1)), (w, vi(1)), (u, vi(n - 1)), (w, vi(n - 1))]
    return Graph.from_edges(n + 1, edges)


def family(name: str, *params: int) -> Graph:
    builders = {
        "path": path,
        "cycle": cycle,
        "star": star,
        "complete": complete,
        "empty": empty,
        "double_broom": double_broom,
        "ear_graph": ear_graph,
    }
    try:
        build = builders[name]
    except KeyError:
        raise BadFamilyParams(f"unknown family {name!r}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise BadFamilyParams(f"{name}: {exc}") from None
