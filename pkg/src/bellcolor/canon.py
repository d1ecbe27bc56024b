"""Canonical labelling and isomorphism for small graphs and multigraphs.

Equitable-partition refinement followed by an exhaustive individualisation
search. Pruning uses only automorphisms discovered at the leaves (orbit
pruning on the first path, and jumping back when a leaf reproduces the
first or best code), so the result is exact and never relies on hashing.
"""

from __future__ import annotations

from collections import Counter
from typing import Hashable, NamedTuple, Sequence

from .graph import Graph, Multigraph

Adjacency = Sequence[dict[int, int]]


class CanonicalForm(NamedTuple):
    n: int
    colors: tuple
    edges: tuple[tuple[int, int, int], ...]


def _refine(cells: list[list[int]], adj: Adjacency) -> list[list[int]]:
    while True:
        cell_of = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(
                    sorted(Counter((cell_of[w], lab) for w, lab in adj[v].items()).items())
                )
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


class _Orbits:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _Search:
    def __init__(self, n: int, adj: Adjacency, colors: Sequence[Hashable]) -> None:
        self.n = n
        self.adj = adj
        self.colors = list(colors)
        self.edge_list = [
            (u, w, lab) for u in range(n) for w, lab in adj[u].items() if u < w
        ]
        self.first_path: list[int] | None = None
        self.first_code = None
        self.first_lab: list[int] | None = None
        self.best_path: list[int] | None = None
        self.best_code = None
        self.best_lab: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def run(self) -> None:
        by_color: dict = {}
        for v in range(self.n):
            by_color.setdefault(self.colors[v], []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
        self._node(cells, [])

    def _code(self, lab: list[int]) -> tuple:
        return tuple(
            sorted(
                (lab[u], lab[w], c) if lab[u] < lab[w] else (lab[w], lab[u], c)
                for u, w, c in self.edge_list
            )
        )

    def _automorphism(self, lab_a: list[int], lab_b: list[int]) -> None:
        inv_b = [0] * self.n
        for v, p in enumerate(lab_b):
            inv_b[p] = v
        gamma = [inv_b[lab_a[v]] for v in range(self.n)]
        if any(gamma[v] != v for v in range(self.n)):
            self.automorphisms.append(gamma)

    @staticmethod
    def _common_prefix(a: list[int], b: list[int]) -> int:
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k

    def _leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        lab = [0] * self.n
        for pos, cell in enumerate(cells):
            lab[cell[0]] = pos
        code = self._code(lab)
        if self.first_code is None:
            self.first_path, self.first_code, self.first_lab = list(path), code, lab
            self.best_path, self.best_code, self.best_lab = list(path), code, lab
            return None
        if code == self.first_code:
            self._automorphism(self.first_lab, lab)
            return self._common_prefix(path, self.first_path)
        if code == self.best_code:
            self._automorphism(self.best_lab, lab)
            return self._common_prefix(path, self.best_path)
        if code < self.best_code:
            self.best_path, self.best_code, self.best_lab = list(path), code, lab
        return None

    def _pruned(self, v: int, explored: list[int], path: list[int]) -> bool:
        orbits = _Orbits(self.n)
        fixed = False
        for gamma in self.automorphisms:
            if all(gamma[x] == x for x in path):
                fixed = True
                for x in range(self.n):
                    orbits.union(x, gamma[x])
        if not fixed:
            return False
        rv = orbits.find(v)
        return any(orbits.find(c) == rv for c in explored)

    def _node(self, cells: list[list[int]], path: list[int]) -> int | None:
        cells = _refine(cells, self.adj)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            return self._leaf(cells, path)
        depth = len(path)
        on_first = self.first_path is None or self.first_path[:depth] == path
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored and on_first and self._pruned(v, explored, path):
                continue
            rest = [x for x in cells[target] if x != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            r = self._node(child, path + [v])
            explored.append(v)
            if r is not None and r < depth:
                return r
        return None


def _canonical(n: int, adj: Adjacency, colors: Sequence[Hashable]) -> tuple[CanonicalForm, list[int]]:
    s = _Search(n, adj, colors)
    s.run()
    if n == 0:
        return CanonicalForm(0, (), ()), []
    lab = s.best_lab
    inv = [0] * n
    for v, p in enumerate(lab):
        inv[p] = v
    return CanonicalForm(n, tuple(s.colors[inv[p]] for p in range(n)), s.best_code), lab


def _simple_adj(g: Graph) -> list[dict[int, int]]:
    return [{w: 1 for w in g.adj[v]} for v in range(g.n)]


def canonical_labeling(
    g: Graph, colors: Sequence[Hashable] | None = None
) -> tuple[CanonicalForm, list[int]]:
    """Return the canonical form and the labelling ``v -> position``."""
    return _canonical(g.n, _simple_adj(g), colors if colors is not None else [0] * g.n)


def canonical_form(g: Graph, colors: Sequence[Hashable] | None = None) -> CanonicalForm:
    return canonical_labeling(g, colors)[0]


def multigraph_canonical_labeling(m: Multigraph) -> tuple[CanonicalForm, list[int]]:
    return _canonical(m.n, m.adj, [0] * m.n)


def multigraph_canonical_form(m: Multigraph) -> CanonicalForm:
    return multigraph_canonical_labeling(m)[0]


def _map_between(lab_g: list[int], lab_h: list[int]) -> list[int]:
    inv_h = [0] * len(lab_h)
    for v, p in enumerate(lab_h):
        inv_h[p] = v
    return [inv_h[lab_g[v]] for v in range(len(lab_g))]


def _cheap_mismatch(g: Graph, h: Graph) -> bool:
    return (
        g.n != h.n
        or len(g.edges) != len(h.edges)
        or sorted(g.degrees()) != sorted(h.degrees())
    )


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``f`` with ``{f(u), f(v)} in E(h)`` iff ``{u, v} in E(g)``."""
    if _cheap_mismatch(g, h):
        return None
    cg, lg = canonical_labeling(g)
    ch, lh = canonical_labeling(h)
    if cg != ch:
        return None
    return _map_between(lg, lh)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def is_multigraph_isomorphic(a: Multigraph, b: Multigraph) -> bool:
    if a.n != b.n or sorted(a.mult.values()) != sorted(b.mult.values()):
        return False
    return multigraph_canonical_form(a) == multigraph_canonical_form(b)


def find_multigraph_isomorphism(a: Multigraph, b: Multigraph) -> list[int] | None:
    if a.n != b.n:
        return None
    ca, la = multigraph_canonical_labeling(a)
    cb, lb = multigraph_canonical_labeling(b)
    if ca != cb:
        return None
    return _map_between(la, lb)
