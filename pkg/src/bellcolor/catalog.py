"""Exhaustive catalogues of small graphs and free trees."""

from __future__ import annotations

from functools import lru_cache

from .canon import canonical_form
from .graph import Graph


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, by vertex augmentation."""
    if n == 0:
        return (Graph(0),)
    seen = {}
    for g in graphs_of_order(n - 1):
        for mask in range(1 << (n - 1)):
            h = Graph(
                n,
                g.edges | {(v, n - 1) for v in range(n - 1) if mask >> v & 1},
            )
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
    return tuple(seen[k] for k in sorted(seen, key=lambda c: (len(c.edges), c)))


def all_graphs_up_to(n: int) -> list[Graph]:
    return [g for m in range(n + 1) for g in graphs_of_order(m)]


def _rooted_code(t: Graph, root: int, parent: int) -> str:
    kids = sorted(_rooted_code(t, c, root) for c in t.adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def tree_centers(t: Graph) -> list[int]:
    deg = t.degrees()
    leaves = [v for v in range(t.n) if deg[v] <= 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
            deg[v] = 0
        leaves = nxt
    return sorted(leaves)


def tree_code(t: Graph) -> str:
    """Canonical string of a free tree: AHU code from its centre(s)."""
    if t.n == 0:
        return ""
    return min(_rooted_code(t, c, -1) for c in tree_centers(t))


@lru_cache(maxsize=None)
def free_trees(n: int) -> tuple[Graph, ...]:
    """All trees of order ``n`` up to isomorphism, grown leaf by leaf."""
    if n <= 0:
        return ()
    if n == 1:
        return (Graph(1),)
    seen: dict[str, Graph] = {}
    for t in free_trees(n - 1):
        for v in range(n - 1):
            child = Graph(n, t.edges | {(v, n - 1)})
            code = tree_code(child)
            if code not in seen:
                seen[code] = child
    return tuple(seen[c] for c in sorted(seen))
