"""Recover a tree from the simple graph of its Bell 3-colourings."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .bell import build_bell
from .canon import is_isomorphic
from .catalog import free_trees
from .errors import (
    NoBroomSolution,
    NotABellTreeGraph,
    NotATreeResult,
    NotPowerOfTwoOrder,
    PreconditionError,
)
from .graph import Graph, double_broom, star

BRUTE_FORCE_MAX = 5


class TreeTag(str, enum.Enum):
    STAR = "STAR"
    DOUBLE_BROOM = "DOUBLE_BROOM"
    GENERIC = "GENERIC"
    BRUTE_FORCE = "BRUTE_FORCE"


@dataclass(frozen=True)
class TreeClass:
    tag: TreeTag
    n: int
    a: int | None = None
    b: int | None = None
    z: int | None = None

    def trace(self) -> dict:
        out: dict = {"class": self.tag.value, "n": self.n}
        if self.a is not None:
            out["a"], out["b"] = self.a, self.b
        if self.z is not None:
            out["z_id"] = self.z
        return out


def infer_order(b: Graph) -> int:
    """Tree order n from ``|V(B_3(T))| = 2^(n-2)``."""
    size = b.n
    if size < 1 or size & (size - 1):
        raise NotPowerOfTwoOrder(f"{size} vertices is not a power of two")
    return size.bit_length() + 1


def broom_edge_count(a: int, b: int) -> int:
    s = a + b
    return (2 * s + 1) * 2 ** (s - 1) + 2**a + 2**b - 1


def solve_double_broom(edge_count: int, n: int) -> tuple[int, int]:
    """Invert the double-broom edge formula; returns ``(a, b)`` with ``a >= b``."""
    s = n - 3
    if s < 1:
        raise NoBroomSolution(f"order {n} is too small for a double broom")
    for b in range(0, s // 2 + 1):
        if broom_edge_count(s - b, b) == edge_count:
            return s - b, b
    raise NoBroomSolution(f"no double broom of order {n} has {edge_count} edges")


def classify_tree_type(b: Graph) -> TreeClass:
    n = infer_order(b)
    if n <= BRUTE_FORCE_MAX:
        raise PreconditionError(f"degree classification needs n >= 6, got {n}")
    degs = b.degrees()
    ordered = sorted(degs, reverse=True)
    d1, d2, dmin = ordered[0], ordered[1], ordered[-1]
    if d1 == dmin:
        if d1 != n - 1:
            raise NotABellTreeGraph(f"regular of degree {d1}, expected {n - 1}")
        return TreeClass(TreeTag.STAR, n)
    if d1 == d2:
        if d1 != n - 1:
            raise NotABellTreeGraph(f"top degree {d1}, expected {n - 1}")
        try:
            a, bb = solve_double_broom(len(b.edges), n)
        except NoBroomSolution as exc:
            raise NotABellTreeGraph(str(exc)) from exc
        return TreeClass(TreeTag.DOUBLE_BROOM, n, a=a, b=bb)
    if d1 != n:
        raise NotABellTreeGraph(f"unique top degree {d1}, expected {n}")
    return TreeClass(TreeTag.GENERIC, n, z=degs.index(d1))


def generic_adjacency(b: Graph, z: int) -> Graph:
    """Tree on the neighbours of ``z``: adjacent iff no common neighbour besides ``z``.

    Vertex i of the result is the i-th smallest neighbour id of ``z``.
    """
    nbrs = sorted(b.adj[z])
    edges = [
        (i, j)
        for i in range(len(nbrs))
        for j in range(i + 1, len(nbrs))
        if not (b.adj[nbrs[i]] & b.adj[nbrs[j]]) - {z}
    ]
    t = Graph.from_edges(len(nbrs), edges)
    if not t.is_tree():
        raise NotATreeResult("neighbourhood of Z does not yield a tree (need |X|, |Y| >= 3)")
    return t


def _brute_force(b: Graph, n: int) -> Graph:
    for t in free_trees(n):
        if is_isomorphic(build_bell(t, 3).to_simple(), b):
            return t
    raise NotABellTreeGraph(f"no tree of order {n} has this Bell 3-colouring graph")


def reconstruct_tree_traced(b: Graph, verify: bool = False) -> tuple[Graph, TreeClass]:
    n = infer_order(b)
    if n <= BRUTE_FORCE_MAX:
        cls = TreeClass(TreeTag.BRUTE_FORCE, n)
        return _brute_force(b, n), cls
    cls = classify_tree_type(b)
    if cls.tag is TreeTag.STAR:
        t = star(n - 1)
    elif cls.tag is TreeTag.DOUBLE_BROOM:
        t = double_broom(cls.a, cls.b)
    else:
        try:
            t = generic_adjacency(b, cls.z)
        except NotATreeResult as exc:
            raise NotABellTreeGraph(str(exc)) from exc
    if verify and not is_isomorphic(build_bell(t, 3).to_simple(), b):
        raise NotABellTreeGraph("rebuilt Bell graph does not match the input")
    return t, cls


def reconstruct_tree(b: Graph, verify: bool = False) -> Graph:
    return reconstruct_tree_traced(b, verify)[0]
