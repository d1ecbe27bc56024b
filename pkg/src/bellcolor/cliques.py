"""Clique classification in Bell colouring graphs and forbidden-subgraph scans."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .bell import BellGraph, build_bell
from .canon import is_isomorphic
from .catalog import all_graphs_up_to
from .errors import ClassificationError, CounterexampleFound, NotAClique
from .graph import Graph, complete
from .graph6 import write_graph6


class CliqueTag(str, enum.Enum):
    S_CLIQUE = "S_CLIQUE"
    CYCLIC_T = "CYCLIC_T"
    RADIAL_T = "RADIAL_T"
    SPLIT_TETRA = "SPLIT_TETRA"
    FUSED_TETRA = "FUSED_TETRA"


@dataclass(frozen=True)
class CliqueClass:
    """Classification result.

    For T-triangles ``members`` is reordered so that ``realizers[i]`` is the
    vertex responsible for the edge opposite ``members[i]``; a radial
    triangle lists its hub (the partition holding all three realizers as one
    part) first. For T-tetrahedra ``hub`` is the member outside the cyclic
    face.
    """

    tag: CliqueTag
    members: tuple[int, ...]
    anchor: int | None = None
    realizers: tuple[int, int, int] | None = None
    hub: int | None = None
    doubled_edges: int = 0


def _check_clique(b: BellGraph, ids: Sequence[int]) -> tuple[int, ...]:
    ids = tuple(ids)
    if len(set(ids)) != len(ids) or any(not 0 <= i < b.order for i in ids):
        raise NotAClique(f"bad vertex ids {ids}")
    for i, j in combinations(ids, 2):
        if not b.witnesses_of(i, j):
            raise NotAClique(f"{i} and {j} are not adjacent")
    return ids


def _t_triangle(b: BellGraph, ids: tuple[int, ...]) -> CliqueClass:
    p = [b.vertices[i] for i in ids]
    real = []
    for i in range(3):
        j, l = [x for x in range(3) if x != i]
        w = b.witnesses_of(ids[j], ids[l])
        if len(w) != 1:
            raise ClassificationError(f"T-triangle {ids} has a doubly realized edge")
        real.append(next(iter(w)))
    if len(set(real)) != 3:
        raise ClassificationError(f"T-triangle {ids} realizers not distinct")
    if all(p[i].has_part((real[i],)) for i in range(3)):
        return CliqueClass(CliqueTag.CYCLIC_T, ids, realizers=tuple(real))
    triple = tuple(sorted(real))
    for h in range(3):
        if p[h].has_part(triple):
            order = [h] + [x for x in range(3) if x != h]
            return CliqueClass(
                CliqueTag.RADIAL_T,
                tuple(ids[x] for x in order),
                realizers=tuple(real[x] for x in order),
                hub=ids[h],
            )
    raise ClassificationError(f"T-triangle {ids} is neither cyclic nor radial")


def classify_triangle(b: BellGraph, ids: Sequence[int]) -> CliqueClass:
    ids = _check_clique(b, ids)
    if len(ids) != 3:
        raise NotAClique("a triangle needs exactly three vertices")
    return classify_clique(b, ids)


def classify_clique(b: BellGraph, ids: Sequence[int]) -> CliqueClass:
    ids = _check_clique(b, ids)
    m = len(ids)
    wsets = [b.witnesses_of(i, j) for i, j in combinations(ids, 2)]
    doubled = sum(1 for w in wsets if len(w) == 2)
    if m == 1:
        return CliqueClass(CliqueTag.S_CLIQUE, ids)
    common = frozenset.intersection(*wsets)
    if common:
        if m >= 3 and len(common) != 1:
            raise ClassificationError(f"clique {ids} has several anchors")
        return CliqueClass(CliqueTag.S_CLIQUE, ids, anchor=min(common), doubled_edges=doubled)
    if m == 3:
        return _t_triangle(b, ids)
    if m == 4:
        faces = [classify_clique(b, f) for f in combinations(ids, 3)]
        t_faces = [f for f in faces if f.tag is not CliqueTag.S_CLIQUE]
        cyclic = [f for f in t_faces if f.tag is CliqueTag.CYCLIC_T]
        if len(cyclic) != 1:
            raise ClassificationError(f"tetrahedron {ids} lacks a unique cyclic face")
        hub = next(i for i in ids if i not in cyclic[0].members)
        if len(t_faces) == 4:
            return CliqueClass(CliqueTag.FUSED_TETRA, ids, hub=hub)
        if len(t_faces) == 1:
            return CliqueClass(CliqueTag.SPLIT_TETRA, ids, hub=hub, doubled_edges=doubled)
        raise ClassificationError(f"tetrahedron {ids} has {len(t_faces)} T-faces")
    raise ClassificationError(f"clique of size {m} without an anchor")


# -- clique enumeration ------------------------------------------------------


def enumerate_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with pivoting; sorted output."""
    adj = g.adj
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    if g.n:
        expand([], set(range(g.n)), set())
    return sorted(out)


def iter_cliques(g: Graph, min_size: int = 1, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every clique (not only maximal ones) with size in range, increasing ids."""
    adj = g.adj
    top = g.n if max_size is None else max_size

    def grow(clique: tuple[int, ...], cand: set[int]) -> Iterator[tuple[int, ...]]:
        if len(clique) >= min_size:
            yield clique
        if len(clique) == top:
            return
        for v in sorted(cand):
            yield from grow(clique + (v,), {w for w in cand if w > v} & adj[v])

    for v in range(g.n):
        yield from grow((v,), {w for w in adj[v] if w > v})


def clique_census(b: BellGraph) -> dict:
    g = b.to_simple()
    tri = {"s": 0, "cyclic_t": 0, "radial_t": 0}
    tet = {"s": 0, "split": 0, "fused": 0}
    key = {
        CliqueTag.S_CLIQUE: "s",
        CliqueTag.CYCLIC_T: "cyclic_t",
        CliqueTag.RADIAL_T: "radial_t",
        CliqueTag.SPLIT_TETRA: "split",
        CliqueTag.FUSED_TETRA: "fused",
    }
    for c in iter_cliques(g, 3, 4):
        cls = classify_clique(b, c)
        (tri if len(c) == 3 else tet)[key[cls.tag]] += 1
    larger = 0
    for c in enumerate_maximal_cliques(g):
        if len(c) >= 5:
            if classify_clique(b, c).tag is not CliqueTag.S_CLIQUE:
                raise ClassificationError(f"large clique {c} is not an S-clique")
            larger += 1
    return {"triangles": tri, "tetrahedra": tet, "larger_s_cliques": larger}


# -- induced subgraphs -------------------------------------------------------


def find_induced(h: Graph, g: Graph) -> list[int] | None:
    """An injective map of ``h`` into ``g`` preserving edges and non-edges."""
    if h.n > g.n:
        return None
    # place each vertex next to already-placed neighbours when possible
    placed: list[int] = []
    rest = set(range(h.n))
    while rest:
        best = max(rest, key=lambda v: (sum(1 for u in placed if h.has_edge(u, v)), h.degree(v), -v))
        placed.append(best)
        rest.remove(best)
    hdeg = h.degrees()
    gdeg = g.degrees()
    image: dict[int, int] = {}
    used: set[int] = set()

    def rec(i: int) -> bool:
        if i == len(placed):
            return True
        v = placed[i]
        for x in range(g.n):
            if x in used or gdeg[x] < hdeg[v]:
                continue
            if all(g.has_edge(x, image[u]) == h.has_edge(v, u) for u in placed[:i]):
                image[v] = x
                used.add(x)
                if rec(i + 1):
                    return True
                used.remove(x)
                del image[v]
        return False

    if rec(0):
        return [image[v] for v in range(h.n)]
    return None


def contains_induced(h: Graph, g: Graph) -> bool:
    return find_induced(h, g) is not None


def complete_minus_edge(n: int) -> Graph:
    g = complete(n)
    return Graph(n, g.edges - {(0, 1)})


@dataclass
class K4eReport:
    max_n: int
    cases: int = 0
    four_vertex: list[tuple[str, int]] = field(default_factory=list)
    counterexamples: list[tuple[str, int]] = field(default_factory=list)


def verify_K4e_not_bell(max_n: int) -> K4eReport:
    """Scan every graph of order <= max_n and 1 <= k <= n+1 for ``B_k(G) = K4 - e``."""
    diamond = complete_minus_edge(4)
    report = K4eReport(max_n)
    for g in all_graphs_up_to(max_n):
        for k in range(1, g.n + 2):
            report.cases += 1
            b = build_bell(g, k)
            if b.order != 4:
                continue
            report.four_vertex.append((write_graph6(g), k))
            if is_isomorphic(b.to_simple(), diamond):
                report.counterexamples.append((write_graph6(g), k))
    if report.counterexamples:
        raise CounterexampleFound(f"B_k(G) isomorphic to K4-e for {report.counterexamples}")
    return report
