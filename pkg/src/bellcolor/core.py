"""Recover the core of G from its Bell n-colouring multigraph."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .bell import build_bell
from .canon import is_isomorphic, is_multigraph_isomorphic
from .errors import NotABellMultigraph, NotALineGraph
from .graph import Graph, Multigraph, complement, complete, core, line_graph, star

__all__ = [
    "RootRecovery",
    "TriangleRoot",
    "CoreTrace",
    "core",
    "totally_doubled",
    "select_singleton_candidate",
    "max_degree_candidates",
    "neighborhood_line_graph",
    "krausz_root",
    "root_graph",
    "disambiguate_triangle",
    "reconstruct_core",
    "reconstruct_core_traced",
]


class TriangleRoot(str, enum.Enum):
    K3 = "K3"
    K13 = "K13"


@dataclass(frozen=True)
class RootRecovery:
    component: Graph
    vertices: tuple[int, ...]  # ids of the component inside the line graph
    root: Graph
    ambiguous: bool = False


@dataclass
class CoreTrace:
    q_id: int | None = None
    line_graph_order: int = 0
    components: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "q_id": self.q_id,
            "line_graph_order": self.line_graph_order,
            "components": self.components,
        }


def totally_doubled(bm: Multigraph) -> frozenset[int]:
    """Vertices whose incident edges all have multiplicity 2 (isolated ones included)."""
    return frozenset(
        v for v in range(bm.n) if all(m == 2 for m in bm.adj[v].values())
    )


def max_degree_candidates(bm: Multigraph) -> list[int]:
    d = totally_doubled(bm)
    if not d:
        return []
    top = max(len(bm.adj[v]) for v in d)
    return sorted(v for v in d if len(bm.adj[v]) == top)


def select_singleton_candidate(bm: Multigraph) -> int:
    """Lowest-id totally-doubled vertex of maximum (distinct-neighbour) degree."""
    cands = max_degree_candidates(bm)
    if not cands:
        raise NotABellMultigraph("no totally-doubled vertex")
    return cands[0]


def neighborhood_line_graph(bm: Multigraph, q: int) -> tuple[Graph, list[int]]:
    """Induced simple graph on the neighbours of ``q``, plus their ids in ``bm``."""
    nbrs = sorted(bm.adj[q])
    return bm.underlying().induced(nbrs), nbrs


def krausz_root(comp: Graph) -> Graph:
    """A root H with L(H) isomorphic to the connected graph ``comp``.

    Searches for a partition of the edges into cliques with every vertex
    in at most two cliques, trying larger cliques first.
    """
    n = comp.n
    if n == 0:
        raise NotALineGraph("empty component")
    adj = comp.adj
    covered: set[tuple[int, int]] = set()
    count = [0] * n
    cliques: list[tuple[int, ...]] = []

    def free(u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) not in covered

    def open_edges(v: int) -> bool:
        return any(free(v, w) for w in adj[v])

    def candidate_cliques(u: int, v: int) -> list[tuple[int, ...]]:
        pool = sorted(
            w for w in adj[u] & adj[v]
            if free(u, w) and free(v, w) and count[w] < 2
        )
        found: list[tuple[int, ...]] = []

        def grow(chosen: list[int], start: int) -> None:
            found.append((u, v, *chosen))
            for i in range(start, len(pool)):
                w = pool[i]
                if all(w in adj[c] and free(w, c) for c in chosen):
                    chosen.append(w)
                    grow(chosen, i + 1)
                    chosen.pop()

        grow([], 0)
        found.sort(key=len, reverse=True)
        return found

    def search() -> bool:
        edge = next(((u, v) for u, v in sorted(comp.edges) if (u, v) not in covered), None)
        if edge is None:
            return True
        u, v = edge
        if count[u] >= 2 or count[v] >= 2:
            return False
        for c in candidate_cliques(u, v):
            pairs = [(min(a, b), max(a, b)) for a, b in combinations(c, 2)]
            covered.update(pairs)
            for x in c:
                count[x] += 1
            cliques.append(c)
            if all(count[x] < 2 or not open_edges(x) for x in c) and search():
                return True
            cliques.pop()
            for x in c:
                count[x] -= 1
            covered.difference_update(pairs)
        return False

    if not search():
        raise NotALineGraph("no Krausz clique partition exists")
    # root vertices: one per clique, plus a private end for each vertex in a single clique
    ends: list[list[int]] = [[] for _ in range(n)]
    for ci, c in enumerate(cliques):
        for x in c:
            ends[x].append(ci)
    nxt = len(cliques)
    root_edges = []
    for x in range(n):
        e = list(ends[x])
        while len(e) < 2:
            e.append(nxt)
            nxt += 1
        root_edges.append((e[0], e[1]))
    root = Graph.from_edges(nxt, root_edges)
    if len(root.edges) != n or not is_isomorphic(line_graph(root), comp):
        raise NotALineGraph("Krausz partition does not reproduce the component")
    return root


def root_graph(lg: Graph) -> list[RootRecovery]:
    """One recovery per connected component; triangles are flagged ambiguous."""
    out = []
    for comp_vs in lg.components():
        vs = tuple(sorted(comp_vs))
        comp = lg.induced(vs)
        if comp.n == 1:
            out.append(RootRecovery(comp, vs, complete(2)))
        elif comp.n == 3 and len(comp.edges) == 3:
            out.append(RootRecovery(comp, vs, complete(3), ambiguous=True))
        else:
            out.append(RootRecovery(comp, vs, krausz_root(comp)))
    return out


def disambiguate_triangle(bm: Multigraph, q: int, triangle: tuple[int, int, int]) -> TriangleRoot:
    """K3 iff the three vertices share a neighbour other than ``q``."""
    a, b, c = triangle
    common = set(bm.adj[a]) & set(bm.adj[b]) & set(bm.adj[c])
    common.discard(q)
    return TriangleRoot.K3 if common else TriangleRoot.K13


def _join_roots(roots: list[Graph]) -> Graph:
    edges = []
    offset = 0
    for r in roots:
        edges += [(u + offset, v + offset) for u, v in r.edges]
        offset += r.n
    return Graph.from_edges(offset, edges)


def reconstruct_core_traced(bm: Multigraph, q: int | None = None, verify: bool = False) -> tuple[Graph, CoreTrace]:
    trace = CoreTrace()
    if bm.n == 0:
        raise NotABellMultigraph("empty multigraph")
    q = select_singleton_candidate(bm) if q is None else q
    trace.q_id = q
    lg, nbrs = neighborhood_line_graph(bm, q)
    trace.line_graph_order = lg.n
    try:
        recs = root_graph(lg)
    except NotALineGraph as exc:
        raise NotABellMultigraph(f"neighbourhood is not a line graph: {exc}") from exc
    roots = []
    for rec in recs:
        root = rec.root
        resolved = None
        if rec.ambiguous:
            tri = tuple(nbrs[i] for i in rec.vertices)
            resolved = disambiguate_triangle(bm, q, tri)
            root = complete(3) if resolved is TriangleRoot.K3 else star(3)
        roots.append(root)
        trace.components.append(
            {
                "size": rec.component.n,
                "root_order": root.n,
                "ambiguous": rec.ambiguous,
                "resolved": resolved.value if resolved else None,
            }
        )
    result = complement(_join_roots(roots))
    if verify:
        rebuilt = build_bell(result, max(result.n, 1)).to_multigraph()
        if not is_multigraph_isomorphic(rebuilt, bm):
            raise NotABellMultigraph("rebuilt multigraph does not match the input")
    return result, trace


def reconstruct_core(bm: Multigraph, verify: bool = False) -> Graph:
    """Graph isomorphic to the core (G minus universal vertices) of any G with ``bm = B~_n(G)``."""
    return reconstruct_core_traced(bm, verify=verify)[0]
