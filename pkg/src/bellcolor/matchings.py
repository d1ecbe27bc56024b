"""Matching reconfiguration graphs and Bell realisations of trees and cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .bell import BellGraph, build_bell
from .canon import find_isomorphism, is_isomorphic
from .errors import (
    BadBudget,
    BadCycleLength,
    NotATree,
    NotNearPerfect,
    NotUniquelyUnmatched,
    PreconditionError,
    TrianglePresent,
)
from .graph import (
    Edge,
    Graph,
    complement,
    complete,
    cycle,
    disjoint_union,
    ear_graph,
    empty,
    identify_vertices,
    subdivide_each_edge,
)
from .partitions import StablePartition


@dataclass(frozen=True, order=True)
class Matching:
    n: int
    edges: frozenset[Edge]

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]]) -> Matching:
        es = frozenset(tuple(sorted(e)) for e in edges)
        seen: set[int] = set()
        for u, v in es:
            if u in seen or v in seen or u == v:
                raise PreconditionError(f"edges {sorted(es)} are not a matching")
            seen.update((u, v))
        return cls(n, es)

    def __len__(self) -> int:
        return len(self.edges)

    def matched(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def unmatched(self) -> list[int]:
        m = self.matched()
        return [v for v in range(self.n) if v not in m]

    def without(self, *vertices: int) -> frozenset[Edge]:
        """Edge set of ``G<M> - vertices``."""
        vs = set(vertices)
        return frozenset(e for e in self.edges if not vs & set(e))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def enumerate_matchings(g: Graph, min_size: int = 0) -> list[Matching]:
    """Every matching of ``g`` with at least ``min_size`` edges, sorted by edge list."""
    es = g.sorted_edges()
    out: list[Matching] = []
    chosen: list[Edge] = []

    def rec(i: int, used: int) -> None:
        if len(chosen) + (g.n - bin(used).count("1")) // 2 < min_size:
            return
        if i == len(es):
            if len(chosen) >= min_size:
                out.append(Matching(g.n, frozenset(chosen)))
            return
        u, v = es[i]
        if not (used >> u & 1 or used >> v & 1):
            chosen.append(es[i])
            rec(i + 1, used | 1 << u | 1 << v)
            chosen.pop()
        rec(i + 1, used)

    rec(0, 0)
    out.sort(key=lambda m: m.sorted_edges())
    return out


@dataclass(frozen=True)
class MatchingGraph:
    base: Graph
    k: int
    matchings: tuple[Matching, ...]
    graph: Graph

    def index_of(self, m: Matching) -> int:
        return self.matchings.index(m)

    def unmatched_labels(self) -> list[tuple[int, ...]]:
        return [tuple(m.unmatched()) for m in self.matchings]


def build_matching_graph(g: Graph, k: int) -> MatchingGraph:
    """Matchings of size >= k; adjacent when ``G<M1> - v == G<M2> - v`` for some v."""
    ms = tuple(enumerate_matchings(g, k))
    edges = set()
    for v in range(g.n):
        groups: dict[frozenset[Edge], list[int]] = {}
        for i, m in enumerate(ms):
            groups.setdefault(m.without(v), []).append(i)
        for members in groups.values():
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    edges.add((members[a], members[b]))
    return MatchingGraph(g, k, ms, Graph(len(ms), frozenset(edges)))


def near_perfect_matching_graph(g: Graph) -> MatchingGraph:
    if g.n % 2 == 0:
        raise NotNearPerfect(f"near-perfect matchings need odd order, got {g.n}")
    return build_matching_graph(g, (g.n - 1) // 2)


class NearPerfectAdjacency(NamedTuple):
    adjacent: bool
    witness: int | None
    restriction_equal: bool  # G<M1> - w == G<M2> - w for some w
    edge_swap: bool  # M1 == (M2 - {vw}) + {uw} for some w
    local_agreement: bool  # uw in M1, vw in M2, agreement off {u, v, w}


def _is_near_perfect(g: Graph, m: Matching) -> bool:
    return g.n % 2 == 1 and len(m) == (g.n - 1) // 2 and m.edges <= g.edges


def near_perfect_adjacent(g: Graph, m1: Matching, m2: Matching) -> NearPerfectAdjacency:
    """Evaluate the three adjacency conditions for near-perfect matchings independently."""
    if not (_is_near_perfect(g, m1) and _is_near_perfect(g, m2)):
        raise NotNearPerfect("both matchings must be near-perfect matchings of g")
    if m1 == m2:
        raise NotNearPerfect("matchings must differ")
    (v,) = m1.unmatched()
    (u,) = m2.unmatched()

    def e(a: int, b: int) -> Edge:
        return (a, b) if a < b else (b, a)

    c1 = [w for w in range(g.n) if m1.without(w) == m2.without(w)]
    c2 = [
        w
        for w in range(g.n)
        if w not in (u, v)
        and e(v, w) in m2.edges
        and m1.edges == (m2.edges - {e(v, w)}) | {e(u, w)}
    ]
    c3 = [
        w
        for w in range(g.n)
        if w not in (u, v)
        and e(u, w) in m1.edges
        and e(v, w) in m2.edges
        and m1.without(u, v, w) == m2.without(u, v, w)
    ]
    return NearPerfectAdjacency(bool(c1), min(c1) if c1 else None, bool(c1), bool(c2), bool(c3))


def phi(m: Matching, g: Graph, k: int) -> StablePartition:
    """Matched pairs become parts, unmatched vertices singletons; budget ``n - k``."""
    if g.has_triangle():
        raise TrianglePresent("phi is only a bijection for triangle-free graphs")
    if not m.edges <= g.edges:
        raise PreconditionError("matching uses edges outside g")
    if len(m) < k:
        raise PreconditionError(f"matching has {len(m)} < {k} edges")
    return StablePartition.of(
        [list(e) for e in m.edges] + [[v] for v in m.unmatched()], g.n - k
    )


def verify_phi_isomorphism(g: Graph, k: int) -> bool:
    """Check that ``phi`` maps ``M_k(g)`` onto ``B_{n-k}(complement g)`` edge for edge."""
    if g.has_triangle():
        raise TrianglePresent("phi is only a bijection for triangle-free graphs")
    mg = build_matching_graph(g, k)
    budget = g.n - k
    if budget < 1:
        # no partition into zero parts; no matching with more than n/2 edges
        return not mg.matchings and g.n > 0 or (g.n == 0 and budget == 0 and len(mg.matchings) == 1)
    b = build_bell(complement(g), budget)
    image = [b.index.get(phi(m, g, k)) for m in mg.matchings]
    if None in image or len(set(image)) != b.order or len(image) != b.order:
        return False
    mapped = {tuple(sorted((image[i], image[j]))) for i, j in mg.graph.edges}
    return mapped == set(b.to_simple().edges)


# -- perfect matchings and joins ---------------------------------------------


def iter_perfect_matchings(g: Graph) -> Iterator[Matching]:
    def rec(free: frozenset[int], chosen: list[Edge]) -> Iterator[Matching]:
        if not free:
            yield Matching(g.n, frozenset(chosen))
            return
        v = min(free)
        for w in sorted(g.adj[v] & free):
            chosen.append((v, w))
            yield from rec(free - {v, w}, chosen)
            chosen.pop()

    if g.n % 2 == 0:
        yield from rec(frozenset(range(g.n)), [])


def perfect_matching_count(g: Graph, cap: int | None = None) -> int:
    count = 0
    for _ in iter_perfect_matchings(g):
        count += 1
        if cap is not None and count >= cap:
            break
    return count


def unique_perfect_matching(g: Graph) -> Matching | None:
    """The perfect matching if there is exactly one; ``None`` for zero or several."""
    found = []
    for m in iter_perfect_matchings(g):
        found.append(m)
        if len(found) > 1:
            return None
    return found[0] if found else None


def is_uniquely_unmatched(g: Graph, v: int) -> bool:
    return g.n % 2 == 1 and unique_perfect_matching(g.remove_vertex(v)) is not None


def join_uniquely_unmatched(h1: Graph, v1: int, h2: Graph, v2: int) -> Graph:
    for h, v in ((h1, v1), (h2, v2)):
        if not 0 <= v < h.n or not is_uniquely_unmatched(h, v):
            raise NotUniquelyUnmatched(f"vertex {v} is not uniquely unmatched")
    return identify_vertices(h1, v1, h2, v2)


def _unmatched_index(mg: MatchingGraph, v: int) -> int:
    for i, m in enumerate(mg.matchings):
        if m.unmatched() == [v]:
            return i
    raise NotUniquelyUnmatched(f"no near-perfect matching leaves {v} unmatched")


def verify_join_identity(h1: Graph, v1: int, h2: Graph, v2: int) -> bool:
    """Near-perfect matching graph of the join equals the join of the two matching graphs."""
    joined = join_uniquely_unmatched(h1, v1, h2, v2)
    lhs = near_perfect_matching_graph(joined).graph
    m1 = near_perfect_matching_graph(h1)
    m2 = near_perfect_matching_graph(h2)
    rhs = identify_vertices(m1.graph, _unmatched_index(m1, v1), m2.graph, _unmatched_index(m2, v2))
    return is_isomorphic(lhs, rhs)


def ear_graph_named_matchings(n: int) -> dict[str, Matching]:
    """The n+2 near-perfect matchings of the ear graph, named by their unmatched vertex.

    Keys: ``u``, ``u'``, ``w``, ``w'``, ``i`` and ``i'`` for even i in 2..n-2,
    using the ids of :func:`ear_graph` (u=0, w=1, v_i=1+i).
    """
    g = ear_graph(n)
    u, w = 0, 1

    def v(i: int) -> int:
        return 1 + i

    def pairs(lo: int, hi: int) -> list[tuple[int, int]]:
        # v_lo v_lo+1, v_lo+2 v_lo+3, ..., ending at v_hi
        return [(v(j), v(j + 1)) for j in range(lo, hi, 2)]

    out = {
        "u": pairs(1, n - 2) + [(v(n - 1), w)],
        "u'": [(w, v(1))] + pairs(2, n - 1),
        "w": [(u, v(1))] + pairs(2, n - 1),
        "w'": pairs(1, n - 2) + [(v(n - 1), u)],
    }
    for i in range(2, n - 1, 2):
        out[str(i)] = [(u, v(1))] + pairs(2, i - 1) + pairs(i + 1, n - 2) + [(v(n - 1), w)]
        out[f"{i}'"] = [(w, v(1))] + pairs(2, i - 1) + pairs(i + 1, n - 2) + [(v(n - 1), u)]
    return {name: Matching.of(g.n, es) for name, es in out.items()}


def ear_graph_cycle_order(n: int) -> list[str]:
    """Names of the ear graph's matchings in cyclic order around C_{n+2}."""
    evens = [str(i) for i in range(2, n - 1, 2)]
    primes = [f"{i}'" for i in range(n - 2, 1, -2)]
    return ["u", *evens, "w", "u'", *primes, "w'"]


# -- realisations ------------------------------------------------------------


@dataclass(frozen=True)
class RealizationCertificate:
    """``iso[i]`` is the target vertex assigned to Bell vertex ``i`` of ``B_k(base)``."""

    target: Graph
    base: Graph
    k: int
    iso: tuple[int, ...]

    def check(self, bell: BellGraph | None = None) -> bool:
        b = bell if bell is not None else build_bell(self.base, self.k)
        if b.order != self.target.n or sorted(self.iso) != list(range(self.target.n)):
            return False
        mapped = {
            (min(self.iso[i], self.iso[j]), max(self.iso[i], self.iso[j]))
            for i, j in b.to_simple().edges
        }
        return mapped == set(self.target.edges)


def _certify(target: Graph, base: Graph, k: int, iso: list[int] | None, b: BellGraph) -> RealizationCertificate:
    if iso is None:
        raise PreconditionError("no isomorphism between the Bell graph and the target")
    cert = RealizationCertificate(target, base, k, tuple(iso))
    if not cert.check(b):
        raise PreconditionError("realisation certificate failed verification")
    return cert


def realize_tree(t: Graph) -> RealizationCertificate:
    """``B_n(complement(T_s)) = T`` where ``T_s`` subdivides every edge once."""
    if not t.is_tree() or t.n < 2:
        raise NotATree("realize_tree needs a tree with at least two vertices")
    ts = subdivide_each_edge(t)
    for v in range(t.n):
        # original vertices form the side of T_s that holds its leaves
        if not is_uniquely_unmatched(ts, v):
            raise PreconditionError(f"vertex {v} of the subdivided tree is not uniquely unmatched")
    base = complement(ts)
    b = build_bell(base, t.n)
    iso = []
    for p in b.vertices:
        singles = [part[0] for part in p.parts if len(part) == 1]
        if len(singles) != 1 or singles[0] >= t.n:
            raise PreconditionError(f"partition {p} is not a near-perfect matching of T_s")
        iso.append(singles[0])
    return _certify(t, base, t.n, iso, b)


def cycle_base(m: int) -> tuple[Graph, int]:
    """Base graph and budget whose Bell graph is the cycle ``C_m``."""
    if m < 3:
        raise BadCycleLength(f"cycles need length >= 3, got {m}")
    if m == 3:
        return disjoint_union(complete(3), empty(1)), 3
    if m == 4:
        return disjoint_union(complete(2), empty(2)), 2
    if m % 2:
        return complement(cycle(m)), (m + 1) // 2
    return complement(ear_graph(m - 2)), m // 2


def realize_cycle(m: int) -> RealizationCertificate:
    base, k = cycle_base(m)
    if k < 1:
        raise BadBudget("budget must be positive")
    b = build_bell(base, k)
    target = cycle(m)
    return _certify(target, base, k, find_isomorphism(b.to_simple(), target), b)
