"""Exhaustive verification suites behind ``bell verify``.

Every suite returns a :class:`VerifySuiteReport`. Independent instances may
be spread over worker processes (capped by ``BELL_THREADS``); results are
gathered in input order so reports are deterministic apart from wall time.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Sequence

from .bell import build_bell, build_coloring_graph
from .canon import is_isomorphic, is_multigraph_isomorphic
from .catalog import all_graphs_up_to, free_trees
from .cliques import (
    CliqueTag,
    classify_clique,
    clique_census,
    complete_minus_edge,
    contains_induced,
    enumerate_maximal_cliques,
    iter_cliques,
)
from .core import (
    max_degree_candidates,
    neighborhood_line_graph,
    reconstruct_core_traced,
    totally_doubled,
    TriangleRoot,
)
from .errors import BellError
from .graph import (
    Graph,
    complement,
    complete,
    core,
    cycle,
    disjoint_union,
    double_broom,
    ear_graph,
    empty,
    line_graph,
    path,
    star,
    universal_vertices,
)
from .graph6 import parse_graph6, write_graph6
from .matchings import (
    build_matching_graph,
    ear_graph_cycle_order,
    ear_graph_named_matchings,
    enumerate_matchings,
    near_perfect_adjacent,
    near_perfect_matching_graph,
    realize_cycle,
    realize_tree,
    verify_join_identity,
    verify_phi_isomorphism,
)
from .partitions import StablePartition, is_double_edge_pattern, witnesses
from .trees import broom_edge_count, reconstruct_tree


@dataclass
class VerifySuiteReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, case: str, expected: object, actual: object) -> None:
        self.failures.append({"case": case, "expected": expected, "actual": actual})

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "wall_time": round(self.wall_time, 3),
        }


Outcome = tuple[int, list[dict]]


def worker_count() -> int:
    raw = os.environ.get("BELL_THREADS")
    cpus = os.cpu_count() or 1
    if raw is None:
        return cpus
    try:
        return max(1, min(int(raw), cpus))
    except ValueError:
        return 1


def _map(fn: Callable, items: Sequence) -> list:
    workers = worker_count()
    if workers <= 1 or len(items) < 16:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _collect(report: VerifySuiteReport, outcomes: Iterable[Outcome]) -> None:
    for n, fails in outcomes:
        report.cases += n
        report.failures.extend(fails)


def _f(case: str, expected: object, actual: object) -> dict:
    return {"case": case, "expected": expected, "actual": actual}


def _budgets(g: Graph, top: int | None = None) -> range:
    hi = g.n + 1 if top is None else min(top, g.n + 1)
    return range(1, hi + 1)


# -- figures -----------------------------------------------------------------


def _figure_checks() -> list[tuple[str, Callable[[], tuple[object, object]]]]:
    def doubled(b):
        return sum(1 for e in b.edges if len(e.witnesses) == 2)

    def iso(g, h):
        return lambda: (True, is_isomorphic(g.to_simple() if hasattr(g, "to_simple") else g, h))

    k13 = star(3)
    k3k1 = disjoint_union(complete(3), empty(1))
    banner = Graph.from_edges(5, [(0, 1), (1, 3), (3, 2), (2, 0), (3, 4)])
    return [
        ("B3(P4) = C4", iso(build_bell(path(4), 3), cycle(4))),
        ("B3(P4) doubled edges", lambda: (2, doubled(build_bell(path(4), 3)))),
        ("B3(K13) = K4", iso(build_bell(k13, 3), complete(4))),
        ("B4(K3+K1) = K4", iso(build_bell(k3k1, 4), complete(4))),
        ("B3(co-K3) = K5-e", iso(build_bell(empty(3), 3), complete_minus_edge(5))),
        (
            "multi B3(K13) != multi B4(K3+K1)",
            lambda: (
                False,
                is_multigraph_isomorphic(
                    build_bell(k13, 3).to_multigraph(), build_bell(k3k1, 4).to_multigraph()
                ),
            ),
        ),
        (
            "multi B3(K13) = multi B2(co-K3)",
            lambda: (
                True,
                is_multigraph_isomorphic(
                    build_bell(k13, 3).to_multigraph(), build_bell(empty(3), 2).to_multigraph()
                ),
            ),
        ),
        (
            "census B3(co-K3)",
            lambda: (
                {
                    "triangles": {"s": 3, "cyclic_t": 1, "radial_t": 3},
                    "tetrahedra": {"s": 0, "split": 1, "fused": 1},
                    "larger_s_cliques": 0,
                },
                clique_census(build_bell(empty(3), 3)),
            ),
        ),
        ("banner matchings of size >= 2", lambda: (4, len(enumerate_matchings(banner, 2)))),
        ("M2(banner) = P4", iso(build_matching_graph(banner, 2).graph, path(4))),
        ("phi on banner, k=2", lambda: (True, verify_phi_isomorphism(banner, 2))),
        ("M3(G6) = C8", iso(near_perfect_matching_graph(ear_graph(6)).graph, cycle(8))),
    ]


def suite_figures(max_n: int | None = None) -> VerifySuiteReport:
    report = VerifySuiteReport("figures")
    for name, check in _figure_checks():
        report.cases += 1
        expected, actual = check()
        if expected != actual:
            report.fail(name, expected, actual)
    return report


# -- cliques -----------------------------------------------------------------


def oracle_clique_tag(b, ids: Sequence[int]) -> str:
    """Classify straight from the definitions, recomputing witnesses from partitions."""
    parts = [b.vertices[i] for i in ids]
    n = b.base.n
    w = {
        (i, j): witnesses(parts[i], parts[j])
        for i, j in combinations(range(len(ids)), 2)
    }
    if len(ids) < 2 or any(all(x in ws for ws in w.values()) for x in range(n)):
        return CliqueTag.S_CLIQUE.value
    if len(ids) == 3:
        for real in permutations(range(n), 3):
            # real[i] must be responsible for the edge opposite member i
            opp = {0: (1, 2), 1: (0, 2), 2: (0, 1)}
            if all(w[opp[i]] == {real[i]} for i in range(3)):
                if all(parts[i].has_part((real[i],)) for i in range(3)):
                    return CliqueTag.CYCLIC_T.value
                if any(p.has_part(real) for p in parts):
                    return CliqueTag.RADIAL_T.value
        return "UNCLASSIFIED"
    if len(ids) == 4:
        t_faces = sum(
            1
            for f in combinations(range(4), 3)
            if oracle_clique_tag(b, [ids[x] for x in f]) != CliqueTag.S_CLIQUE.value
        )
        return {4: CliqueTag.FUSED_TETRA.value, 1: CliqueTag.SPLIT_TETRA.value}.get(t_faces, "UNCLASSIFIED")
    return "UNCLASSIFIED"


def _minus(p: StablePartition, drop: Iterable[int]) -> tuple:
    d = set(drop)
    return tuple(sorted(x for x in (tuple(v for v in part if v not in d) for part in p.parts) if x))


def _clique_oracle_case(arg: tuple[str, int]) -> Outcome:
    g6, k = arg
    b = build_bell(parse_graph6(g6), k)
    simple = b.to_simple()
    cases, fails = 0, []
    for c in iter_cliques(simple, 1):
        cases += 1
        label = f"{g6} k={k} clique={list(c)}"
        try:
            got = classify_clique(b, c)
        except BellError as exc:
            fails.append(_f(label, oracle_clique_tag(b, c), f"error: {exc}"))
            continue
        want = oracle_clique_tag(b, c)
        if got.tag.value != want:
            fails.append(_f(label, want, got.tag.value))
        if got.tag in (CliqueTag.CYCLIC_T, CliqueTag.RADIAL_T):
            real = got.realizers
            base = _minus(b.vertices[c[0]], real)
            common = simple.adj[c[0]] & simple.adj[c[1]] & simple.adj[c[2]]
            for p in sorted(common):
                if _minus(b.vertices[p], real) != base:
                    fails.append(_f(f"{label} fourth={p}", "agrees off realizers", "differs"))
    return cases, fails


def suite_clique_oracle(max_n: int | None = None) -> VerifySuiteReport:
    max_n = 5 if max_n is None else max_n
    report = VerifySuiteReport("clique-oracle")
    args = [(write_graph6(g), k) for g in all_graphs_up_to(max_n) for k in _budgets(g, 5)]
    _collect(report, _map(_clique_oracle_case, args))
    return report


# -- forbidden structures ----------------------------------------------------


def _forbidden_case(arg: tuple[str, int]) -> Outcome:
    g6, k = arg
    b = build_bell(parse_graph6(g6), k)
    simple = b.to_simple()
    label = f"{g6} k={k}"
    fails = []
    if is_isomorphic(simple, complete_minus_edge(4)):
        fails.append(_f(label, "not K4-e", "K4-e"))
    if simple.n >= 6 and contains_induced(complete_minus_edge(6), simple):
        fails.append(_f(label, "no induced K6-e", "found"))
    for c in enumerate_maximal_cliques(simple):
        if len(c) >= 5 and classify_clique(b, c).tag is not CliqueTag.S_CLIQUE:
            fails.append(_f(f"{label} clique={list(c)}", "S_CLIQUE", "T"))
    return 1, fails


def suite_forbidden(max_n: int | None = None) -> VerifySuiteReport:
    max_n = 5 if max_n is None else max_n
    report = VerifySuiteReport("forbidden")
    args = [(write_graph6(g), k) for g in all_graphs_up_to(max_n) for k in _budgets(g)]
    _collect(report, _map(_forbidden_case, args))
    return report


# -- matchings ---------------------------------------------------------------


def _phi_case(g6: str) -> Outcome:
    g = parse_graph6(g6)
    top = math.ceil(g.n / 2)
    ks = [k for k in (top - 1, top) if k >= 0]
    fails = [_f(f"{g6} k={k}", True, False) for k in ks if not verify_phi_isomorphism(g, k)]
    return len(ks), fails


def suite_matching(max_n: int | None = None) -> VerifySuiteReport:
    max_n = 7 if max_n is None else max_n
    report = VerifySuiteReport("matching")
    tf = [write_graph6(g) for g in all_graphs_up_to(max_n) if not g.has_triangle()]
    _collect(report, _map(_phi_case, tf))

    def check(name: str, ok: bool) -> None:
        report.cases += 1
        if not ok:
            report.fail(name, True, False)

    for k in range(1, 7):
        check(f"M{k}(C{2 * k + 1}) = C{2 * k + 1}", is_isomorphic(build_matching_graph(cycle(2 * k + 1), k).graph, cycle(2 * k + 1)))
    for k in range(2, 7):
        mg = build_matching_graph(ear_graph(2 * k), k)
        check(f"M{k}(G{2 * k}) = C{2 * k + 2}", is_isomorphic(mg.graph, cycle(2 * k + 2)))
        named = ear_graph_named_matchings(2 * k)
        order = [mg.index_of(named[x]) for x in ear_graph_cycle_order(2 * k)]
        ring = {tuple(sorted((order[i], order[i - 1]))) for i in range(len(order))}
        check(f"G{2 * k} labelled cycle", set(named.values()) == set(mg.matchings) and ring == set(mg.graph.edges))
    for name, g in [("C5", cycle(5)), ("C7", cycle(7)), ("C9", cycle(9)), ("G4", ear_graph(4)), ("G6", ear_graph(6)), ("G8", ear_graph(8))]:
        mg = near_perfect_matching_graph(g)
        for i, j in combinations(range(len(mg.matchings)), 2):
            m1, m2 = mg.matchings[i], mg.matchings[j]
            r = near_perfect_adjacent(g, m1, m2)
            report.cases += 1
            built = (i, j) in mg.graph.edges
            if not r.restriction_equal == r.edge_swap == r.local_agreement == built:
                report.fail(f"{name} {m1.sorted_edges()} {m2.sorted_edges()}", "conditions agree", r._asdict())
    check("join C5.C5", verify_join_identity(cycle(5), 0, cycle(5), 0))
    check("join C5.C7", verify_join_identity(cycle(5), 0, cycle(7), 0))
    return report


# -- realisations ------------------------------------------------------------


def _tree_realize_case(g6: str) -> Outcome:
    t = parse_graph6(g6)
    try:
        ok = realize_tree(t).check()
    except BellError as exc:
        return 1, [_f(g6, "certificate", f"error: {exc}")]
    return 1, [] if ok else [_f(g6, True, False)]


def _cycle_realize_case(m: int) -> Outcome:
    try:
        ok = realize_cycle(m).check()
    except BellError as exc:
        return 1, [_f(f"C{m}", "certificate", f"error: {exc}")]
    return 1, [] if ok else [_f(f"C{m}", True, False)]


def suite_realization(max_n: int | None = None) -> VerifySuiteReport:
    max_n = 7 if max_n is None else max_n
    report = VerifySuiteReport("realization")
    trees = [write_graph6(t) for n in range(2, max_n + 1) for t in free_trees(n)]
    _collect(report, _map(_tree_realize_case, trees))
    _collect(report, [_cycle_realize_case(m) for m in range(3, 11)])
    return report


# -- tree reconstruction -----------------------------------------------------


def _tree_roundtrip_case(g6: str) -> Outcome:
    t = parse_graph6(g6)
    b = build_bell(t, 3).to_simple()
    fails = []
    if b.n != 2 ** (t.n - 2):
        fails.append(_f(f"{g6} order", 2 ** (t.n - 2), b.n))
    try:
        r = reconstruct_tree(b)
        if not is_isomorphic(r, t):
            fails.append(_f(g6, g6, write_graph6(r)))
    except BellError as exc:
        fails.append(_f(g6, g6, f"error: {exc}"))
    return 1, fails


def suite_tree_roundtrip(max_n: int | None = None) -> VerifySuiteReport:
    max_n = 9 if max_n is None else max_n
    report = VerifySuiteReport("tree-roundtrip")
    trees = [write_graph6(t) for n in range(2, max_n + 1) for t in free_trees(n)]
    _collect(report, _map(_tree_roundtrip_case, trees))
    for s in range(3, 9):
        for bb in range(0, s // 2 + 1):
            a = s - bb
            report.cases += 1
            got = len(build_bell(double_broom(a, bb), 3).edges)
            if got != broom_edge_count(a, bb):
                report.fail(f"broom ({a},{bb}) edges", broom_edge_count(a, bb), got)
    return report


# -- core reconstruction -----------------------------------------------------


def _core_case(g6: str) -> Outcome:
    g = parse_graph6(g6)
    b = build_bell(g, max(g.n, 1))
    bm = b.to_multigraph()
    cases, fails = 1, []
    try:
        got, _ = reconstruct_core_traced(bm)
        if not is_isomorphic(got, core(g)):
            fails.append(_f(g6, write_graph6(core(g)), write_graph6(got)))
    except BellError as exc:
        fails.append(_f(g6, write_graph6(core(g)), f"error: {exc}"))
        return cases, fails
    if g.n <= 5:
        cases += 1
        q = b.index[StablePartition.of([[v] for v in range(g.n)], max(g.n, 1))]
        nb, _ = neighborhood_line_graph(bm, q)
        if not is_isomorphic(nb, line_graph(complement(g))):
            fails.append(_f(f"{g6} N(Q)", "L(co-G)", "differs"))
        for p in totally_doubled(bm):
            cases += 1
            if any(len(part) > 2 for part in b.vertices[p].parts):
                fails.append(_f(f"{g6} D member {b.vertices[p]}", "parts <= 2", "larger part"))
        for q2 in max_degree_candidates(bm):
            cases += 1
            alt, _ = reconstruct_core_traced(bm, q=q2)
            if not is_isomorphic(alt, core(g)):
                fails.append(_f(f"{g6} candidate {q2}", write_graph6(core(g)), write_graph6(alt)))
    return cases, fails


def triangle_instances() -> list[tuple[str, Graph, TriangleRoot]]:
    """Graphs whose complement has a lone K3 or K13 edge component."""
    return [
        ("co-(K3+2K1)", complement(disjoint_union(complete(3), empty(2))), TriangleRoot.K3),
        ("co-(K13+K1)", complement(disjoint_union(star(3), empty(1))), TriangleRoot.K13),
        ("co-(K3+K13)", complement(disjoint_union(complete(3), star(3))), None),
    ]


def suite_core_roundtrip(max_n: int | None = None) -> VerifySuiteReport:
    max_n = 6 if max_n is None else max_n
    report = VerifySuiteReport("core-roundtrip")
    graphs = [write_graph6(g) for g in all_graphs_up_to(max_n)]
    _collect(report, _map(_core_case, graphs))
    for name, g, want in triangle_instances():
        bm = build_bell(g, g.n).to_multigraph()
        got, trace = reconstruct_core_traced(bm)
        report.cases += 1
        if not is_isomorphic(got, core(g)):
            report.fail(name, write_graph6(core(g)), write_graph6(got))
        resolved = sorted(c["resolved"] for c in trace.components if c["ambiguous"])
        expect = sorted(["K13", "K3"]) if want is None else [want.value]
        report.cases += 1
        if resolved != expect:
            report.fail(f"{name} triangle resolution", expect, resolved)
    return report


# -- invariants --------------------------------------------------------------


def _witness_case(arg: tuple[str, int]) -> Outcome:
    g6, k = arg
    b = build_bell(parse_graph6(g6), k)
    fails = []
    for e in b.edges:
        p, q = b.vertices[e.i], b.vertices[e.j]
        label = f"{g6} k={k} {p}~{q}"
        if len(e.witnesses) > 2:
            fails.append(_f(label, "<= 2 witnesses", sorted(e.witnesses)))
        if (len(e.witnesses) == 2) != (is_double_edge_pattern(p, q) is not None):
            fails.append(_f(label, "double iff pattern", sorted(e.witnesses)))
        if witnesses(p, q) != e.witnesses:
            fails.append(_f(label, sorted(witnesses(p, q)), sorted(e.witnesses)))
    return len(b.edges), fails


def folded_cube(m: int) -> Graph:
    """``Q_{m-1}`` plus an edge between every pair of antipodal vertices."""
    d = m - 1
    full = (1 << d) - 1
    edges = {(x, x ^ (1 << i)) for x in range(1 << d) for i in range(d)}
    edges |= {(x, x ^ full) for x in range(1 << d)}
    return Graph.from_edges(1 << d, [e for e in edges if e[0] < e[1]])


def suite_invariants(max_n: int | None = None) -> VerifySuiteReport:
    max_n = 5 if max_n is None else max_n
    report = VerifySuiteReport("invariants")
    graphs = all_graphs_up_to(max_n)
    args = [(write_graph6(g), k) for g in graphs for k in _budgets(g)]
    _collect(report, _map(_witness_case, args))
    for m in range(1, 9):
        bm = build_bell(empty(m), 2).to_multigraph()
        s = bm.underlying()
        report.cases += 1
        # multiplicity-weighted: for m = 2 the antipodal and cube edges coincide
        degs = {sum(bm.adj[v].values()) for v in range(bm.n)}
        if s.n != 2 ** (m - 1) or (m > 1 and degs != {m}):
            report.fail(f"B2(co-K{m}) shape", (2 ** (m - 1), m), (s.n, sorted(degs)))
        if m >= 3 and not is_isomorphic(s, folded_cube(m)):
            report.fail(f"B2(co-K{m}) folded cube", True, False)
    for g in graphs:
        for w in universal_vertices(g)[:1]:
            for k in range(1, 5):
                report.cases += 1
                lhs = build_bell(g, k + 1).to_simple()
                rhs = build_bell(g.remove_vertex(w), k).to_simple()
                if not is_isomorphic(lhs, rhs):
                    report.fail(f"{write_graph6(g)} universal k={k}", True, False)
    for g in (h for h in graphs if h.n <= 4):
        for k in range(1, 4):
            report.cases += 1
            if not is_isomorphic(build_bell(disjoint_union(g, complete(k)), k).to_simple(), build_coloring_graph(g, k)):
                report.fail(f"{write_graph6(g)} colouring k={k}", True, False)
    for n in range(6, 10):
        for t in free_trees(n):
            b = build_bell(t, 3)
            degs = b.to_simple().degrees()
            report.cases += 1
            if max(degs) > n:
                report.fail(f"{write_graph6(t)} max degree", n, max(degs))
            if any(len(p.parts) == 3 and d > n - 1 for p, d in zip(b.vertices, degs)):
                report.fail(f"{write_graph6(t)} full partitions", n - 1, max(degs))
    return report


SUITES: dict[str, Callable[[int | None], VerifySuiteReport]] = {
    "figures": suite_figures,
    "clique-oracle": suite_clique_oracle,
    "forbidden": suite_forbidden,
    "matching": suite_matching,
    "realization": suite_realization,
    "tree-roundtrip": suite_tree_roundtrip,
    "core-roundtrip": suite_core_roundtrip,
    "invariants": suite_invariants,
}


def run_suite(name: str, max_n: int | None = None) -> VerifySuiteReport:
    start = time.perf_counter()
    report = SUITES[name](max_n)
    report.wall_time = time.perf_counter() - start
    return report
