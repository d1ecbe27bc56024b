"""Acceptance criteria; each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or as a script.
"""

from __future__ import annotations

import time

import pytest

from bellcolor.bell import build_bell
from bellcolor.canon import is_isomorphic, is_multigraph_isomorphic
from bellcolor.cliques import clique_census, complete_minus_edge
from bellcolor.graph import complete, cycle, disjoint_union, empty, path, star
from bellcolor.suites import run_suite

from conftest import ACCEPTANCE_LINES


def _record(number: int, title: str, ok: bool, seconds: float, budget: float, detail: str = "") -> None:
    within = seconds <= budget
    status = "PASS" if ok and within else "FAIL"
    line = f"{status} criterion {number}: {title} ({seconds:.2f}s / budget {budget:.0f}s){' ' + detail if detail else ''}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, detail
    assert within, f"over time budget: {seconds:.1f}s > {budget}s"


def _suites(*runs: tuple[str, int | None]) -> tuple[bool, int, str]:
    fails, cases = [], 0
    for name, max_n in runs:
        r = run_suite(name, max_n)
        cases += r.cases
        fails += r.failures
    return not fails, cases, f"{cases} cases, {len(fails)} failures {fails[:2] if fails else ''}".strip()


def test_criterion_1_figure_fixtures():
    start = time.perf_counter()
    k13 = star(3)
    k3k1 = disjoint_union(complete(3), empty(1))
    checks = {
        "B3(P4)=C4": is_isomorphic(build_bell(path(4), 3).to_simple(), cycle(4)),
        "B3(K13)=K4": is_isomorphic(build_bell(k13, 3).to_simple(), complete(4)),
        "B4(K3+K1)=K4": is_isomorphic(build_bell(k3k1, 4).to_simple(), complete(4)),
        "B3(coK3)=K5-e": is_isomorphic(build_bell(empty(3), 3).to_simple(), complete_minus_edge(5)),
        "multi B3(K13)!=B4(K3+K1)": not is_multigraph_isomorphic(
            build_bell(k13, 3).to_multigraph(), build_bell(k3k1, 4).to_multigraph()
        ),
        "multi B3(K13)=B2(coK3)": is_multigraph_isomorphic(
            build_bell(k13, 3).to_multigraph(), build_bell(empty(3), 2).to_multigraph()
        ),
    }
    bad = [k for k, v in checks.items() if not v]
    _record(1, "figure fixtures", not bad, time.perf_counter() - start, 1, f"failed: {bad}" if bad else "")


def test_criterion_2_clique_census_and_oracle():
    start = time.perf_counter()
    census = clique_census(build_bell(empty(3), 3))
    census_ok = census == {
        "triangles": {"s": 3, "cyclic_t": 1, "radial_t": 3},
        "tetrahedra": {"s": 0, "split": 1, "fused": 1},
        "larger_s_cliques": 0,
    }
    ok, _, detail = _suites(("clique-oracle", 5))
    _record(2, "clique census + brute-force oracle, |V|<=5, k<=5", census_ok and ok, time.perf_counter() - start, 300, detail)


def test_criterion_3_forbidden_structures():
    start = time.perf_counter()
    ok, _, detail = _suites(("forbidden", 5))
    _record(3, "no K4-e, no induced K6-e, large cliques are S (order<=5)", ok, time.perf_counter() - start, 600, detail)


def test_criterion_4_matching_suite():
    start = time.perf_counter()
    ok, _, detail = _suites(("matching", 7))
    _record(4, "phi, odd cycles, ear graphs, three conditions, joins", ok, time.perf_counter() - start, 120, detail)


def test_criterion_5_realizations():
    start = time.perf_counter()
    ok, cases, detail = _suites(("realization", 7))
    _record(5, "trees of order <=7 and cycles 3..10 realized", ok and cases == 1 + 1 + 2 + 3 + 6 + 11 + 8, time.perf_counter() - start, 300, detail)


def test_criterion_6_tree_roundtrip():
    start = time.perf_counter()
    ok, _, detail = _suites(("tree-roundtrip", 9))
    _record(6, "tree round-trip n<=9, |V|=2^(n-2), broom formula a+b<=8", ok, time.perf_counter() - start, 600, detail)


def test_criterion_7_core_roundtrip():
    start = time.perf_counter()
    ok, _, detail = _suites(("core-roundtrip", 6))
    _record(7, "core round-trip order<=6, neighbourhood=L(coG), K3/K13", ok, time.perf_counter() - start, 900, detail)


def test_criterion_8_property_invariants():
    start = time.perf_counter()
    ok, _, detail = _suites(("invariants", 5))
    _record(8, "witness bounds, double pattern, folded cubes, universal vertex", ok, time.perf_counter() - start, 600, detail)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
