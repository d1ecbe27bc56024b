from __future__ import annotations

import pytest

from bellcolor.bell import build_bell
from bellcolor.graph import empty, star
from bellcolor.suites import (
    SUITES,
    VerifySuiteReport,
    folded_cube,
    oracle_clique_tag,
    run_suite,
    worker_count,
)


@pytest.mark.parametrize(
    "name, max_n",
    [
        ("figures", None),
        ("clique-oracle", 3),
        ("forbidden", 3),
        ("matching", 4),
        ("realization", 4),
        ("tree-roundtrip", 6),
        ("core-roundtrip", 4),
        ("invariants", 3),
    ],
)
def test_small_suites_pass(name, max_n):
    report = run_suite(name, max_n)
    assert report.ok, report.failures[:3]
    assert report.cases > 0 and report.wall_time >= 0


def test_suite_registry():
    assert sorted(SUITES) == [
        "clique-oracle",
        "core-roundtrip",
        "figures",
        "forbidden",
        "invariants",
        "matching",
        "realization",
        "tree-roundtrip",
    ]


def test_report_dict():
    r = VerifySuiteReport("x", cases=2)
    assert r.ok
    r.fail("c", 1, 2)
    assert not r.ok and r.as_dict()["failures"] == [{"case": "c", "expected": 1, "actual": 2}]


def test_worker_count(monkeypatch):
    monkeypatch.setenv("BELL_THREADS", "1")
    assert worker_count() == 1
    monkeypatch.setenv("BELL_THREADS", "junk")
    assert worker_count() == 1
    monkeypatch.delenv("BELL_THREADS")
    assert worker_count() >= 1


def test_parallel_and_serial_agree(monkeypatch):
    monkeypatch.setenv("BELL_THREADS", "1")
    serial = run_suite("clique-oracle", 4)
    monkeypatch.setenv("BELL_THREADS", "2")
    parallel = run_suite("clique-oracle", 4)
    assert serial.cases == parallel.cases and serial.failures == parallel.failures


def test_oracle_on_claw():
    b = build_bell(star(3), 3)
    tags = sorted(oracle_clique_tag(b, c) for c in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    assert tags == ["CYCLIC_T", "RADIAL_T", "RADIAL_T", "RADIAL_T"]


def test_folded_cube():
    g = folded_cube(4)
    assert g.n == 8 and set(g.degrees()) == {4}
    assert build_bell(empty(4), 2).order == 8
