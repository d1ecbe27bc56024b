from __future__ import annotations

import json
import subprocess
import sys

import pytest

from bellcolor import io
from bellcolor.bell import build_bell
from bellcolor.cli import main
from bellcolor.graph import complement, cycle, double_broom, empty, path, star
from bellcolor.graph6 import write_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, json.loads(out.out) if out.out.strip() else None, out.err


def test_build_path(capsys):
    code, obj, _ = run(capsys, "build", "-g", write_graph6(path(4)), "-k", "3")
    assert code == 0 and len(obj["vertices"]) == 4 and len(obj["edges"]) == 4
    assert sum(1 for e in obj["edges"] if len(e[2]) == 2) == 2


def test_build_sizes(capsys):
    _, obj, _ = run(capsys, "build", "-g", "B?", "-k", "3")
    assert len(obj["vertices"]) == 5 and len(obj["edges"]) == 9
    _, obj, _ = run(capsys, "build", "-g", "C~", "-k", "4")
    assert len(obj["vertices"]) == 1 and obj["edges"] == []


def test_build_multigraph_to_file(capsys, tmp_path):
    out = tmp_path / "m.json"
    code, _, _ = run(capsys, "build", "-g", "Ch", "-k", "3", "--multigraph", "-o", str(out))
    assert code == 0
    obj = json.loads(out.read_text())
    assert obj["n_vertices"] == 4 and sorted(e[2] for e in obj["edges"]) == [1, 1, 2, 2]


def test_output_is_byte_stable(capsys):
    main(["build", "-g", "Ch", "-k", "3"])
    first = capsys.readouterr().out
    main(["build", "-g", "Ch", "-k", "3"])
    assert capsys.readouterr().out == first


def test_classify(capsys):
    _, obj, _ = run(capsys, "classify", "-g", "B?", "-k", "3")
    assert obj["triangles"] == {"s": 3, "radial_t": 3, "cyclic_t": 1}
    assert obj["tetrahedra"] == {"s": 0, "split": 1, "fused": 1}
    _, obj, _ = run(capsys, "classify", "-g", "Ch", "-k", "3")
    assert sum(obj["triangles"].values()) == 0


def test_realize(capsys):
    code, obj, _ = run(capsys, "realize", "cycle", "7")
    assert code == 0 and obj["k"] == 4 and obj["verified"] and obj["base"] == write_graph6(complement(cycle(7)))
    _, obj, _ = run(capsys, "realize", "tree", write_graph6(path(5)))
    assert obj["k"] == 5 and obj["verified"]


def test_reconstruct_tree(capsys, tmp_path):
    f = tmp_path / "b.json"
    f.write_text(io.dumps(io.bell_to_json(build_bell(double_broom(2, 2), 3))))
    code, obj, _ = run(capsys, "reconstruct-tree", "--in", str(f), "--verify")
    assert code == 0 and obj["trace"] == {"class": "DOUBLE_BROOM", "n": 7, "a": 2, "b": 2}


def test_reconstruct_core(capsys, tmp_path):
    f = tmp_path / "m.json"
    f.write_text(io.dumps(io.multigraph_to_json(build_bell(star(3), 4).to_multigraph())))
    code, obj, _ = run(capsys, "reconstruct-core", "--in", str(f), "--verify")
    assert code == 0 and obj["graph6"] == write_graph6(empty(3))
    assert obj["trace"]["components"][0]["resolved"] == "K3"


def test_matching(capsys):
    _, obj, _ = run(capsys, "matching", "-g", "Dhc")
    assert len(obj["matchings"]) == 5 and len(obj["edges"]) == 5


@pytest.mark.parametrize(
    "argv, code",
    [
        (["build", "-g", "zz", "-k", "3"], 2),
        (["build", "-g", "B?", "-k", "5"], 3),
        (["build", "-g", "B?", "-k", "0"], 3),
        (["realize", "cycle", "2"], 3),
        (["realize", "tree", write_graph6(cycle(4))], 3),
        (["reconstruct-tree", "--in", "Bw"], 4),
        (["reconstruct-core", "--in", '{"n_vertices": 3, "edges": [[0, 1, 1], [1, 2, 1]]}'], 4),
        (["reconstruct-core", "--in", '{"n_vertices": 3'], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert capsys.readouterr().err.startswith("error:")


def test_verify(capsys):
    code, obj, _ = run(capsys, "verify", "figures")
    assert code == 0 and obj["failures"] == [] and obj["cases"] > 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    from bellcolor import suites

    def broken(max_n):
        r = suites.VerifySuiteReport("figures", cases=1)
        r.fail("x", 1, 2)
        return r

    monkeypatch.setitem(suites.SUITES, "figures", broken)
    code, obj, _ = run(capsys, "verify", "figures")
    assert code == 5 and len(obj["failures"]) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bellcolor", "build", "-g", "A_", "-k", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["vertices"] == ["0|1"]
