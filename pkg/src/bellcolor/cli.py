"""``bell`` command-line interface.

Exit codes: 0 ok, 2 malformed input, 3 failed precondition, 4 reconstruction
failure, 5 verification failure or counterexample.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import io
from .bell import build_bell
from .cliques import clique_census
from .core import reconstruct_core_traced
from .errors import BadBudget, BellError, NotATree
from .graph import Graph
from .graph6 import parse_graph6, write_graph6
from .matchings import build_matching_graph, realize_cycle, realize_tree
from .suites import SUITES, run_suite
from .trees import reconstruct_tree_traced

EXIT_OK = 0
EXIT_VERIFY = 5


def _emit(payload: dict, out: str | None = None) -> None:
    text = io.dumps(payload)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _graph_arg(text: str) -> Graph:
    path = Path(text)
    return parse_graph6(path.read_text().strip() if path.is_file() else text)


def _check_budget(g: Graph, k: int) -> None:
    if not 1 <= k <= g.n + 1:
        raise BadBudget(
            f"k must satisfy 1 <= k <= n+1 = {g.n + 1}; larger budgets add only unusable empty parts"
        )


def cmd_build(args: argparse.Namespace) -> int:
    g = _graph_arg(args.graph)
    _check_budget(g, args.k)
    b = build_bell(g, args.k)
    _emit(io.multigraph_to_json(b.to_multigraph()) if args.multigraph else io.bell_to_json(b), args.output)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    g = _graph_arg(args.graph)
    _check_budget(g, args.k)
    _emit(clique_census(build_bell(g, args.k)), args.output)
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    if args.kind == "tree":
        t = _graph_arg(args.target)
        if not t.is_tree():
            raise NotATree("target is not a tree")
        cert = realize_tree(t)
    else:
        try:
            m = int(args.target)
        except ValueError:
            raise BadBudget(f"cycle length must be an integer, got {args.target!r}") from None
        cert = realize_cycle(m)
    payload = io.certificate_to_json(cert)
    payload["verified"] = cert.check()
    _emit(payload, args.output)
    return EXIT_OK


def cmd_reconstruct_tree(args: argparse.Namespace) -> int:
    b = io.load_graph(args.input)
    t, cls = reconstruct_tree_traced(b, verify=args.verify)
    _emit({"graph6": write_graph6(t), "trace": cls.trace()}, args.output)
    return EXIT_OK


def cmd_reconstruct_core(args: argparse.Namespace) -> int:
    bm = io.load_structure(args.input)
    g, trace = reconstruct_core_traced(bm, verify=args.verify)
    _emit({"graph6": write_graph6(g), "trace": trace.as_dict()}, args.output)
    return EXIT_OK


def cmd_matching(args: argparse.Namespace) -> int:
    g = _graph_arg(args.graph)
    k = (g.n - 1) // 2 if args.k is None else args.k
    if k < 0:
        raise BadBudget(f"matching size must be >= 0, got {k}")
    _emit(io.matching_graph_to_json(build_matching_graph(g, k)), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.max_n)
    _emit(report.as_dict(), args.output)
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bell", description="Bell colouring graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("-o", "--output", help="write JSON here instead of stdout")
        p.set_defaults(func=fn)
        return p

    p = add("build", cmd_build, "build B_k(G) as JSON")
    p.add_argument("-g", "--graph", required=True, help="graph6 string or file")
    p.add_argument("-k", type=int, required=True, help="budget (number of parts)")
    p.add_argument("--multigraph", action="store_true", help="emit the multigraph schema")

    p = add("classify", cmd_classify, "clique census of B_k(G)")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-k", type=int, required=True)

    p = add("realize", cmd_realize, "realise a tree or cycle as a Bell graph")
    p.add_argument("kind", choices=["tree", "cycle"])
    p.add_argument("target", help="graph6 of the tree, or the cycle length")

    p = add("reconstruct-tree", cmd_reconstruct_tree, "recover T from B_3(T)")
    p.add_argument("--in", dest="input", required=True, help="Bell JSON, multigraph JSON or graph6")
    p.add_argument("--verify", action="store_true", help="rebuild and compare")

    p = add("reconstruct-core", cmd_reconstruct_core, "recover the core of G from its Bell n-multigraph")
    p.add_argument("--in", dest="input", required=True, help="multigraph JSON or Bell JSON")
    p.add_argument("--verify", action="store_true", help="rebuild and compare")

    p = add("matching", cmd_matching, "matching reconfiguration graph M_k(G)")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-k", type=int, default=None, help="minimum size (default: near-perfect)")

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int, default=None, help="largest base order to scan")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BellError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
