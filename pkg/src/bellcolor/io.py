"""JSON wire formats for Bell graphs, multigraphs and realisation certificates."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .bell import BellGraph
from .errors import MalformedGraph6, MalformedInput
from .graph import Graph, Multigraph
from .graph6 import parse_graph6, write_graph6
from .matchings import MatchingGraph, RealizationCertificate
from .partitions import format_partition


def dumps(obj: Any) -> str:
    """Byte-stable JSON: sorted keys, compact separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def bell_to_json(b: BellGraph) -> dict:
    return {
        "base": write_graph6(b.base),
        "k": b.k,
        "vertices": [format_partition(p) for p in b.vertices],
        "edges": [[e.i, e.j, sorted(e.witnesses)] for e in b.edges],
    }


def multigraph_to_json(m: Multigraph) -> dict:
    return {
        "n_vertices": m.n,
        "edges": [[u, v, k] for (u, v), k in sorted(m.mult.items())],
    }


def certificate_to_json(c: RealizationCertificate) -> dict:
    return {
        "target": write_graph6(c.target),
        "base": write_graph6(c.base),
        "k": c.k,
        "iso": [[i, t] for i, t in enumerate(c.iso)],
    }


def matching_graph_to_json(mg: MatchingGraph) -> dict:
    return {
        "base": write_graph6(mg.base),
        "k": mg.k,
        "matchings": [[list(e) for e in m.sorted_edges()] for m in mg.matchings],
        "unmatched": [list(m.unmatched()) for m in mg.matchings],
        "edges": [list(e) for e in mg.graph.sorted_edges()],
    }


def _edge_triples(raw: Any, n: int) -> list[tuple[tuple[int, int], int]]:
    if not isinstance(raw, list):
        raise MalformedInput("'edges' must be a list")
    out = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 3):
            raise MalformedInput(f"bad edge entry {item!r}")
        u, v, tail = item
        mult = len(tail) if isinstance(tail, list) else tail
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v, mult)):
            raise MalformedInput(f"bad edge entry {item!r}")
        if not (0 <= u < n and 0 <= v < n) or u == v or mult < 1:
            raise MalformedInput(f"edge {item!r} out of range for {n} vertices")
        out.append(((u, v), mult))
    return out


def multigraph_from_json(obj: Any) -> Multigraph:
    """Accepts the multigraph schema or the Bell graph schema (witness lists)."""
    if not isinstance(obj, dict) or "edges" not in obj:
        raise MalformedInput("expected an object with 'edges'")
    if "n_vertices" in obj:
        n = obj["n_vertices"]
    elif "vertices" in obj and isinstance(obj["vertices"], list):
        n = len(obj["vertices"])
    else:
        raise MalformedInput("missing 'n_vertices' or 'vertices'")
    if not isinstance(n, int) or n < 0:
        raise MalformedInput(f"bad vertex count {n!r}")
    triples = _edge_triples(obj["edges"], n)
    if len({tuple(sorted(e)) for e, _ in triples}) != len(triples):
        raise MalformedInput("duplicate edge entries")
    return Multigraph(n, triples)


def load_structure(source: str) -> Multigraph:
    """Read a path or literal holding JSON (either schema) or graph6."""
    path = Path(source)
    text = path.read_text() if path.is_file() else source
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
        return multigraph_from_json(obj)
    try:
        g = parse_graph6(stripped)
    except MalformedGraph6:
        raise
    return Multigraph(g.n, {e: 1 for e in g.edges})


def load_graph(source: str) -> Graph:
    return load_structure(source).underlying()
