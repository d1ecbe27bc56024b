"""Stable k-partitions of a graph and the single-vertex moves between them.

A :class:`StablePartition` stores only its nonempty parts; the empty ones
are implied by the budget ``k``. Parts are sorted tuples and the part
sequence is sorted lexicographically, which (parts being disjoint) is the
same as ordering parts by their smallest vertex. Two partitions are equal
exactly when they are equal as multisets with the same budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import BadBudget, IndexOutOfRange, MalformedInput
from .graph import Graph

Part = tuple[int, ...]


def _canon_parts(parts: Iterable[Iterable[int]]) -> tuple[Part, ...]:
    return tuple(sorted(tuple(sorted(p)) for p in parts if p))


@dataclass(frozen=True, order=True)
class StablePartition:
    k: int
    parts: tuple[Part, ...]

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]], k: int) -> StablePartition:
        ps = _canon_parts(parts)
        if len(ps) > k:
            raise BadBudget(f"{len(ps)} nonempty parts exceed budget {k}")
        return cls(k, ps)

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    @property
    def empty_slots(self) -> int:
        return self.k - len(self.parts)

    def part_of(self, v: int) -> Part:
        for p in self.parts:
            if v in p:
                return p
        raise IndexOutOfRange(f"vertex {v} not in partition")

    def has_part(self, part: Iterable[int]) -> bool:
        return tuple(sorted(part)) in self.parts

    def is_stable_for(self, g: Graph) -> bool:
        covered = sorted(v for p in self.parts for v in p)
        if covered != list(range(g.n)):
            return False
        return all(g.is_independent(p) for p in self.parts)

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Restriction:
    """The multiset ``P - v``: ``k`` subsets, empty ones implicit."""

    k: int
    parts: tuple[Part, ...]


class DoublePattern(NamedTuple):
    a: int
    b: int
    remainder: tuple[Part, ...]


def format_partition(p: StablePartition) -> str:
    """``"13|2|4"``; ids are comma-separated inside parts once any id exceeds 9."""
    wide = any(v > 9 for part in p.parts for v in part)
    sep = "," if wide else ""
    return "|".join(sep.join(str(v) for v in part) for part in p.parts)


def parse_partition(text: str, k: int) -> StablePartition:
    if text == "":
        return StablePartition(k, ())
    try:
        chunks = text.split("|")
        if any("," in c for c in chunks):
            parts = [[int(x) for x in c.split(",")] for c in chunks]
        else:
            parts = [[int(ch) for ch in c] for c in chunks]
    except ValueError:
        raise MalformedInput(f"bad partition text {text!r}") from None
    flat = [v for part in parts for v in part]
    if len(flat) != len(set(flat)) or any(not part for part in parts):
        raise MalformedInput(f"bad partition text {text!r}")
    try:
        return StablePartition.of(parts, k)
    except BadBudget as exc:
        raise MalformedInput(str(exc)) from None


def enumerate_stable_partitions(g: Graph, k: int) -> list[StablePartition]:
    """All stable partitions of ``g`` into at most ``k`` nonempty parts, sorted."""
    if k < 1:
        raise BadBudget(f"budget must be >= 1, got {k}")
    return sorted(iter_stable_partitions(g, k), key=lambda p: p.parts)


def iter_stable_partitions(g: Graph, k: int) -> Iterator[StablePartition]:
    n = g.n
    masks = g.masks
    parts: list[list[int]] = []
    pmask: list[int] = []

    def rec(v: int) -> Iterator[StablePartition]:
        if v == n:
            yield StablePartition(k, _canon_parts(parts))
            return
        nb = masks[v]
        for i in range(len(parts)):
            if not pmask[i] & nb:
                parts[i].append(v)
                pmask[i] |= 1 << v
                yield from rec(v + 1)
                pmask[i] &= ~(1 << v)
                parts[i].pop()
        if len(parts) < k:
            parts.append([v])
            pmask.append(1 << v)
            yield from rec(v + 1)
            parts.pop()
            pmask.pop()

    yield from rec(0)


def restrict(p: StablePartition, v: int) -> Restriction:
    if not 0 <= v < p.n:
        raise IndexOutOfRange(f"vertex {v} out of range for order {p.n}")
    return Restriction(p.k, _canon_parts(tuple(x for x in part if x != v) for part in p.parts))


def legal_moves(p: StablePartition, g: Graph) -> list[tuple[int, StablePartition]]:
    """Every ``(v, P')`` with ``P' != P`` stable and ``P - v == P' - v``."""
    out = []
    masks = g.masks
    part_masks = [sum(1 << x for x in part) for part in p.parts]
    for i, part in enumerate(p.parts):
        for v in part:
            rest = tuple(x for x in part if x != v)
            others = [q for j, q in enumerate(p.parts) if j != i]
            for j, target in enumerate(p.parts):
                if j == i or part_masks[j] & masks[v]:
                    continue
                new = [q for q in others if q != target] + [target + (v,)]
                if rest:
                    new.append(rest)
                out.append((v, StablePartition(p.k, _canon_parts(new))))
            if rest and p.empty_slots > 0:
                out.append((v, StablePartition(p.k, _canon_parts(others + [rest, (v,)]))))
    out.sort(key=lambda t: (t[0], t[1].parts))
    return out


def witnesses(p: StablePartition, q: StablePartition) -> frozenset[int]:
    """Vertices ``v`` with ``P - v == Q - v`` (empty when not adjacent)."""
    if p == q or p.k != q.k or p.n != q.n:
        return frozenset()
    return frozenset(v for v in range(p.n) if restrict(p, v) == restrict(q, v))


def is_double_edge_pattern(p: StablePartition, q: StablePartition) -> DoublePattern | None:
    """Detect ``P = {{a,b}, {}} + R`` and ``Q = {{a}, {b}} + R`` (either way round)."""
    if p == q or p.k != q.k:
        return None
    only_p = [x for x in p.parts if x not in q.parts]
    only_q = [x for x in q.parts if x not in p.parts]
    for pair_side, split_side, host in ((only_p, only_q, p), (only_q, only_p, q)):
        if (
            len(pair_side) == 1
            and len(pair_side[0]) == 2
            and sorted(split_side) == [(pair_side[0][0],), (pair_side[0][1],)]
            and host.empty_slots >= 1
        ):
            a, b = pair_side[0]
            remainder = tuple(x for x in host.parts if x != pair_side[0])
            return DoublePattern(a, b, remainder)
    return None
