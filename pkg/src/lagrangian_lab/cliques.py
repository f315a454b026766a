"""Exact maximum complete T-subgraph search.

Completeness for a type set T is hereditary (every subset of a complete set
is complete), so a depth-first branch and bound over vertices in increasing
label order is exact. When 2 is in T, candidate lists are pruned by
pairwise adjacency; other cardinalities are verified incrementally as the
current set grows. Instances are desk-scale by design, so there is no
approximate fallback.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .hypergraph import Hypergraph


@dataclass(frozen=True)
class CliqueResult:
    vertices: tuple[int, ...]
    order: int
    is_unique_max: bool


def _candidates(h: Hypergraph, types: tuple[int, ...]) -> list[int]:
    verts = list(range(1, h.n + 1))
    if 1 in types:
        singles = h.edge_set(1)
        verts = [v for v in verts if (v,) in singles]
    return verts


def _extends(h: Hypergraph, types: tuple[int, ...], current: list[int], v: int) -> bool:
    """Whether current + {v} stays complete; only subsets through v need checking."""
    size = len(current) + 1
    for r in types:
        if r == 1 or r > size:
            continue
        es = h.edge_set(r)
        for tail in itertools.combinations(current, r - 1):
            if tuple(sorted(tail + (v,))) not in es:
                return False
    return True


def max_complete_subgraph(h: Hypergraph, types: Iterable[int]) -> CliqueResult:
    """Largest vertex set complete for ``types``, lexicographically smallest on ties."""
    ts = tuple(sorted(set(types)))
    if not ts:
        raise ValueError("edge-type set must be nonempty")
    cands = _candidates(h, ts)
    pair_ok = None
    if 2 in ts:
        pairs = h.edge_set(2)
        pair_ok = lambda u, v: (min(u, v), max(u, v)) in pairs  # noqa: E731

    best: list[int] = []

    def search(current: list[int], remaining: list[int]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        for k, v in enumerate(remaining):
            if len(current) + len(remaining) - k <= len(best):
                return
            if not _extends(h, ts, current, v):
                continue
            nxt = remaining[k + 1 :]
            if pair_ok is not None:
                nxt = [u for u in nxt if pair_ok(v, u)]
            current.append(v)
            search(current, nxt)
            current.pop()

    search([], cands)
    order = len(best)
    return CliqueResult(tuple(best), order, _is_unique(h, ts, cands, order, tuple(best)))


def _is_unique(
    h: Hypergraph,
    ts: tuple[int, ...],
    cands: list[int],
    order: int,
    found: tuple[int, ...],
) -> bool:
    """Counting pass: is there a second complete set of the maximum order?"""
    if order == 0:
        return True
    seen = 0

    def count(current: list[int], remaining: list[int]) -> bool:
        nonlocal seen
        if len(current) == order:
            seen += 1
            return seen >= 2
        for k, v in enumerate(remaining):
            if len(current) + len(remaining) - k < order:
                return False
            if not _extends(h, ts, current, v):
                continue
            current.append(v)
            if count(current, remaining[k + 1 :]):
                current.pop()
                return True
            current.pop()
        return False

    count([], cands)
    return seen < 2


def contains_complete(h: Hypergraph, t: int, types: Iterable[int]) -> bool:
    """Whether some t-subset is complete for ``types``; t = 0 is vacuously true."""
    if t <= 0:
        return True
    ts = tuple(sorted(set(types)))
    if not ts:
        raise ValueError("edge-type set must be nonempty")
    cands = _candidates(h, ts)
    if len(cands) < t:
        return False

    def search(current: list[int], remaining: list[int]) -> bool:
        if len(current) == t:
            return True
        for k, v in enumerate(remaining):
            if len(current) + len(remaining) - k < t:
                return False
            if not _extends(h, ts, current, v):
                continue
            current.append(v)
            if search(current, remaining[k + 1 :]):
                return True
            current.pop()
        return False

    return search([], cands)
