"""Canonical representation of non-uniform hypergraphs.

Vertices are labeled 1..n in every input and output. Edges are grouped by
cardinality and kept as strictly increasing tuples, so each hypergraph has
exactly one canonical form and equality/hashing are structural. Isolated
vertices are allowed: n may exceed the number of covered vertices.

Desk-scale soft limits (r <= 6, n <= 24 by default) keep the enumeration
oracles elsewhere in the package tractable; both are overridable.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Sequence

MAX_CARDINALITY = 6
MAX_VERTICES = 24

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """Malformed hypergraph input: bad vertex, duplicate or empty edge."""


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph: vertex count plus edges grouped by cardinality.

    ``levels`` maps each present cardinality r to its edges, stored as a
    sorted tuple of sorted vertex tuples. Only nonempty levels are kept, so
    ``edge_types`` is exactly the set of cardinalities carrying edges.
    """

    n: int
    levels: tuple[tuple[int, tuple[Edge, ...]], ...]

    @property
    def edge_types(self) -> tuple[int, ...]:
        """Sorted cardinalities that actually carry edges."""
        return tuple(r for r, _ in self.levels)

    def level_edges(self, r: int) -> tuple[Edge, ...]:
        for rr, es in self.levels:
            if rr == r:
                return es
        return ()

    def edge_set(self, r: int) -> frozenset[Edge]:
        return _edge_set(self, r)

    def edges(self) -> list[Edge]:
        """All edges, ordered by (cardinality, lexicographic)."""
        out: list[Edge] = []
        for _, es in self.levels:
            out.extend(es)
        return out

    def num_edges(self, r: int | None = None) -> int:
        if r is None:
            return sum(len(es) for _, es in self.levels)
        return len(self.level_edges(r))

    def has_edge(self, e: Sequence[int]) -> bool:
        t = tuple(sorted(e))
        return t in self.edge_set(len(t))

    def __repr__(self) -> str:
        counts = ", ".join(f"{r}:{len(es)}" for r, es in self.levels)
        return f"Hypergraph(n={self.n}, levels={{{counts}}})"


@lru_cache(maxsize=1024)
def _edge_set(h: Hypergraph, r: int) -> frozenset[Edge]:
    return frozenset(h.level_edges(r))


def _build(n: int, per_level: Mapping[int, Iterable[Edge]]) -> Hypergraph:
    """Assemble the canonical form from already-validated edges."""
    levels = tuple(
        (r, tuple(sorted(set(per_level[r]))))
        for r in sorted(per_level)
        if per_level[r]
    )
    return Hypergraph(n=n, levels=levels)


def validate(
    n: int,
    edges: Iterable[Sequence[int]],
    *,
    max_vertices: int | None = MAX_VERTICES,
    max_cardinality: int | None = MAX_CARDINALITY,
) -> Hypergraph:
    """Canonicalize raw edge lists into a Hypergraph.

    Each edge is sorted; a repeated vertex inside an edge, a vertex outside
    1..n, an empty edge, or two edges equal after sorting are errors rather
    than silently merged.
    """
    if n < 1:
        raise HypergraphError(f"vertex count must be positive, got {n}")
    if max_vertices is not None and n > max_vertices:
        raise HypergraphError(
            f"n={n} exceeds the soft limit {max_vertices}; pass max_vertices=None to override"
        )
    per_level: dict[int, set[Edge]] = {}
    for raw in edges:
        e = tuple(sorted(raw))
        if len(e) == 0:
            raise HypergraphError("empty edge")
        if len(set(e)) != len(e):
            raise HypergraphError(f"repeated vertex in edge {list(raw)}")
        if e[0] < 1 or e[-1] > n:
            bad = e[0] if e[0] < 1 else e[-1]
            raise HypergraphError(f"vertex {bad} out of range 1..{n} in edge {list(raw)}")
        r = len(e)
        if max_cardinality is not None and r > max_cardinality:
            raise HypergraphError(
                f"edge cardinality {r} exceeds the soft limit {max_cardinality}; "
                "pass max_cardinality=None to override"
            )
        bucket = per_level.setdefault(r, set())
        if e in bucket:
            raise HypergraphError(f"duplicate edge {list(e)} (after canonical sorting)")
        bucket.add(e)
    return _build(n, per_level)


def complete(
    n: int,
    types: Iterable[int],
    *,
    max_vertices: int | None = MAX_VERTICES,
    max_cardinality: int | None = MAX_CARDINALITY,
) -> Hypergraph:
    """The complete hypergraph on [n] with all edges of each cardinality in ``types``."""
    ts = sorted(set(types))
    if not ts:
        raise HypergraphError("edge-type set must be nonempty")
    if ts[0] < 1:
        raise HypergraphError(f"edge type {ts[0]} must be >= 1")
    if ts[-1] > n:
        raise HypergraphError(f"max edge type {ts[-1]} exceeds n={n}")
    if max_vertices is not None and n > max_vertices:
        raise HypergraphError(f"n={n} exceeds the soft limit {max_vertices}")
    if max_cardinality is not None and ts[-1] > max_cardinality:
        raise HypergraphError(f"edge type {ts[-1]} exceeds the soft limit {max_cardinality}")
    per_level = {
        r: [tuple(c) for c in itertools.combinations(range(1, n + 1), r)] for r in ts
    }
    return _build(n, per_level)


def level(h: Hypergraph, r: int) -> Hypergraph:
    """The uniform sub-hypergraph of all r-edges, on the same vertex set."""
    return _build(h.n, {r: h.level_edges(r)})


def vertex_support(h: Hypergraph, r: int) -> frozenset[int]:
    """Vertices covered by at least one r-edge."""
    return frozenset(v for e in h.level_edges(r) for v in e)


def is_complete_on(h: Hypergraph, vertices: Iterable[int], types: Iterable[int]) -> bool:
    """True iff every r-subset of ``vertices`` is an edge, for each r in ``types`` with r <= |vertices|."""
    s = sorted(set(vertices))
    if any(v < 1 or v > h.n for v in s):
        raise HypergraphError(f"vertex set {s} not within 1..{h.n}")
    for r in sorted(set(types)):
        if r > len(s):
            continue
        es = h.edge_set(r)
        for c in itertools.combinations(s, r):
            if c not in es:
                return False
    return True


def relabel(h: Hypergraph, mapping: Mapping[int, int]) -> Hypergraph:
    """Rename vertices by a bijection of [n] onto itself."""
    if sorted(mapping) != list(range(1, h.n + 1)) or sorted(mapping.values()) != list(
        range(1, h.n + 1)
    ):
        raise HypergraphError("relabeling must be a bijection on 1..n")
    per_level: dict[int, list[Edge]] = {}
    for r, es in h.levels:
        per_level[r] = [tuple(sorted(mapping[v] for v in e)) for e in es]
    return _build(h.n, per_level)


# ---------------------------------------------------------------------------
# I/O: JSON {"n": ..., "edges": [[...], ...]} and a plain-text format whose
# first line is n, each following nonempty line one edge, '#' starting comments.
# ---------------------------------------------------------------------------


def to_json(h: Hypergraph) -> str:
    return json.dumps({"n": h.n, "edges": [list(e) for e in h.edges()]})


def from_json(text: str, **limits) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise HypergraphError('hypergraph JSON must be {"n": int, "edges": [[...], ...]}')
    return validate(doc["n"], doc["edges"], **limits)


def to_text(h: Hypergraph) -> str:
    lines = [str(h.n)]
    lines.extend(" ".join(str(v) for v in e) for e in h.edges())
    return "\n".join(lines) + "\n"


def from_text(text: str, **limits) -> Hypergraph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise HypergraphError("empty hypergraph text")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise HypergraphError(f"first line must be the vertex count, got {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        try:
            edges.append([int(tok) for tok in ln.split()])
        except ValueError as exc:
            raise HypergraphError(f"bad edge line {ln!r}") from exc
    return validate(n, edges, **limits)


def loads(text: str, **limits) -> Hypergraph:
    """Parse either accepted format, sniffing JSON by the leading character."""
    if text.lstrip().startswith("{"):
        return from_json(text, **limits)
    return from_text(text, **limits)


def load(path: str | Path, **limits) -> Hypergraph:
    return loads(Path(path).read_text(), **limits)


def dump(h: Hypergraph, path: str | Path, fmt: str = "json") -> None:
    text = to_json(h) if fmt == "json" else to_text(h)
    Path(path).write_text(text if text.endswith("\n") else text + "\n")
