"""Instance families for verification sweeps and property tests.

Each planted family targets one registered theorem's hypothesis shape and
is re-checked after construction; a near-miss is resampled rather than
silently returned, with a bounded retry budget. Generation is a pure
function of (family, parameters, seed).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterable, Mapping

from .cliques import contains_complete
from .compression import left_compress_fixpoint
from .hypergraph import Edge, Hypergraph, validate
from .theorems import (
    TheoremId,
    check_hypotheses,
    pair_edge_window,
    strict_three_window,
    uniform_edge_window,
)

_MAX_RETRIES = 1000

FAMILIES = ("t6a", "t7a", "ptz", "tpzz-free", "random-lc")


class GenerationError(ValueError):
    """Infeasible parameter window or retry budget exhausted."""


def gen_random(
    n: int,
    types: Iterable[int],
    density: float | Mapping[int, float],
    seed: int,
) -> Hypergraph:
    """Independent per-edge sampling: each potential r-edge kept with its
    level's density. Density 1 reproduces the complete T-pattern."""
    ts = sorted(set(types))
    if not ts:
        raise GenerationError("edge-type set must be nonempty")
    rng = random.Random(seed)
    edges: list[Edge] = []
    for r in ts:
        p = density[r] if isinstance(density, Mapping) else float(density)
        if not 0.0 <= p <= 1.0:
            raise GenerationError(f"density for level {r} must be in [0, 1], got {p}")
        for e in itertools.combinations(range(1, n + 1), r):
            if p >= 1.0 or (p > 0.0 and rng.random() < p):
                edges.append(e)
    return validate(n, edges)


def with_singletons(h: Hypergraph) -> Hypergraph:
    """Add every vertex's singleton edge (the {1,...}-wrapper of a graph)."""
    existing = set(h.edges())
    existing.update((v,) for v in range(1, h.n + 1))
    return validate(h.n, sorted(existing, key=lambda e: (len(e), e)))


def _complete_edges(vertices: Iterable[int], r: int) -> list[Edge]:
    return [tuple(c) for c in itertools.combinations(sorted(vertices), r)]


def _gen_t6a(rng: random.Random, t: int, r: int, n: int, mode: str, extra_density: float) -> Hypergraph:
    if n < t:
        raise GenerationError(f"need n >= t, got n={n}, t={t}")
    if t < r:
        raise GenerationError(f"need t >= r so the planted clique carries {r}-edges")
    edges: list[Edge] = _complete_edges(range(1, t + 1), 2)
    planted = set(_complete_edges(range(1, t + 1), r))
    edges.extend(sorted(planted))
    if mode == "complete-r-level":
        edges.extend(e for e in _complete_edges(range(1, n + 1), r) if e not in planted)
    else:
        for e in _complete_edges(range(1, n + 1), r):
            if e not in planted and rng.random() < extra_density:
                edges.append(e)
    return validate(n, edges)


def _gen_t7a(rng: random.Random, t: int, r: int, n: int, m: int, mode: str, extra_density: float) -> Hypergraph:
    lo, hi = pair_edge_window(t)
    if not lo <= m <= hi:
        raise GenerationError(f"m={m} outside the 2-level window [{lo}, {hi}] for t={t}")
    if n < t + 1 and m > lo:
        raise GenerationError("extra 2-edges need an attachment vertex t+1; raise n")
    if t < r:
        raise GenerationError(f"need t >= r, got t={t}, r={r}")
    edges: list[Edge] = _complete_edges(range(1, t + 1), 2)
    # extras attach vertex t+1 to at most t-2 clique vertices, so no larger
    # pairwise-complete set can appear
    extras = m - lo
    for v in sorted(rng.sample(range(1, t + 1), extras)):
        edges.append((v, t + 1))
    planted = set(_complete_edges(range(1, t + 1), r))
    edges.extend(sorted(planted))
    if mode == "random-r-level":
        for e in _complete_edges(range(1, n + 1), r):
            if e not in planted and rng.random() < extra_density:
                edges.append(e)
    return validate(max(n, t + 1) if extras else n, edges)


def _gen_ptz(rng: random.Random, t: int, r: int, m: int) -> Hypergraph:
    lo, hi = uniform_edge_window(t, r)
    if hi < lo:
        raise GenerationError(f"edge window for t={t}, r={r} is empty")
    if not lo <= m <= hi:
        raise GenerationError(f"m={m} outside the r-level window [{lo}, {hi}] for t={t}, r={r}")
    n = t + 1
    edges: list[Edge] = _complete_edges(range(1, t + 1), r)
    pool = [e for e in _complete_edges(range(1, n + 1), r) if n in e]
    extras = m - lo
    if extras > len(pool):
        raise GenerationError(f"cannot place {extras} extra edges on vertex {n}")
    edges.extend(sorted(rng.sample(pool, extras)))
    return validate(n, edges)


def _gen_tpzz_free(rng: random.Random, t: int, m: int, n: int) -> Hypergraph:
    lo, hi = strict_three_window(t)
    if not lo <= m <= hi:
        raise GenerationError(f"m={m} outside the strict window [{lo}, {hi}] for t={t}")
    pool = _complete_edges(range(1, n + 1), 3)
    if m > len(pool):
        raise GenerationError(f"m={m} exceeds the {len(pool)} possible 3-edges on n={n}")
    for _ in range(_MAX_RETRIES):
        h = validate(n, rng.sample(pool, m))
        if not contains_complete(h, t, (3,)):
            return h
    raise GenerationError(
        f"could not sample a clique-free 3-graph with m={m}, t={t}, n={n} "
        f"in {_MAX_RETRIES} attempts"
    )


def gen_planted(family: str, params: Mapping | None = None, seed: int = 0) -> Hypergraph:
    """Build one instance of a named family; deterministic in (family, params, seed)."""
    p = dict(params or {})
    rng = random.Random(seed)
    t = int(p.get("t", 4))
    r = int(p.get("r", 3))
    mode = p.get("mode", "random-r-level")
    extra_density = float(p.get("extra_density", 0.3))

    if family == "t6a":
        n = int(p.get("n", t + 2))
        target, tparams = TheoremId.TWO_R_T6a, {"t": t, "r": r, "alpha_r": p.get("alpha_r", 1)}
        build = lambda: _gen_t6a(rng, t, r, n, mode, extra_density)  # noqa: E731
    elif family == "t7a":
        m = int(p.get("m", pair_edge_window(t)[1]))
        n = int(p.get("n", t + 1))
        target, tparams = TheoremId.TWO_R_EDGES_T7a, {"t": t, "r": r, "alpha_r": p.get("alpha_r", 1)}
        build = lambda: _gen_t7a(rng, t, r, n, m, mode, extra_density)  # noqa: E731
    elif family == "ptz":
        m = int(p.get("m", uniform_edge_window(t, r)[0]))
        target, tparams = TheoremId.PTZ, {"t": t, "r": r}
        build = lambda: _gen_ptz(rng, t, r, m)  # noqa: E731
    elif family == "tpzz-free":
        m = int(p.get("m", strict_three_window(t)[0]))
        n = int(p.get("n", t + 2))
        return _gen_tpzz_free(rng, t, m, n)  # clique-freeness is its own check
    elif family == "random-lc":
        n = int(p.get("n", 6))
        types = tuple(p.get("types", (2, 3)))
        density = p.get("density", 0.5)
        return left_compress_fixpoint(gen_random(n, types, density, rng.randrange(2**63)))
    else:
        raise GenerationError(f"unknown family {family!r}; choose from {FAMILIES}")

    for _ in range(_MAX_RETRIES):
        h = build()
        if check_hypotheses(target, h, tparams).ok:
            return h
    raise GenerationError(
        f"family {family!r} with params {p} failed its hypothesis check "
        f"{_MAX_RETRIES} times; the window is likely infeasible"
    )
