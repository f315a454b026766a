"""Maximization of the weighted objective over the standard simplex.

Projected-gradient ascent with backtracking line search, run from three
start families: uniform on the maximum complete subgraph (so the reported
value never falls below the clique bound), uniform prefixes of every
length, and Dirichlet(1) random points. A rational-grid exhaustive search
provides an independent certified lower bound for cross-validation.

Multilinear objectives are cheap to evaluate at desk scale, so robustness
wins over speed: no second-order method.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .cliques import max_complete_subgraph
from .hypergraph import Hypergraph
from .objective import Coefficients, eval_L, gradient, uniform_weights

_MIN_STEP = 1e-18


class GridTooLargeError(ValueError):
    """Requested grid would exceed the enumeration budget."""


@dataclass(frozen=True)
class SolverConfig:
    starts: int = 64
    max_iters: int = 5000
    tol_grad: float = 1e-9
    tol_value: float = 1e-12
    support_epsilon: float = 1e-10
    grid_resolution: int = 24
    seed: int = 0

    def __post_init__(self):
        if min(self.starts, self.max_iters, self.grid_resolution) < 1:
            raise ValueError("starts, max_iters and grid_resolution must be positive")
        if min(self.tol_grad, self.tol_value, self.support_epsilon) <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class OptimizationResult:
    value: float
    x: np.ndarray
    support: tuple[int, ...]
    kkt_residual: float
    method: str
    iterations: int
    converged: bool
    sorted_x: np.ndarray = field(default_factory=lambda: np.array([]))
    sort_permutation: tuple[int, ...] = ()


def project_to_simplex(v: Sequence[float]) -> np.ndarray:
    """Euclidean projection onto the simplex: x_i = max(v_i - tau, 0), sum 1."""
    arr = np.asarray(v, dtype=float).ravel()
    if arr.size == 0:
        raise ValueError("cannot project an empty vector")
    u = np.sort(arr)[::-1]
    cs = np.cumsum(u)
    ks = np.arange(1, arr.size + 1)
    rho = np.nonzero(u + (1.0 - cs) / ks > 0)[0][-1]
    tau = (cs[rho] - 1.0) / (rho + 1)
    x = np.maximum(arr - tau, 0.0)
    total = x.sum()
    if total <= 0:
        return np.full(arr.size, 1.0 / arr.size)
    return x / total


def _residual(x: np.ndarray, g: np.ndarray, eps: float) -> float:
    sup = x > eps
    if not sup.any():
        return 0.0
    gs = g[sup]
    spread = float(gs.max() - gs.min())
    if sup.all():
        return spread
    excess = float(max(0.0, g[~sup].max() - gs.max()))
    return spread + excess


def kkt_residual(
    h: Hypergraph, coeffs: Coefficients, x: Sequence[float], support_epsilon: float = 1e-10
) -> float:
    """First-order optimality defect: gradient spread across the support plus
    any zero-weight gradient exceeding the support gradient."""
    arr = np.asarray(x, dtype=float).ravel()
    return _residual(arr, gradient(h, coeffs, arr), support_epsilon)


def _compiled(h: Hypergraph, coeffs: Coefficients):
    """Closure pair (value, gradient) with level arrays bound once."""
    from .objective import _edge_array

    terms = [(float(coeffs.coefficient(r)), _edge_array(h, r)) for r in h.edge_types]

    def f(x: np.ndarray) -> float:
        total = 0.0
        for a, idx in terms:
            total += a * float(np.prod(x[idx], axis=1).sum())
        return total

    def grad(x: np.ndarray) -> np.ndarray:
        g = np.zeros(x.size)
        for a, idx in terms:
            r = idx.shape[1]
            if r == 1:
                np.add.at(g, idx[:, 0], a)
            elif r == 2:
                np.add.at(g, idx[:, 0], a * x[idx[:, 1]])
                np.add.at(g, idx[:, 1], a * x[idx[:, 0]])
            else:
                vals = x[idx]
                for p in range(r):
                    others = np.prod(np.delete(vals, p, axis=1), axis=1)
                    np.add.at(g, idx[:, p], a * others)
        return g

    return f, grad


def _ascend(f, grad, x0: np.ndarray, cfg: SolverConfig):
    """One projected-gradient run; stops at numerical stationarity."""
    x = project_to_simplex(x0)
    val = f(x)
    step = 1.0
    iters = 0
    converged = False
    for iters in range(1, cfg.max_iters + 1):
        g = grad(x)
        if _residual(x, g, cfg.support_epsilon) <= cfg.tol_grad:
            converged = True
            break
        s = step
        accepted = False
        while s > _MIN_STEP:
            y = project_to_simplex(x + s * g)
            vy = f(y)
            if vy > val:
                x, val = y, vy
                step = min(s * 2.0, 1e3)
                accepted = True
                break
            s *= 0.5
        if not accepted:
            converged = True
            break
    else:
        return x, val, cfg.max_iters, False
    return x, val, iters, converged


def _run(f, grad, x0: np.ndarray, cfg: SolverConfig, label: str):
    """Ascent plus the tiny-support re-polish: weights stuck between the
    support epsilon and 1e-6 are truncated and the run restarted from the
    cleaned point; both candidates are kept for selection."""
    outs = []
    x, val, iters, conv = _ascend(f, grad, x0, cfg)
    outs.append((x, val, iters, conv, label))
    tiny = (x > cfg.support_epsilon) & (x < 1e-6)
    if tiny.any() and (x > 1e-6).any():
        x2 = np.where(tiny, 0.0, x)
        x2, val2, iters2, conv2 = _ascend(f, grad, x2 / x2.sum(), cfg)
        outs.append((x2, val2, iters + iters2, conv2, label))
    return outs


def _support(x: np.ndarray, eps: float) -> tuple[int, ...]:
    return tuple(int(i) + 1 for i in np.nonzero(x > eps)[0])


def _finalize(
    h: Hypergraph, coeffs: Coefficients, x: np.ndarray, cfg: SolverConfig, label: str,
    iterations: int, converged: bool,
) -> OptimizationResult:
    x = project_to_simplex(x)
    value = eval_L(h, coeffs, x)
    order = np.lexsort((np.arange(1, h.n + 1), -x))
    perm = tuple(int(i) + 1 for i in order)
    return OptimizationResult(
        value=value,
        x=x,
        support=_support(x, cfg.support_epsilon),
        kkt_residual=kkt_residual(h, coeffs, x, cfg.support_epsilon),
        method=label,
        iterations=iterations,
        converged=converged,
        sorted_x=x[order],
        sort_permutation=perm,
    )


def maximize(
    h: Hypergraph, coeffs: Coefficients, cfg: SolverConfig | None = None
) -> OptimizationResult:
    """Best projected-gradient result over clique, prefix and random starts.

    Among runs whose values tie within ``tol_value`` the smallest support
    wins, with the lexicographically smallest support set breaking remaining
    ties; this realizes the minimal-support solution convention.
    """
    cfg = cfg or SolverConfig()
    coeffs.require_for(h)
    if not h.edge_types:
        x = np.zeros(h.n)
        x[0] = 1.0
        return _finalize(h, coeffs, x, cfg, "warmstart", 0, True)

    f, grad = _compiled(h, coeffs)
    starts: list[tuple[str, np.ndarray]] = []
    clique = max_complete_subgraph(h, h.edge_types)
    if clique.order > 0:
        starts.append(("warmstart", uniform_weights(h.n, clique.vertices)))
    for k in range(1, h.n + 1):
        starts.append(("warmstart", uniform_weights(h.n, range(1, k + 1))))
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.starts):
        starts.append(("multistart", rng.dirichlet(np.ones(h.n))))

    runs = []
    for label, x0 in starts:
        runs.extend(_run(f, grad, x0, cfg, label))

    best_val = max(r[1] for r in runs)
    pool = [r for r in runs if r[1] >= best_val - cfg.tol_value]
    pool.sort(key=lambda r: (len(_support(r[0], cfg.support_epsilon)),
                             _support(r[0], cfg.support_epsilon), -r[1]))
    x, _, iters, conv, label = pool[0]
    return _finalize(h, coeffs, x, cfg, label, iters, conv)


def polish(
    h: Hypergraph,
    coeffs: Coefficients,
    x0: Sequence[float],
    cfg: SolverConfig | None = None,
    method: str = "warmstart",
) -> OptimizationResult:
    """Single ascent run from a given point (used to refine grid maxima)."""
    cfg = cfg or SolverConfig()
    coeffs.require_for(h)
    if not h.edge_types:
        return _finalize(h, coeffs, np.asarray(x0, float), cfg, method, 0, True)
    f, grad = _compiled(h, coeffs)
    runs = _run(f, grad, np.asarray(x0, dtype=float), cfg, method)
    runs.sort(key=lambda r: -r[1])
    x, _, iters, conv, label = runs[0]
    return _finalize(h, coeffs, x, cfg, label, iters, conv)


def _grid_points(n: int, resolution: int):
    """All compositions of ``resolution`` into n nonnegative parts."""
    for cuts in itertools.combinations(range(resolution + n - 1), n - 1):
        prev = -1
        out = []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(resolution + n - 2 - prev)
        yield out


def _eval_batch(h: Hypergraph, coeffs: Coefficients, pts: np.ndarray) -> np.ndarray:
    from .objective import _edge_array

    total = np.zeros(pts.shape[0])
    for r in h.edge_types:
        a = float(coeffs.coefficient(r))
        idx = _edge_array(h, r)
        if idx.shape[0]:
            total += a * np.prod(pts[:, idx], axis=2).sum(axis=1)
    return total


def grid_oracle(
    h: Hypergraph, coeffs: Coefficients, resolution: int
) -> tuple[float, np.ndarray]:
    """Exact maximum of the objective over the grid {x : x_i = k_i/D}.

    A certified lower bound on the true optimum; combine with
    :func:`polish` from the returned argmax to close the gap.
    """
    coeffs.require_for(h)
    n = h.n
    count = math.comb(resolution + n - 1, n - 1)
    if count > 10_000_000:
        raise GridTooLargeError(
            f"grid with D={resolution}, n={n} has {count} points (limit 10^7)"
        )
    best_val = -math.inf
    best_x: np.ndarray | None = None
    chunk: list[list[int]] = []
    chunk_size = 200_000

    def flush():
        nonlocal best_val, best_x
        if not chunk:
            return
        pts = np.asarray(chunk, dtype=float) / resolution
        vals = _eval_batch(h, coeffs, pts)
        k = int(np.argmax(vals))
        if vals[k] > best_val:
            best_val = float(vals[k])
            best_x = pts[k].copy()
        chunk.clear()

    for counts in _grid_points(n, resolution):
        chunk.append(counts)
        if len(chunk) >= chunk_size:
            flush()
    flush()
    assert best_x is not None
    return best_val, best_x


def support_pair_cover(h: Hypergraph, result: OptimizationResult) -> bool:
    """Whether every support pair lies jointly inside some edge."""
    covered: set[tuple[int, int]] = set()
    for e in h.edges():
        for p in itertools.combinations(e, 2):
            covered.add(p)
    for p in itertools.combinations(result.support, 2):
        if p not in covered:
            return False
    return True
