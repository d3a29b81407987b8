"""Entropy helpers and empirical checks of the concentration bounds.

The quadratic form S = sum_{{i,j} in E} X_i X_j over i.i.d. +-1 signs
satisfies E[exp(tS)] <= exp(l t^2 / (2 (1 - lambda1 t))) for
0 <= t < 1/lambda1 (l = |E|), and hence
P[S > y] <= exp(-y^2 / (2 (l + lambda1 y))).  Both hold deterministically
for every graph, so the checkers here enumerate all sign vectors when n is
small and fall back to seeded Monte Carlo with confidence intervals above.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, adjacency_matrix, gen_erdos_renyi
from .spectral import SpectralSummary

# 2^16 states is the largest full enumeration worth doing
_EXHAUSTIVE_LIMIT = 16


def entropy(x: float) -> float:
    """Binary entropy h(x) = -x log x - (1-x) log(1-x) in nats, with
    h(0) = h(1) = 0 by continuity."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("entropy argument must lie in [0, 1]")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log(x) - (1.0 - x) * math.log(1.0 - x)


def rel_entropy(a: float, p: float) -> float:
    """Relative entropy H(a, p) = a log(a/p) + (1-a) log((1-a)/(1-p))
    between Bernoulli(a) and Bernoulli(p), both in the open interval."""
    if not (0.0 < a < 1.0 and 0.0 < p < 1.0):
        raise ValueError("rel_entropy arguments must lie in (0, 1)")
    return a * math.log(a / p) + (1.0 - a) * math.log((1.0 - a) / (1.0 - p))


def wilson_interval(successes: int, trials: int, z: float = 1.959964) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 <= successes <= trials:
        raise ValueError("successes out of range")
    phat = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class TailReport:
    """Empirical vs analytic survival of the edge quadratic form."""

    y_grid: np.ndarray
    empirical: np.ndarray      # columns: estimate, ci_lo, ci_hi
    analytic: np.ndarray
    violations: int
    method: str                # "exhaustive" | "monte_carlo"
    samples: int


@dataclass(frozen=True)
class MgfReport:
    """Empirical vs analytic moment generating function of the form."""

    t_grid: np.ndarray
    empirical: np.ndarray      # columns: estimate, ci_lo, ci_hi
    analytic: np.ndarray
    violations: int
    method: str
    samples: int


@dataclass(frozen=True)
class DegreeTailReport:
    """Frequencies of extreme-degree events in G(n, p) against the
    union-bound predictions."""

    n: int
    p: float
    trials: int
    epsilon: float
    upper_threshold: float
    lower_threshold: float
    max_exceed_freq: float
    max_exceed_ci: tuple[float, float]
    min_exceed_freq: float
    min_exceed_ci: tuple[float, float]
    upper_bound: float | None
    lower_bound: float | None
    in_validity_range: bool
    violations: int


def _all_sign_states(n: int) -> np.ndarray:
    codes = np.arange(2 ** n, dtype=np.uint32)[:, np.newaxis]
    bits = (codes >> np.arange(n, dtype=np.uint32)) & 1
    return (bits.astype(np.int8) * 2 - 1)


def _form_values(g: Graph, x: np.ndarray) -> np.ndarray:
    """S(x) = (1/2) x^T A x for each row of x, exact integers as floats."""
    a = adjacency_matrix(g, dense=True)
    return 0.5 * np.einsum("bi,bi->b", x @ a, x.astype(np.float64))


def _sample_form(g: Graph, samples: int, rng) -> np.ndarray:
    a = adjacency_matrix(g, dense=True)
    out = np.empty(samples)
    chunk = max(1, int(5e6) // max(g.n, 1))
    for lo in range(0, samples, chunk):
        hi = min(lo + chunk, samples)
        x = (rng.integers(0, 2, size=(hi - lo, g.n), dtype=np.int8) * 2 - 1).astype(np.float64)
        out[lo:hi] = 0.5 * np.einsum("bi,bi->b", x @ a, x)
    return out


def tail_bound(y: float, l: int, lambda1: float) -> float:
    """exp(-y^2 / (2 (l + lambda1 y))) for y > 0."""
    if y <= 0:
        raise ValueError("y must be positive")
    return math.exp(-y * y / (2.0 * (l + lambda1 * y)))


def mgf_bound(t: float, l: int, lambda1: float) -> float:
    """exp(l t^2 / (2 (1 - lambda1 t))) for 0 <= t < 1/lambda1."""
    if t < 0 or lambda1 * t >= 1.0:
        raise ValueError("t must lie in [0, 1/lambda1)")
    if t == 0.0:
        return 1.0
    return math.exp(l * t * t / (2.0 * (1.0 - lambda1 * t)))


def quadratic_form_tail(g: Graph, s: SpectralSummary, y_grid, samples: int,
                        seed, z: float = 1.959964) -> TailReport:
    """Compare P[S > y] on a grid against the analytic tail bound.

    Exact enumeration when n <= 16, otherwise Monte Carlo with Wilson
    intervals; a grid point counts as violated when the lower confidence
    limit (or the exact value) exceeds the bound.
    """
    y_grid = np.asarray(y_grid, dtype=float)
    if np.any(y_grid <= 0):
        raise ValueError("y grid must be positive")
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    l = g.edge_count
    analytic = np.array([tail_bound(y, l, s.lambda1) for y in y_grid])
    if g.n <= _EXHAUSTIVE_LIMIT:
        vals = _form_values(g, _all_sign_states(g.n))
        p_exact = np.array([np.count_nonzero(vals > y) / vals.size for y in y_grid])
        emp = np.column_stack([p_exact, p_exact, p_exact])
        violations = int(np.count_nonzero(p_exact > analytic))
        return TailReport(y_grid, emp, analytic, violations, "exhaustive", int(vals.size))
    rng = np.random.default_rng(seed)
    vals = _sample_form(g, samples, rng)
    rows = []
    violations = 0
    for y, bound in zip(y_grid, analytic):
        k = int(np.count_nonzero(vals > y))
        lo, hi = wilson_interval(k, samples, z)
        rows.append((k / samples, lo, hi))
        if lo > bound:
            violations += 1
    return TailReport(y_grid, np.asarray(rows), analytic, violations,
                      "monte_carlo", samples)


def mgf_check(g: Graph, s: SpectralSummary, t_grid, samples: int, seed,
              z: float = 1.959964, batches: int = 100) -> MgfReport:
    """Compare E[exp(tS)] on a grid against the analytic bound.

    Every t must satisfy 0 <= t < 1/lambda1.  The Monte Carlo path gets its
    confidence interval from batch means (default 100 batches).
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    l = g.edge_count
    for t in t_grid:
        if t < 0 or s.lambda1 * t >= 1.0:
            raise ValueError(f"t={t} outside [0, 1/lambda1)")
    analytic = np.array([mgf_bound(t, l, s.lambda1) for t in t_grid])
    if g.n <= _EXHAUSTIVE_LIMIT:
        vals = _form_values(g, _all_sign_states(g.n))
        exact = np.array([np.mean(np.exp(t * vals)) for t in t_grid])
        emp = np.column_stack([exact, exact, exact])
        violations = int(np.count_nonzero(exact > analytic))
        return MgfReport(t_grid, emp, analytic, violations, "exhaustive", int(vals.size))
    if samples < batches:
        raise ValueError("need at least one sample per batch")
    rng = np.random.default_rng(seed)
    vals = _sample_form(g, samples, rng)
    use = (samples // batches) * batches
    per_batch = vals[:use].reshape(batches, -1)
    rows = []
    violations = 0
    for t, bound in zip(t_grid, analytic):
        means = np.exp(t * per_batch).mean(axis=1)
        est = float(means.mean())
        half = z * float(means.std(ddof=1)) / math.sqrt(batches)
        rows.append((est, est - half, est + half))
        if est - half > bound:
            violations += 1
    return MgfReport(t_grid, np.asarray(rows), analytic, violations,
                     "monte_carlo", samples)


def degree_tail_experiment(n: int, p: float, trials: int, seed,
                           z: float = 1.959964) -> DegreeTailReport:
    """Sample G(n, p) repeatedly and record how often the max degree reaches
    (1+eps)pn or the min degree drops to (1-eps)pn, eps = 2 sqrt(log n / (p n)).

    The analytic prediction for either event is n * exp(-n * H(b, p)) with
    b the rescaled threshold; when eps >= 1 or (1+eps)p >= 1 the thresholds
    leave the formula's validity range, which is flagged rather than failed.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 0.0 < p <= 1.0:
        raise ValueError("p must lie in (0, 1]")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    eps = 2.0 * math.sqrt(math.log(n) / (p * n))
    up_t = (1.0 + eps) * p * n
    lo_t = (1.0 - eps) * p * n
    hi_hits = 0
    lo_hits = 0
    root = np.random.SeedSequence(seed)
    for t in range(trials):
        g = gen_erdos_renyi(n, p, np.random.default_rng(root.spawn(1)[0]))
        d = g.degrees
        if int(d.max()) >= up_t:
            hi_hits += 1
        if int(d.min()) <= lo_t:
            lo_hits += 1
    a_up = (1.0 + eps) * p
    a_lo = (1.0 - eps) * p
    valid = 0.0 < a_lo and a_up < 1.0 and p < 1.0
    upper_bound = n * math.exp(-n * rel_entropy(a_up, p)) if (p < 1.0 and a_up < 1.0) else None
    lower_bound = n * math.exp(-n * rel_entropy(a_lo, p)) if (p < 1.0 and a_lo > 0.0) else None
    up_ci = wilson_interval(hi_hits, trials, z)
    lo_ci = wilson_interval(lo_hits, trials, z)
    violations = 0
    if upper_bound is not None and up_ci[0] > upper_bound:
        violations += 1
    if lower_bound is not None and lo_ci[0] > lower_bound:
        violations += 1
    return DegreeTailReport(
        n=n, p=p, trials=trials, epsilon=eps,
        upper_threshold=up_t, lower_threshold=lo_t,
        max_exceed_freq=hi_hits / trials, max_exceed_ci=up_ci,
        min_exceed_freq=lo_hits / trials, min_exceed_ci=lo_ci,
        upper_bound=upper_bound, lower_bound=lower_bound,
        in_validity_range=valid, violations=violations,
    )
