"""Corrupted-retrieval experiments and the theoretical capacity predictors.

The predictor M = alpha * lambda1^2 / (m log n) - kappa * lambda1 / m says
how many patterns survive corrupted retrieval; rho_zero, f_rho and the
four contraction sequences bound the error fraction the dynamics must
shrink per step.  The empirical side estimates the largest pattern count M
whose recovery rate from floor(rho*n) uniform flips stays above a
threshold.

Success means exact recovery: the run ends in a fixed point equal to the
target pattern.  Corruption draws are uniform over floor(rho*n)-subsets,
a deliberate relaxation of worst-case corruption over the whole Hamming
sphere; the search additionally spot-checks one structured corruption
(the lowest-degree vertices) per M, the flip pattern that defeats
retrieval on the two-clique graph.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import entropy, wilson_interval
from .graphs import Graph, DegreeStats
from .hopfield import (FieldEngine, PatternSet, corrupt, hamming,
                       run_dynamics, sample_patterns)
from .spectral import SpectralSummary, spectrum_summary

_DIVERGE_CAP = 10_000


@dataclass(frozen=True)
class TheoryParams:
    """Unspecified constants of the theory, exposed rather than hidden.

    alpha is the capacity prefactor (grid-searchable, must stay below
    alpha_c when a placeholder value for it is declared); c1 scales the
    contraction function f, c2 the floor rho_zero, c_steps the sequence
    recursions, and C_iter the step-count safety factor.
    """

    alpha: float = 0.05
    c1: float = 1.0
    c2: float = 1.0
    c_steps: float = 1.0
    C_iter: float = 10.0
    alpha_c: float | None = None

    def __post_init__(self):
        for name in ("alpha", "c1", "c2", "c_steps", "C_iter"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")
        if self.alpha_c is not None and self.alpha >= self.alpha_c:
            raise ValueError("alpha must stay below the declared alpha_c")


_DEFAULTS = TheoryParams()


@dataclass(frozen=True)
class TrialResult:
    recovered: bool
    steps: int
    terminal: str
    target_mu: int
    rho: float
    final_distance: int    # Hamming miss, recorded for diagnostics only


@dataclass(frozen=True)
class RateEstimate:
    rate: float
    ci_lo: float
    ci_hi: float
    successes: int
    trials: int
    mean_steps: float      # over successful trials; nan if none


@dataclass(frozen=True)
class CurvePoint:
    m: int
    trials: int
    successes: int
    rate: float
    ci_lo: float
    ci_hi: float
    mean_steps: float
    spot_ok: bool


@dataclass(frozen=True)
class CapacityEstimate:
    m_hat: int
    threshold: float
    trials_per_m: int
    rho: float
    k_max: int
    curve: list[CurvePoint] = field(default_factory=list)


@dataclass(frozen=True)
class FRhoResult:
    value: float
    branch: str
    branches: dict[str, float]


@dataclass(frozen=True)
class StepPrediction:
    """n0 = max over the four sequences of iterations needed to drop below
    1/n; None with diverged=True if any sequence stops decreasing."""

    n0: int | None
    diverged: bool
    counts: dict[str, int]


def theoretical_capacity(s: SpectralSummary, d: DegreeStats, n: int,
                         alpha: float) -> float:
    """alpha * lambda1^2 / (m log n) - kappa * lambda1 / m.

    Can come out non-positive (kappa term dominating); that regime is
    infeasible for retrieval and reported as-is.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if d.m < 1:
        raise ValueError("graph must have at least one edge")
    return alpha * s.lambda1 ** 2 / (d.m * math.log(n)) - s.kappa * s.lambda1 / d.m


def rho_zero(s: SpectralSummary, d: DegreeStats, M: int,
             params: TheoryParams = _DEFAULTS) -> float:
    """Contraction floor exp(-c2 * lambda1 / (kappa + M m / lambda1))."""
    if M < 1:
        raise ValueError("M must be >= 1")
    if s.lambda1 <= 0:
        raise ValueError("lambda1 must be positive")
    return math.exp(-params.c2 * s.lambda1 / (s.kappa + M * d.m / s.lambda1))


def f_rho(rho: float, s: SpectralSummary, d: DegreeStats, M: int,
          params: TheoryParams = _DEFAULTS) -> FRhoResult:
    """Evaluate the five-branch contraction function

        f(rho) = max{ c1 rho (kappa/lambda1)^2, c1 rho h(rho),
                      c1 (kappa/lambda1) h(rho),
                      c1 rho (M kappa / lambda1^2 * log(1/rho))^(2/3),
                      rho_zero }

    and report which branch attains the max.
    """
    if not 0.0 < rho < 0.5:
        raise ValueError("rho must lie in (0, 1/2)")
    ratio = s.kappa / s.lambda1
    h = entropy(rho)
    branches = {
        "kappa_sq": params.c1 * rho * ratio ** 2,
        "rho_entropy": params.c1 * rho * h,
        "kappa_entropy": params.c1 * ratio * h,
        "pattern_term": params.c1 * rho * (M * s.kappa / s.lambda1 ** 2
                                           * math.log(1.0 / rho)) ** (2.0 / 3.0),
        "rho_zero": rho_zero(s, d, M, params),
    }
    branch = max(branches, key=branches.get)
    return FRhoResult(value=branches[branch], branch=branch, branches=branches)


def predict_steps(s: SpectralSummary, M: int, n: int, rho_start: float,
                  params: TheoryParams = _DEFAULTS,
                  ratio_min: float | None = None) -> StepPrediction:
    """Iterate the four contraction sequences from rho_start down to 1/n.

        w' = c w (kappa/lambda1)^2          x' = c x h(x)
        y' = c (kappa/lambda1) h(y)         z' = c z (M kappa/lambda1^2 log(1/z))^(2/3)

    Each must decrease strictly every iteration; a sequence that fails to,
    or takes more than 10^4 iterations, marks the prediction diverged.
    ratio_min is the required lower bound on lambda1/kappa (default log n).
    """
    if not 0.0 < rho_start <= 1.0 / math.e:
        raise ValueError("rho_start must lie in (0, 1/e]")
    if n < 2:
        raise ValueError("n must be >= 2")
    if M < 1:
        raise ValueError("M must be >= 1")
    if s.lambda1 <= 0:
        raise ValueError("lambda1 must be positive")
    ratio = s.kappa / s.lambda1
    need = math.log(n) if ratio_min is None else ratio_min
    if s.kappa > 0 and s.lambda1 / s.kappa <= need:
        raise ValueError(f"lambda1/kappa = {s.lambda1 / s.kappa:.3g} "
                         f"below the required ratio {need:.3g}")
    c = params.c_steps
    target = 1.0 / n

    def w_next(w):
        return c * w * ratio ** 2

    def x_next(x):
        return c * x * entropy(x)

    def y_next(y):
        return c * ratio * entropy(y)

    def z_next(z):
        return c * z * (M * s.kappa / s.lambda1 ** 2 * math.log(1.0 / z)) ** (2.0 / 3.0)

    counts = {}
    diverged = False
    for name, step in (("w", w_next), ("x", x_next), ("y", y_next), ("z", z_next)):
        val = rho_start
        k = 0
        while val >= target:
            if k >= _DIVERGE_CAP:
                diverged = True
                break
            nxt = step(val)
            if not nxt < val:
                diverged = True
                break
            val = nxt
            k += 1
        counts[name] = k
        if diverged:
            break
    if diverged:
        return StepPrediction(n0=None, diverged=True, counts=counts)
    return StepPrediction(n0=max(counts.values()), diverged=False, counts=counts)


def default_k_max(s: SpectralSummary, n: int,
                  params: TheoryParams = _DEFAULTS) -> int:
    """Step budget: ceil(C * max(log log n, log n / max(log(lambda1 /
    (kappa log n)), 0.1))), the analytic step bound with safety factor C."""
    if n < 3:
        raise ValueError("n must be >= 3")
    log_n = math.log(n)
    if s.kappa > 0:
        arg = s.lambda1 / (s.kappa * log_n)
        denom = max(math.log(arg) if arg > 0 else 0.1, 0.1)
        second = log_n / denom
    else:
        second = 0.0
    return max(1, math.ceil(params.C_iter * max(math.log(log_n), second)))


def _trial_seed(master_seed: int, index: int) -> np.random.SeedSequence:
    # splittable scheme: pure function of (master seed, trial index)
    return np.random.SeedSequence(entropy=(int(master_seed), int(index)))


def basin_trial(g: Graph, p: PatternSet, mu: int, rho: float, k_max: int,
                seed, engine: FieldEngine | None = None) -> TrialResult:
    """Corrupt pattern mu by exactly floor(rho*n) uniform flips, run the
    parallel dynamics, and report exact-recovery success."""
    if not 0 <= mu < p.m_patterns:
        raise ValueError("mu out of range")
    if not 0.0 <= rho < 0.5:
        raise ValueError("rho must lie in [0, 1/2)")
    target = p.pattern(mu)
    start = corrupt(target, rho, seed)
    out = run_dynamics(g, p, start, mode="parallel", k_max=k_max, engine=engine)
    recovered = out.terminal == "fixed_point" and np.array_equal(out.final, target)
    return TrialResult(recovered=recovered, steps=out.steps, terminal=out.terminal,
                       target_mu=mu, rho=rho, final_distance=hamming(out.final, target))


def _run_trials(g, p, rho, k_max, master_seed, indices, engine) -> tuple[int, int, int]:
    """(successes, sum of steps over successes, trials run)."""
    succ = 0
    step_sum = 0
    for t in indices:
        rng = np.random.default_rng(_trial_seed(master_seed, t))
        mu = int(rng.integers(p.m_patterns))
        res = basin_trial(g, p, mu, rho, k_max, rng, engine=engine)
        if res.recovered:
            succ += 1
            step_sum += res.steps
    return succ, step_sum, len(indices)


_POOL_STATE: dict = {}


def _pool_init(g, p, rho, k_max, master_seed):
    _POOL_STATE["args"] = (g, p, rho, k_max, master_seed)
    _POOL_STATE["engine"] = FieldEngine(g, p)


def _pool_chunk(indices):
    g, p, rho, k_max, master_seed = _POOL_STATE["args"]
    return _run_trials(g, p, rho, k_max, master_seed, indices, _POOL_STATE["engine"])


def recovery_rate(g: Graph, p: PatternSet, rho: float, k_max: int,
                  trials: int, seed: int, z: float = 1.959964,
                  workers: int = 1) -> RateEstimate:
    """Success fraction of basin_trial over uniformly drawn (mu, corruption)
    pairs, with a Wilson interval.

    Per-trial seeds are a pure function of (seed, trial index), so the
    result is identical for any worker count; workers only split the index
    range.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    indices = range(trials)
    if workers > 1 and trials > 1:
        chunks = np.array_split(np.arange(trials), min(workers * 4, trials))
        with ProcessPoolExecutor(max_workers=workers, initializer=_pool_init,
                                 initargs=(g, p, rho, k_max, seed)) as pool:
            parts = list(pool.map(_pool_chunk, [c.tolist() for c in chunks]))
        succ = sum(x[0] for x in parts)
        step_sum = sum(x[1] for x in parts)
    else:
        engine = FieldEngine(g, p)
        succ, step_sum, _ = _run_trials(g, p, rho, k_max, seed, indices, engine)
    lo, hi = wilson_interval(succ, trials, z)
    mean_steps = step_sum / succ if succ else math.nan
    return RateEstimate(rate=succ / trials, ci_lo=lo, ci_hi=hi,
                        successes=succ, trials=trials, mean_steps=mean_steps)


def _spot_trial(g: Graph, p: PatternSet, rho: float, k_max: int,
                engine: FieldEngine | None) -> bool:
    """Structured corruption: flip the floor(rho*n) lowest-degree vertices
    (ties by index) of pattern 0.  On the two-clique graph this is the
    corruption that retrieval provably cannot undo."""
    k = int(math.floor(rho * g.n + 1e-9))
    if k == 0:
        return True
    order = np.argsort(g.degrees, kind="stable")
    target = p.pattern(0)
    start = np.array(target, dtype=np.int8)
    start[order[:k]] = -start[order[:k]]
    out = run_dynamics(g, p, start, mode="parallel", k_max=k_max, engine=engine)
    return out.terminal == "fixed_point" and np.array_equal(out.final, target)


def capacity_search(g: Graph, rho: float, k_max: int | None, trials: int,
                    threshold: float, seed: int, z: float = 1.959964,
                    workers: int = 1, m_cap: int | None = None) -> CapacityEstimate:
    """Largest pattern count M with recovery rate >= threshold.

    Doubles M until the rate drops below the threshold (exponential
    bracket), then bisects.  A rate whose confidence interval straddles
    the threshold is re-measured once with 4x trials.  Each M must also
    pass the structured spot trial; a failed spot check counts as a fail
    regardless of the uniform rate.
    """
    if not 0.0 < threshold < 1.0:
        raise ValueError("threshold must lie in (0, 1)")
    if not 0.0 <= rho < 0.5:
        raise ValueError("rho must lie in [0, 1/2)")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if k_max is None:
        k_max = default_k_max(spectrum_summary(g), g.n)
    if m_cap is None:
        m_cap = max(4, 4 * g.n)

    curve: dict[int, CurvePoint] = {}

    def passes(m: int) -> bool:
        pat_seed = np.random.SeedSequence(entropy=(seed, m, 1))
        p = sample_patterns(m, g.n, pat_seed)
        engine = FieldEngine(g, p)
        rate_seed = int(np.random.SeedSequence(entropy=(seed, m, 2)).generate_state(1)[0])
        est = recovery_rate(g, p, rho, k_max, trials, rate_seed, z=z, workers=workers)
        if est.ci_lo <= threshold <= est.ci_hi:
            retry_seed = int(np.random.SeedSequence(entropy=(seed, m, 3)).generate_state(1)[0])
            est = recovery_rate(g, p, rho, k_max, 4 * trials, retry_seed, z=z,
                                workers=workers)
        spot_ok = _spot_trial(g, p, rho, k_max, engine)
        curve[m] = CurvePoint(m=m, trials=est.trials, successes=est.successes,
                              rate=est.rate, ci_lo=est.ci_lo, ci_hi=est.ci_hi,
                              mean_steps=est.mean_steps, spot_ok=spot_ok)
        return spot_ok and est.rate >= threshold

    lo = 0
    m = 1
    while m <= m_cap and passes(m):
        lo = m
        m *= 2
    if lo == 0:
        points = sorted(curve.values(), key=lambda c: c.m)
        return CapacityEstimate(m_hat=0, threshold=threshold, trials_per_m=trials,
                                rho=rho, k_max=k_max, curve=points)
    hi = m  # first failing M (or just beyond the cap)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid > m_cap:
            break
        if passes(mid):
            lo = mid
        else:
            hi = mid
    points = sorted(curve.values(), key=lambda c: c.m)
    m_hat = max((c.m for c in points if c.spot_ok and c.rate >= threshold), default=0)
    return CapacityEstimate(m_hat=m_hat, threshold=threshold, trials_per_m=trials,
                            rho=rho, k_max=k_max, curve=points)
