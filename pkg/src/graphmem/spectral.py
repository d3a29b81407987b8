"""Adjacency spectra and the spectral conditions they feed.

kappa = max(|lambda_2|, |lambda_N|) is the largest eigenvalue magnitude
away from the top; lambda_1 - kappa is the spectral gap.  Small graphs get
a dense symmetric eigensolve, large ones power iteration with deflation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, adjacency_matrix, degree_stats, DegreeStats

# Dense solves stay cheap up to here; beyond it the iterative path runs.
_DENSE_LIMIT = 4096
_MATVEC_CAP = 100_000


class SpectralSolverError(RuntimeError):
    """Iterative eigensolver failed to reach tolerance within the matvec cap."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class SpectralSummary:
    """Extreme adjacency eigenvalues: lambda1 >= lambda2 >= ... >= lambdaN."""

    lambda1: float
    lambda2: float
    lambdaN: float
    kappa: float
    gap: float
    method: str          # "dense" | "iterative"
    residual: float


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a one-sided spectral condition check.

    holds is margin > 0 with margin = lhs - rhs; constant_used echoes the
    multiplicative constant the caller picked.
    """

    holds: bool
    lhs: float
    rhs: float
    margin: float
    constant_used: float


@dataclass(frozen=True)
class BoundReport:
    """Edge-count and top-eigenvalue bounds for an induced pair of vertex
    sets (I, J) against the host spectrum."""

    e_count: int
    e_bound: float
    lambda_h: float
    lambda_bound: float
    edge_ok: bool
    eigen_ok: bool
    rho: float
    rho_prime: float

    @property
    def holds(self) -> bool:
        return self.edge_ok and self.eigen_ok


def spectrum_summary(g: Graph, tol: float = 1e-8, method: str = "auto") -> SpectralSummary:
    """Compute lambda1, lambda2, lambdaN, kappa and the gap of g's adjacency.

    Parameters
    ----------
    g : Graph
    tol : float
        Target absolute accuracy, relative to max(1, lambda1).
    method : str
        "dense", "iterative", or "auto" (dense for n <= 4096).

    Raises
    ------
    SpectralSolverError
        If the iterative path fails to converge within its matvec cap.
    """
    if method == "auto":
        method = "dense" if g.n <= _DENSE_LIMIT else "iterative"
    if g.edge_count == 0:
        return SpectralSummary(0.0, 0.0, 0.0, 0.0, 0.0, method, 0.0)
    if method == "dense":
        a = adjacency_matrix(g, dense=True)
        ev = np.linalg.eigvalsh(a)
        lam1 = float(ev[-1])
        lam2 = float(ev[-2]) if g.n >= 2 else lam1
        lamn = float(ev[0])
        residual = float(np.finfo(float).eps * g.n * max(1.0, abs(lam1)))
    elif method == "iterative":
        lam1, lam2, lamn, residual = _extreme_eigs_iterative(g, tol)
    else:
        raise ValueError(f"unknown method {method!r}")
    kappa = max(abs(lam2), abs(lamn)) if g.n >= 2 else 0.0
    return SpectralSummary(
        lambda1=lam1, lambda2=lam2, lambdaN=lamn, kappa=kappa,
        gap=lam1 - kappa, method=method, residual=residual,
    )


def _extreme_eigs_iterative(g: Graph, tol: float) -> tuple[float, float, float, float]:
    """Power iteration for lambda1, deflated for lambda2, and iteration on
    lambda1*I - A for lambdaN.

    The first two passes step with A + m*I (m = max degree), whose spectrum
    is non-negative, so the target eigenvalue strictly dominates in
    magnitude and the signed second-largest comes out of the deflated pass.
    Residuals are measured against A itself and the stop thresholds scale
    with max(1, |lambda1|).
    """
    a = adjacency_matrix(g)
    shift = float(g.degrees.max())
    state = {"left": _MATVEC_CAP}
    rng = np.random.default_rng(0x5EED)

    def power(step, project, target, scale_of):
        v = rng.standard_normal(g.n)
        if project is not None:
            v = project(v)
        v = v / np.linalg.norm(v)
        res = math.inf
        lam = 0.0
        while state["left"] > 0:
            state["left"] -= 1
            av = a @ v
            lam = float(v @ av)
            res = float(np.linalg.norm(av - lam * v))
            if res <= target * scale_of(lam):
                return lam, v, res
            w = step(av, v)
            if project is not None:
                w = project(w)
            nw = float(np.linalg.norm(w))
            if nw < 1e-300:
                # step annihilated the iterate: v is already an exact
                # eigenvector of the projected operator
                return lam, v, res
            v = w / nw
        raise SpectralSolverError("matvec cap exhausted", res)

    def up(av, v):
        return av + shift * v

    # v1 is driven tighter than tol so deflation crumbs stay irrelevant
    lam1, v1, r1 = power(up, None, 0.05 * tol, lambda lam: max(1.0, abs(lam)))
    scale1 = max(1.0, abs(lam1))

    def drop_v1(x):
        return x - (v1 @ x) * v1

    lam2, _, r2 = power(up, drop_v1, 0.3 * tol, lambda lam: scale1)

    def down(av, v):
        return lam1 * v - av

    lamn, _, r3 = power(down, None, 0.3 * tol, lambda lam: scale1)
    return lam1, lam2, lamn, max(r1, r2, r3)


def check_h1(s: SpectralSummary, d: DegreeStats, c1: float) -> ConditionReport:
    """Minimum-degree condition: delta > c1 * lambda1 with c1 in (0, 1)."""
    if not 0.0 < c1 < 1.0:
        raise ValueError("c1 must lie in (0, 1)")
    lhs = float(d.delta)
    rhs = c1 * s.lambda1
    return ConditionReport(holds=lhs - rhs > 0, lhs=lhs, rhs=rhs,
                           margin=lhs - rhs, constant_used=c1)


def check_h2(s: SpectralSummary, n: int, c: float) -> ConditionReport:
    """Gap condition: lambda1 > c * log(n) * kappa."""
    if c <= 0:
        raise ValueError("c must be positive")
    if n < 2:
        raise ValueError("n must be >= 2")
    lhs = s.lambda1
    rhs = c * math.log(n) * s.kappa
    return ConditionReport(holds=lhs - rhs > 0, lhs=lhs, rhs=rhs,
                           margin=lhs - rhs, constant_used=c)


def subgraph_bounds(g: Graph, s: SpectralSummary, I, J) -> BoundReport:
    """Check the two (I, J) subgraph bounds against the host spectrum.

    With rho = |I|/n and rho' = |J|/n:

      e(J, I) <= [rho*rho'*lambda1 + sqrt(rho*rho')*kappa] * n,

    where e(J, I) counts ordered pairs (j in J, k in I) joined by an edge
    (an edge inside I and J counts twice), and

      lambda1(H) <= 2 * [sqrt(rho*rho')*lambda1 + (1 - sqrt(rho*rho'))*kappa],

    where H is the undirected graph on the edges with one endpoint in J and
    the other in I.
    """
    I = np.asarray(I, dtype=np.int64)
    J = np.asarray(J, dtype=np.int64)
    if I.size == 0 or J.size == 0:
        raise ValueError("I and J must be non-empty")
    for name, S in (("I", I), ("J", J)):
        if np.unique(S).size != S.size:
            raise ValueError(f"{name} has repeated vertices")
        if S.min() < 0 or S.max() >= g.n:
            raise ValueError(f"{name} has a vertex out of range")
    in_i = np.zeros(g.n, dtype=bool)
    in_i[I] = True
    in_j = np.zeros(g.n, dtype=bool)
    in_j[J] = True

    src, dst = np.repeat(np.arange(g.n), np.diff(g.indptr)), g.indices
    hit = in_j[src] & in_i[dst]
    e_count = int(np.count_nonzero(hit))

    rho = I.size / g.n
    rho_p = J.size / g.n
    root = math.sqrt(rho * rho_p)
    e_bound = (rho * rho_p * s.lambda1 + root * s.kappa) * g.n
    lam_bound = 2.0 * (root * s.lambda1 + (1.0 - root) * s.kappa)

    # H keeps each crossing edge once, symmetrized; isolated vertices do
    # not move the top eigenvalue, so solve on the support only
    eu = np.concatenate([src[hit], dst[hit]])
    ev = np.concatenate([dst[hit], src[hit]])
    if eu.size == 0:
        lam_h = 0.0
    else:
        support, inv = np.unique(np.concatenate([eu, ev]), return_inverse=True)
        k = support.size
        h = np.zeros((k, k))
        h[inv[:eu.size], inv[eu.size:]] = 1.0
        lam_h = float(np.linalg.eigvalsh(h)[-1])

    # float slop on the count comparison only guards against roundoff in
    # the bound itself; the count is exact
    return BoundReport(
        e_count=e_count, e_bound=e_bound, lambda_h=lam_h, lambda_bound=lam_bound,
        edge_ok=e_count <= e_bound + 1e-9, eigen_ok=lam_h <= lam_bound + 1e-9,
        rho=rho, rho_prime=rho_p,
    )
