"""Sign-field dynamics for pattern storage on a graph.

States are +-1 int8 vectors.  With patterns xi^1..xi^M, the local field at
vertex i is

    h_i(sigma) = sum_j a_ij sigma_j sum_mu xi_i^mu xi_j^mu,

an exact integer.  The parallel map T flips every spin to sgn(h_i)
simultaneously (sgn(0) = +1); the sequential sweep S applies the same rule
vertex by vertex in index order.  Energies use the 1/n normalization:
H_S = -(1/n) sum_{i,j} sigma_i sigma_j a_ij sum_mu xi_i xi_j over ordered
pairs, H_T = -(1/n) sum_i |h_i|.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graphs import Graph

# Crossover pattern count: below it fields are recomputed from the patterns
# each step, above it the per-edge pattern products get cached up front.
_CACHE_MIN_PATTERNS = 64


@dataclass(frozen=True)
class PatternSet:
    """M stored patterns as rows of an (M, n) +-1 int8 matrix."""

    bits: np.ndarray

    def __post_init__(self):
        self.bits.setflags(write=False)

    @property
    def m_patterns(self) -> int:
        return self.bits.shape[0]

    @property
    def n(self) -> int:
        return self.bits.shape[1]

    def pattern(self, mu: int) -> np.ndarray:
        return self.bits[mu]


@dataclass(frozen=True)
class DynamicsOutcome:
    terminal: str          # "fixed_point" | "two_cycle" | "step_cap"
    steps: int
    final: np.ndarray
    energy_trace: np.ndarray


def sample_patterns(m: int, n: int, seed) -> PatternSet:
    """Draw m independent uniform +-1 patterns of length n."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    rng = np.random.default_rng(seed)
    bits = (rng.integers(0, 2, size=(m, n), dtype=np.int8) * 2 - 1).astype(np.int8)
    return PatternSet(bits)


class FieldEngine:
    """Exact integer local-field evaluator for a fixed (graph, patterns) pair.

    mode "direct" computes sum_mu xi^mu (.) A (xi^mu (.) sigma) each call,
    O(M|E|) per step with no setup.  mode "cached" precomputes the per-edge
    weights sum_mu xi_i xi_j once (O(M|E|)), after which a step is a single
    integer matvec, O(|E|).  "auto" caches when M exceeds the crossover,
    which is the right call whenever several steps share the engine.
    """

    def __init__(self, g: Graph, p: PatternSet, mode: str = "auto"):
        if p.n != g.n:
            raise ValueError(f"patterns have length {p.n}, graph has {g.n} vertices")
        m_deg = int(g.degrees.max()) if g.n else 0
        if p.m_patterns * max(m_deg, 1) >= 2 ** 31:
            raise ValueError("pattern count times max degree overflows the field budget")
        if mode == "auto":
            mode = "cached" if p.m_patterns > _CACHE_MIN_PATTERNS else "direct"
        if mode not in ("direct", "cached"):
            raise ValueError(f"unknown mode {mode!r}")
        self.g = g
        self.p = p
        self.mode = mode
        if mode == "cached":
            self._adj = sp.csr_matrix(
                (self._edge_weights(), g.indices, g.indptr), shape=(g.n, g.n))
        else:
            ones = np.ones(g.indices.size, dtype=np.int64)
            self._adj = sp.csr_matrix((ones, g.indices, g.indptr), shape=(g.n, g.n))

    def _edge_weights(self) -> np.ndarray:
        """Per-arc pattern products, aligned with g.indices."""
        bits = self.p.bits
        src = np.repeat(np.arange(self.g.n, dtype=np.int64), np.diff(self.g.indptr))
        dst = self.g.indices
        out = np.empty(dst.size, dtype=np.int64)
        chunk = max(1, int(4e6 // max(bits.shape[0], 1)))
        for lo in range(0, dst.size, chunk):
            hi = min(lo + chunk, dst.size)
            prod = bits[:, src[lo:hi]] * bits[:, dst[lo:hi]]
            out[lo:hi] = prod.sum(axis=0, dtype=np.int64)
        return out

    def fields(self, s: np.ndarray) -> np.ndarray:
        """h_i(s) for every vertex, exact int64."""
        if self.mode == "cached":
            return self._adj @ s.astype(np.int64)
        masked = (self.p.bits * s[np.newaxis, :]).astype(np.int64)
        z = self._adj @ masked.T            # (n, M)
        return np.einsum("mn,nm->n", self.p.bits.astype(np.int64), z)

    def field_at(self, s: np.ndarray, i: int) -> int:
        """h_i(s) for a single vertex."""
        g = self.g
        nbrs = g.indices[g.indptr[i]:g.indptr[i + 1]]
        if self.mode == "cached":
            w = self._adj.data[g.indptr[i]:g.indptr[i + 1]]
            return int(np.dot(w, s[nbrs].astype(np.int64)))
        bits = self.p.bits
        t = bits[:, nbrs].astype(np.int64) @ s[nbrs].astype(np.int64)
        return int(np.dot(bits[:, i].astype(np.int64), t))


def local_field(g: Graph, p: PatternSet, s, i: int) -> int:
    return FieldEngine(g, p, mode="direct").field_at(np.asarray(s, dtype=np.int8), i)


def _sign(h: np.ndarray) -> np.ndarray:
    # sgn(0) = +1 by convention
    return np.where(h >= 0, 1, -1).astype(np.int8)


def parallel_step(g: Graph, p: PatternSet, s, engine: FieldEngine | None = None) -> np.ndarray:
    """One application of the parallel map T."""
    s = np.asarray(s, dtype=np.int8)
    eng = engine if engine is not None else FieldEngine(g, p, mode="direct")
    return _sign(eng.fields(s))


def sequential_sweep(g: Graph, p: PatternSet, s, engine: FieldEngine | None = None) -> np.ndarray:
    """One full sweep of the sequential map S = T_n ... T_2 T_1: each vertex
    updates in index order seeing all earlier updates."""
    out = np.array(s, dtype=np.int8)
    eng = engine if engine is not None else FieldEngine(g, p, mode="direct")
    for i in range(g.n):
        out[i] = 1 if eng.field_at(out, i) >= 0 else -1
    return out


def energy_S(g: Graph, p: PatternSet, s, engine: FieldEngine | None = None) -> float:
    s = np.asarray(s, dtype=np.int8)
    eng = engine if engine is not None else FieldEngine(g, p, mode="direct")
    h = eng.fields(s)
    return -float(np.dot(s.astype(np.int64), h)) / g.n


def energy_T(g: Graph, p: PatternSet, s, engine: FieldEngine | None = None) -> float:
    s = np.asarray(s, dtype=np.int8)
    eng = engine if engine is not None else FieldEngine(g, p, mode="direct")
    return -float(np.abs(eng.fields(s)).sum()) / g.n


def run_dynamics(g: Graph, p: PatternSet, s0, mode: str = "parallel",
                 k_max: int = 1000, engine: FieldEngine | None = None) -> DynamicsOutcome:
    """Iterate the dynamics from s0 until a fixed point, a 2-cycle (parallel
    mode only), or the step cap.

    steps counts update applications performed, so a start that is already
    a fixed point reports steps=1 (the detecting application).  The energy
    trace holds H_T (parallel) or H_S (sequential) for every visited state
    including the start.
    """
    if mode not in ("parallel", "sequential"):
        raise ValueError(f"unknown mode {mode!r}")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    s = np.array(s0, dtype=np.int8)
    if s.size != g.n:
        raise ValueError("state length does not match graph")
    if not np.all(np.abs(s) == 1):
        raise ValueError("state entries must be +-1")
    eng = engine if engine is not None else FieldEngine(g, p)
    trace = []
    if mode == "parallel":
        prev = None
        for k in range(1, k_max + 1):
            h = eng.fields(s)
            trace.append(-float(np.abs(h).sum()) / g.n)
            nxt = _sign(h)
            if np.array_equal(nxt, s):
                trace.append(trace[-1])
                return DynamicsOutcome("fixed_point", k, nxt, np.asarray(trace))
            if prev is not None and np.array_equal(nxt, prev):
                trace.append(trace[-2])
                return DynamicsOutcome("two_cycle", k, nxt, np.asarray(trace))
            prev = s
            s = nxt
        trace.append(-float(np.abs(eng.fields(s)).sum()) / g.n)
        return DynamicsOutcome("step_cap", k_max, s, np.asarray(trace))
    # sequential
    for k in range(1, k_max + 1):
        trace.append(-float(np.dot(s.astype(np.int64), eng.fields(s))) / g.n)
        nxt = sequential_sweep(g, p, s, engine=eng)
        if np.array_equal(nxt, s):
            trace.append(trace[-1])
            return DynamicsOutcome("fixed_point", k, nxt, np.asarray(trace))
        s = nxt
    trace.append(-float(np.dot(s.astype(np.int64), eng.fields(s))) / g.n)
    return DynamicsOutcome("step_cap", k_max, s, np.asarray(trace))


def hamming(a, b) -> int:
    """d_H(a, b) = (n - <a, b>) / 2 = number of disagreeing coordinates."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError("states differ in length")
    return int(np.count_nonzero(a != b))


def corrupt(s, rho: float, seed) -> np.ndarray:
    """Flip exactly floor(rho * n) coordinates, chosen uniformly without
    replacement."""
    if not 0.0 <= rho <= 1.0:
        raise ValueError("rho must lie in [0, 1]")
    s = np.array(s, dtype=np.int8)
    # the 1e-9 absorbs representation error in rho*n (e.g. 0.29 * 100)
    k = int(math.floor(rho * s.size + 1e-9))
    if k:
        rng = np.random.default_rng(seed)
        idx = rng.choice(s.size, size=k, replace=False)
        s[idx] = -s[idx]
    return s


def stability_margin(g: Graph, p: PatternSet, mu: int,
                     engine: FieldEngine | None = None) -> int:
    """min_i xi_i^mu h_i(xi^mu): positive iff pattern mu is a strict fixed
    point of T.  With a single stored pattern this equals the minimum
    degree."""
    if not 0 <= mu < p.m_patterns:
        raise ValueError("pattern index out of range")
    eng = engine if engine is not None else FieldEngine(g, p, mode="direct")
    xi = p.pattern(mu)
    h = eng.fields(xi)
    return int((xi.astype(np.int64) * h).min())
