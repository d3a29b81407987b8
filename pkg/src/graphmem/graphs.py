"""Graph architectures: generators, degree statistics, and edge-list I/O.

All graphs are finite, undirected and simple (no loops, no multi-edges),
stored in CSR form with sorted neighbor lists.  Vertex labels are 0-based
integers.  Randomized generators take an explicit seed and are
deterministic given it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Above this vertex count the O(n^2) per-pair samplers switch to
# geometric-skipping samplers with the same edge distribution.
_PAIRWISE_LIMIT = 10_000


class EdgeListParseError(ValueError):
    """Malformed edge-list file.  Carries the offending 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class InfeasibleWeightsError(ValueError):
    """Weight sequence would assign some pair an edge probability >= 1."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph in CSR form.

    The neighbors of vertex ``i`` are ``indices[indptr[i]:indptr[i+1]]``,
    sorted ascending.  Every undirected edge {i, j} appears twice, once in
    each endpoint's list.  Arrays are read-only; a Graph never mutates.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    degrees: np.ndarray

    def __post_init__(self):
        for a in (self.indptr, self.indices, self.degrees):
            a.setflags(write=False)

    @property
    def edge_count(self) -> int:
        return self.indices.size // 2

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class DegreeStats:
    """Degree summary: min, max, average, and the size-biased average
    d_tilde = sum(d_i^2) / sum(d_i) (0 for an edgeless graph)."""

    delta: int
    m: int
    d_avg: float
    d_tilde: float
    edge_count: int


@dataclass(frozen=True)
class WeightSequence:
    """Expected-degree sequence for the random graph model G(w).

    Pair {i, j} is an edge with probability rho_norm * w_i * w_j, where
    rho_norm = 1 / sum(w).  Feasibility requires max(w)^2 < sum(w).
    ``i0``, ``c`` and ``beta`` record the power-law parameterization when
    there is one; hand-built sequences leave them at None.
    """

    weights: np.ndarray
    rho_norm: float
    i0: int | None = None
    c: float | None = None
    beta: float | None = None

    def __post_init__(self):
        self.weights.setflags(write=False)

    @property
    def n(self) -> int:
        return self.weights.size

    @property
    def expected_avg_degree(self) -> float:
        return float(self.weights.sum() / self.weights.size)

    @property
    def expected_max_degree(self) -> float:
        return float(self.weights.max())


def make_weights(weights, i0=None, c=None, beta=None) -> WeightSequence:
    """Validate a weight sequence and attach its normalization.

    Weights must be non-negative, non-increasing, with at least one
    positive entry, and satisfy the feasibility condition
    max(w)^2 < sum(w) so that every pair probability stays below 1.
    """
    w = np.array(weights, dtype=float)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("weights must be a non-empty 1-d sequence")
    if np.any(w < 0):
        raise ValueError("weights must be non-negative")
    if np.any(np.diff(w) > 0):
        raise ValueError("weights must be non-increasing")
    total = float(w.sum())
    if total <= 0:
        raise ValueError("weights must contain a positive entry")
    if float(w[0]) ** 2 >= total:
        raise InfeasibleWeightsError(
            f"max weight squared {w[0] ** 2:.6g} >= total weight {total:.6g}"
        )
    return WeightSequence(w, rho_norm=1.0 / total, i0=i0, c=c, beta=beta)


def _from_pairs(n: int, u: np.ndarray, v: np.ndarray) -> Graph:
    """Build CSR arrays from unique undirected pairs (u[k] < v[k])."""
    src = np.concatenate([u, v])
    dst = np.concatenate([v, u])
    order = np.lexsort((dst, src))
    src = src[order]
    dst = dst[order]
    degrees = np.bincount(src, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    return Graph(n=n, indptr=indptr, indices=dst.astype(np.int64), degrees=degrees)


def gen_complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    indices = np.empty(n * (n - 1), dtype=np.int64)
    row = np.arange(n, dtype=np.int64)
    for i in range(n):
        indices[i * (n - 1):(i + 1) * (n - 1)] = np.concatenate([row[:i], row[i + 1:]])
    degrees = np.full(n, n - 1, dtype=np.int64)
    indptr = np.arange(0, n * (n - 1) + 1, n - 1, dtype=np.int64) if n > 1 \
        else np.zeros(2, dtype=np.int64)
    return Graph(n=n, indptr=indptr, indices=indices, degrees=degrees)


def gen_erdos_renyi(n: int, p: float, seed, method: str = "auto") -> Graph:
    """Erdos-Renyi graph G(n, p): each of the n-choose-2 pairs is an edge
    independently with probability p.

    Parameters
    ----------
    n : int
        Vertex count, >= 1.
    p : float
        Edge probability in [0, 1].
    seed : int or numpy Generator
        Randomness source; a given int seed fixes the graph.
    method : str
        "pairwise" draws one uniform per candidate pair, "skip" uses a
        geometric-skipping sampler (same distribution, O(n + |E|) time),
        "auto" picks by size.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if p == 0.0 or n == 1:
        return _from_pairs(n, np.empty(0, np.int64), np.empty(0, np.int64))
    if p == 1.0:
        return gen_complete(n)
    if method == "auto":
        method = "pairwise" if n <= _PAIRWISE_LIMIT else "skip"
    rng = np.random.default_rng(seed)
    if method == "pairwise":
        us, vs = [], []
        for i in range(n - 1):
            hits = np.nonzero(rng.random(n - 1 - i) < p)[0]
            if hits.size:
                us.append(np.full(hits.size, i, dtype=np.int64))
                vs.append(hits.astype(np.int64) + i + 1)
        u = np.concatenate(us) if us else np.empty(0, np.int64)
        v = np.concatenate(vs) if vs else np.empty(0, np.int64)
    elif method == "skip":
        u, v = _gnp_skip_pairs(n, p, rng)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _from_pairs(n, u, v)


def _gnp_skip_pairs(n: int, p: float, rng) -> tuple[np.ndarray, np.ndarray]:
    """Batagelj-Brandes sampler: jump between successes of a Bernoulli(p)
    stream over the lexicographic pair order, skipping failures in one
    geometric draw."""
    lp = math.log1p(-p)
    us, vs = [], []
    v = 1
    w = -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / lp)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            us.append(w)
            vs.append(v)
    return np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)


def powerlaw_weights(n: int, beta: float, d_avg: float, m_bar: float) -> WeightSequence:
    """Power-law expected-degree sequence with exponent beta, mean degree
    d_avg and max degree m_bar.

    w_i = c * i^(-1/(beta-1)) on the index window i0 .. i0+n-1, with
    c = ((beta-2)/(beta-1)) * d_avg * n^(1/(beta-1)) and
    i0 = n * (d_avg*(beta-2) / (m_bar*(beta-1)))^(beta-1), rounded to the
    nearest integer >= 1.  The resulting fraction of vertices with weight
    >= x decays like x^(1-beta).

    Raises
    ------
    ValueError
        If beta <= 2 or the degree parameters are not 0 < d_avg < m_bar < n.
    InfeasibleWeightsError
        If max(w)^2 >= sum(w).
    """
    if beta <= 2.0:
        raise ValueError("beta must exceed 2")
    if not (0.0 < d_avg < m_bar < n):
        raise ValueError("need 0 < d_avg < m_bar < n")
    inv = 1.0 / (beta - 1.0)
    c = (beta - 2.0) / (beta - 1.0) * d_avg * n ** inv
    i0_real = n * (d_avg * (beta - 2.0) / (m_bar * (beta - 1.0))) ** (beta - 1.0)
    i0 = max(1, int(math.floor(i0_real + 0.5)))
    idx = i0 + np.arange(n, dtype=np.float64)
    w = c * idx ** (-inv)
    seq = make_weights(w, i0=i0, c=c, beta=beta)
    return seq


def gen_chung_lu(w: WeightSequence, seed, method: str = "auto") -> Graph:
    """Random graph G(w) with independent edges P[{i,j}] = rho * w_i * w_j.

    Self-pairs are never considered, so vertex i has expected degree
    w_i * (1 - rho * w_i), which is w_i up to the excluded self-loop term.

    The "skip" method is the Miller-Hagberg sampler; it needs the weights
    sorted non-increasing (guaranteed by WeightSequence) and runs in
    O(n + |E|) expected time with the exact same edge distribution as the
    per-pair method.
    """
    n = w.n
    weights = w.weights
    rho = w.rho_norm
    if method == "auto":
        method = "pairwise" if n <= _PAIRWISE_LIMIT else "skip"
    rng = np.random.default_rng(seed)
    if method == "pairwise":
        us, vs = [], []
        for i in range(n - 1):
            if weights[i] == 0.0:
                break  # non-increasing: everything after is zero too
            probs = rho * weights[i] * weights[i + 1:]
            hits = np.nonzero(rng.random(n - 1 - i) < probs)[0]
            if hits.size:
                us.append(np.full(hits.size, i, dtype=np.int64))
                vs.append(hits.astype(np.int64) + i + 1)
        u = np.concatenate(us) if us else np.empty(0, np.int64)
        v = np.concatenate(vs) if vs else np.empty(0, np.int64)
    elif method == "skip":
        u, v = _chung_lu_skip_pairs(weights, rho, rng)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _from_pairs(n, u, v)


def _chung_lu_skip_pairs(weights, rho, rng) -> tuple[np.ndarray, np.ndarray]:
    """Miller-Hagberg sampler: within row i, skip ahead geometrically using
    the current probability as an upper bound (valid since weights are
    non-increasing in j), then accept with ratio q/p."""
    n = weights.size
    us, vs = [], []
    for i in range(n - 1):
        wi = weights[i]
        if wi == 0.0:
            break
        j = i + 1
        p = min(rho * wi * weights[j], 1.0)
        while j < n and p > 0.0:
            if p < 1.0:
                j += int(math.log(1.0 - rng.random()) / math.log1p(-p))
            if j >= n:
                break
            q = min(rho * wi * weights[j], 1.0)
            if rng.random() < q / p:
                us.append(i)
                vs.append(j)
            p = q
            j += 1
    return np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64)


def gen_two_cliques(m_small: int, n: int, bridged: bool = False) -> Graph:
    """Disjoint union of K_{m_small} on vertices 0..m_small-1 and
    K_{n-m_small} on the rest, optionally joined by the single bridge edge
    {m_small-1, m_small}."""
    if not 2 <= m_small <= n - 2:
        raise ValueError("need 2 <= m_small <= n - 2")
    us, vs = [], []
    for lo, hi in ((0, m_small), (m_small, n)):
        idx = np.arange(lo, hi, dtype=np.int64)
        iu, iv = np.triu_indices(hi - lo, k=1)
        us.append(idx[iu])
        vs.append(idx[iv])
    if bridged:
        us.append(np.array([m_small - 1], dtype=np.int64))
        vs.append(np.array([m_small], dtype=np.int64))
    return _from_pairs(n, np.concatenate(us), np.concatenate(vs))


def degree_stats(g: Graph) -> DegreeStats:
    d = g.degrees
    total = int(d.sum())
    if total == 0:
        return DegreeStats(delta=int(d.min()) if g.n else 0, m=0, d_avg=0.0,
                           d_tilde=0.0, edge_count=0)
    return DegreeStats(
        delta=int(d.min()),
        m=int(d.max()),
        d_avg=total / g.n,
        d_tilde=float((d.astype(np.float64) ** 2).sum() / total),
        edge_count=total // 2,
    )


def complement(g: Graph) -> Graph:
    """Complement graph: {i,j} is an edge iff it is not one in g.

    Dense O(n^2) construction; meant for moderate n.
    """
    mask = np.zeros((g.n, g.n), dtype=bool)
    src, dst = edge_endpoints(g)
    mask[src, dst] = True
    iu, iv = np.triu_indices(g.n, k=1)
    missing = ~mask[iu, iv]
    return _from_pairs(g.n, iu[missing].astype(np.int64), iv[missing].astype(np.int64))


def edge_endpoints(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Directed incidence arrays (src, dst): every undirected edge appears
    as both (i, j) and (j, i), aligned with g.indices."""
    src = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(g.indptr))
    return src, g.indices


def adjacency_matrix(g: Graph, dense: bool = False):
    """Adjacency matrix as scipy CSR (or a dense float array)."""
    import scipy.sparse as sp

    data = np.ones(g.indices.size, dtype=np.float64)
    a = sp.csr_matrix((data, g.indices, g.indptr), shape=(g.n, g.n))
    return a.toarray() if dense else a


def validate_graph(g: Graph) -> None:
    """Raise ValueError unless g is a well-formed undirected simple graph."""
    if g.indptr.size != g.n + 1 or g.indptr[0] != 0 or g.indptr[-1] != g.indices.size:
        raise ValueError("indptr inconsistent with indices")
    if not np.array_equal(np.diff(g.indptr), g.degrees):
        raise ValueError("degrees inconsistent with indptr")
    if g.indices.size and (g.indices.min() < 0 or g.indices.max() >= g.n):
        raise ValueError("neighbor index out of range")
    src, dst = edge_endpoints(g)
    if np.any(src == dst):
        raise ValueError("self-loop present")
    for i in range(g.n):
        row = g.neighbors(i)
        if row.size > 1 and np.any(np.diff(row) <= 0):
            raise ValueError(f"neighbor list of {i} not strictly increasing")
    # symmetry: the set of (src, dst) arcs must equal its transpose
    fwd = src * g.n + dst
    bwd = dst * g.n + src
    if not np.array_equal(np.sort(fwd), np.sort(bwd)):
        raise ValueError("adjacency not symmetric")


def save_edge_list(g: Graph, path) -> None:
    """Write the text edge-list format: header line "n edge_count", then one
    "i j" line per undirected edge with i < j, 0-based, ascending."""
    src, dst = edge_endpoints(g)
    keep = src < dst
    with open(path, "w") as fh:
        fh.write(f"{g.n} {g.edge_count}\n")
        for i, j in zip(src[keep], dst[keep]):
            fh.write(f"{i} {j}\n")


def load_edge_list(path) -> Graph:
    """Parse the edge-list format written by save_edge_list.

    Raises EdgeListParseError (with the 1-based line number) on a malformed
    line, an out-of-range vertex, a self-loop, an out-of-order pair, a
    duplicate edge, or an edge count that disagrees with the header.
    """
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise EdgeListParseError(1, "missing header line")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListParseError(1, f"expected 'n edge_count', got {lines[0]!r}")
    try:
        n, count = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListParseError(1, f"non-integer header field in {lines[0]!r}") from None
    if n < 0 or count < 0:
        raise EdgeListParseError(1, "negative header field")
    seen: dict[tuple[int, int], int] = {}
    u = np.empty(count, dtype=np.int64)
    v = np.empty(count, dtype=np.int64)
    k = 0
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            raise EdgeListParseError(lineno, "blank line")
        parts = raw.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected 'i j', got {raw!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer vertex in {raw!r}") from None
        if not (0 <= i < n and 0 <= j < n):
            raise EdgeListParseError(lineno, f"vertex out of range in {raw!r}")
        if i == j:
            raise EdgeListParseError(lineno, f"self-loop {i}")
        if i > j:
            raise EdgeListParseError(lineno, f"vertices out of order in {raw!r}")
        if (i, j) in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {i} {j} (first at line {seen[i, j]})")
        seen[i, j] = lineno
        if k >= count:
            raise EdgeListParseError(lineno, f"more than {count} edges declared in header")
        u[k] = i
        v[k] = j
        k += 1
    if k != count:
        raise EdgeListParseError(len(lines), f"header declares {count} edges, found {k}")
    return _from_pairs(n, u, v)
