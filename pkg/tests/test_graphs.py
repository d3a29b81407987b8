import math

import numpy as np
import pytest

from graphmem import graphs


def brute_degrees(g):
    a = graphs.adjacency_matrix(g, dense=True)
    return a.sum(axis=1).astype(int)


def test_complete_graph_structure():
    g = graphs.gen_complete(7)
    graphs.validate_graph(g)
    assert g.n == 7
    assert g.edge_count == 21
    assert np.all(brute_degrees(g) == 6)
    assert list(g.neighbors(3)) == [0, 1, 2, 4, 5, 6]


def test_complete_graph_n1_is_empty():
    g = graphs.gen_complete(1)
    graphs.validate_graph(g)
    assert g.edge_count == 0


def test_gen_complete_rejects_bad_n():
    with pytest.raises(ValueError):
        graphs.gen_complete(0)


def test_gnp_extreme_p():
    g0 = graphs.gen_erdos_renyi(20, 0.0, 1)
    assert g0.edge_count == 0
    g1 = graphs.gen_erdos_renyi(20, 1.0, 1)
    assert g1 == graphs.gen_complete(20)


def test_gnp_rejects_bad_args():
    with pytest.raises(ValueError):
        graphs.gen_erdos_renyi(10, -0.1, 0)
    with pytest.raises(ValueError):
        graphs.gen_erdos_renyi(10, 1.5, 0)
    with pytest.raises(ValueError):
        graphs.gen_erdos_renyi(10, 0.5, 0, method="bogus")


def test_gnp_is_deterministic_and_valid():
    a = graphs.gen_erdos_renyi(200, 0.1, 42)
    b = graphs.gen_erdos_renyi(200, 0.1, 42)
    c = graphs.gen_erdos_renyi(200, 0.1, 43)
    graphs.validate_graph(a)
    assert a == b
    assert a != c


@pytest.mark.parametrize("method", ["pairwise", "skip"])
def test_gnp_edge_count_concentrates(method):
    # mean = C(n,2) p, sd = sqrt(C(n,2) p (1-p)); 12 seeds, 4 sigma on the mean
    n, p = 600, 0.05
    pairs = n * (n - 1) // 2
    mean, sd = pairs * p, math.sqrt(pairs * p * (1 - p))
    counts = [graphs.gen_erdos_renyi(n, p, s, method=method).edge_count
              for s in range(12)]
    assert abs(np.mean(counts) - mean) < 4 * sd / math.sqrt(len(counts))


def test_gnp_samplers_agree_on_degree_distribution():
    # the per-pair and skip samplers target the same law; compare pooled
    # degree samples with a two-sample KS test at the 1% level
    from scipy import stats
    deg_a, deg_b = [], []
    for s in range(6):
        deg_a.append(brute_degrees(graphs.gen_erdos_renyi(400, 0.08, s, method="pairwise")))
        deg_b.append(brute_degrees(graphs.gen_erdos_renyi(400, 0.08, 100 + s, method="skip")))
    res = stats.ks_2samp(np.concatenate(deg_a), np.concatenate(deg_b))
    assert res.pvalue > 0.01


def test_make_weights_copies_and_validates():
    raw = np.array([3.0, 2.0, 2.0, 2.0, 1.0])
    w = graphs.make_weights(raw)
    raw[0] = 99.0
    assert w.weights[0] == 3.0
    assert not w.weights.flags.writeable
    with pytest.raises(ValueError):
        graphs.make_weights([1.0, 2.0])          # increasing
    with pytest.raises(ValueError):
        graphs.make_weights([1.0, -1.0])         # negative
    with pytest.raises(ValueError):
        graphs.make_weights([0.0, 0.0])          # no mass
    with pytest.raises(graphs.InfeasibleWeightsError):
        graphs.make_weights([10.0, 1.0])         # max^2 >= total mass


def test_weight_sequence_expected_degrees():
    w = graphs.make_weights([4.0, 3.0, 3.0, 3.0, 2.0, 2.0])
    assert w.n == 6
    assert w.rho_norm == pytest.approx(1.0 / 17.0)
    assert w.expected_max_degree == pytest.approx(4.0)
    assert w.expected_avg_degree == pytest.approx(17.0 / 6.0)


def test_powerlaw_weights_match_target_moments():
    n, beta, d_avg, m_bar = 100_000, 3.5, 10.0, 100.0
    w = graphs.powerlaw_weights(n, beta, d_avg, m_bar)
    # the construction is exact up to the cutoff rounding: the top weight
    # should sit within 10% of the max-degree target and the average within
    # a few percent of d_avg
    assert 0.9 * m_bar <= w.weights[0] <= 1.1 * m_bar
    assert abs(w.weights.mean() - d_avg) / d_avg < 0.05
    assert w.i0 >= 1
    # closed form away from the cutoff: w_i = c (i0 + i)^(-1/(beta-1))
    i = 1000
    assert w.weights[i] == pytest.approx(w.c * (w.i0 + i) ** (-1.0 / (beta - 1.0)))
    with pytest.raises(ValueError):
        graphs.powerlaw_weights(100, 1.9, 5.0, 20.0)
    with pytest.raises(ValueError):
        graphs.powerlaw_weights(100, 3.5, 30.0, 20.0)


def test_powerlaw_second_order_average_exceeds_first():
    w = graphs.powerlaw_weights(100_000, 3.5, 10.0, 100.0)
    d = w.weights.mean()
    d2 = (w.weights ** 2).sum() / w.weights.sum()
    assert 1.2 < d2 / d < 2.0


def test_chung_lu_matches_expected_degrees():
    # E[deg i] = w_i rho sum_{j != i} w_j = w_i (1 - rho w_i) under the
    # normalization rho = 1/sum(w); average over many draws, 5 sigma window
    w = graphs.make_weights(np.linspace(8.0, 1.0, 60))
    reps = 400
    acc = np.zeros(60)
    for s in range(reps):
        acc += brute_degrees(graphs.gen_chung_lu(w, s))
    emp = acc / reps
    expect = w.weights * (1.0 - w.rho_norm * w.weights)
    sd = np.sqrt(np.maximum(expect, 1e-9) / reps)
    assert np.all(np.abs(emp - expect) < 5 * sd + 0.05)


def test_chung_lu_samplers_agree():
    from scipy import stats
    w = graphs.make_weights(np.linspace(12.0, 0.5, 500))
    deg_a, deg_b = [], []
    for s in range(6):
        deg_a.append(brute_degrees(graphs.gen_chung_lu(w, s, method="pairwise")))
        deg_b.append(brute_degrees(graphs.gen_chung_lu(w, 50 + s, method="skip")))
    res = stats.ks_2samp(np.concatenate(deg_a), np.concatenate(deg_b))
    assert res.pvalue > 0.01


def test_chung_lu_zero_weight_vertices_are_isolated():
    w = graphs.make_weights([2.0, 2.0, 1.0, 1.0, 0.0, 0.0])
    for s in range(20):
        g = graphs.gen_chung_lu(w, s)
        graphs.validate_graph(g)
        assert len(g.neighbors(4)) == 0
        assert len(g.neighbors(5)) == 0


def test_chung_lu_uniform_weights_reduce_to_gnp():
    # constant weights w := pn make every pair probability w^2/sum(w) = p
    from scipy import stats
    n, p = 300, 0.1
    w = graphs.make_weights(np.full(n, p * n))
    deg_cl = np.concatenate([brute_degrees(graphs.gen_chung_lu(w, s)) for s in range(8)])
    deg_er = np.concatenate([brute_degrees(graphs.gen_erdos_renyi(n, p, 900 + s)) for s in range(8)])
    res = stats.ks_2samp(deg_cl, deg_er)
    assert res.pvalue > 0.01


def test_two_cliques_structure():
    g = graphs.gen_two_cliques(4, 10, bridged=False)
    graphs.validate_graph(g)
    assert g.edge_count == 6 + 15
    assert set(g.neighbors(0)) == {1, 2, 3}
    assert set(g.neighbors(4)) == {5, 6, 7, 8, 9}
    gb = graphs.gen_two_cliques(4, 10, bridged=True)
    graphs.validate_graph(gb)
    assert gb.edge_count == 6 + 15 + 1
    assert set(gb.neighbors(3)) == {0, 1, 2, 4}
    with pytest.raises(ValueError):
        graphs.gen_two_cliques(1, 10)
    with pytest.raises(ValueError):
        graphs.gen_two_cliques(9, 10)


def test_degree_stats_on_path(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("3 2\n0 1\n1 2\n")
    g = graphs.load_edge_list(path)
    d = graphs.degree_stats(g)
    assert d.delta == 1
    assert d.m == 2
    assert d.d_avg == pytest.approx(4.0 / 3.0)
    assert d.d_tilde == pytest.approx(6.0 / 4.0)
    assert d.edge_count == 2


def test_complement_involution_and_extremes():
    g = graphs.gen_erdos_renyi(40, 0.3, 7)
    gc = graphs.complement(g)
    graphs.validate_graph(gc)
    assert graphs.complement(gc) == g
    assert g.edge_count + gc.edge_count == 40 * 39 // 2
    assert graphs.complement(graphs.gen_complete(9)).edge_count == 0
    dg = brute_degrees(g)
    dc = brute_degrees(gc)
    assert np.all(dg + dc == 39)


def test_edge_endpoints_lists_every_arc():
    g = graphs.gen_erdos_renyi(30, 0.2, 3)
    src, dst = graphs.edge_endpoints(g)
    assert src.shape == dst.shape == (2 * g.edge_count,)
    arcs = set(zip(src.tolist(), dst.tolist()))
    assert len(arcs) == 2 * g.edge_count
    assert all((v, u) in arcs for u, v in arcs)


def test_adjacency_matrix_sparse_and_dense_agree():
    g = graphs.gen_erdos_renyi(25, 0.3, 11)
    a_sp = graphs.adjacency_matrix(g)
    a_d = graphs.adjacency_matrix(g, dense=True)
    assert np.array_equal(a_sp.toarray(), a_d)
    assert np.array_equal(a_d, a_d.T)
    assert np.all(np.diag(a_d) == 0)


def test_graph_arrays_are_frozen():
    g = graphs.gen_complete(5)
    with pytest.raises(ValueError):
        g.indices[0] = 3


def test_edge_list_round_trip(tmp_path):
    for g in (graphs.gen_complete(7),
              graphs.gen_erdos_renyi(40, 0.3, 5),
              graphs.gen_erdos_renyi(12, 0.0, 5)):
        path = tmp_path / "g.txt"
        graphs.save_edge_list(g, path)
        assert graphs.load_edge_list(path) == g


def test_edge_list_format(tmp_path):
    g = graphs.gen_two_cliques(2, 5, bridged=True)
    path = tmp_path / "g.txt"
    graphs.save_edge_list(g, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "5 5"
    pairs = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert all(i < j for i, j in pairs)
    assert pairs == sorted(pairs)


@pytest.mark.parametrize("text,lineno", [
    ("", 1),                                  # no header
    ("abc\n", 1),                             # malformed header
    ("3\n", 1),                               # header missing field
    ("3 1\n\n0 1\n", 2),                      # blank line
    ("3 1\n0 x\n", 2),                        # non-integer vertex
    ("3 1\n0 5\n", 2),                        # out of range
    ("3 1\n1 1\n", 2),                        # self-loop
    ("3 1\n1 0\n", 2),                        # endpoints out of order
    ("3 2\n0 1\n0 1\n", 3),                   # duplicate edge
    ("3 2\n0 1\n", 2),                        # fewer edges than declared
    ("3 1\n0 1\n0 2\n", 3),                   # more edges than declared
])
def test_edge_list_parse_errors(tmp_path, text, lineno):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(graphs.EdgeListParseError) as exc:
        graphs.load_edge_list(path)
    assert exc.value.line_number == lineno
