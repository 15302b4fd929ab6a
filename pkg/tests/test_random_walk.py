from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forestmat.corpus import exact_corpus
from forestmat.errors import InvalidSizeError, ValidationError
from forestmat.exact import forest_matrix_exact, proximity_matrix
from forestmat.graph import Graph, make_complete, make_path, random_graph
from forestmat.random_walk import (
    WalkConfig,
    exact_q_matrix,
    expected_steps,
    simulate_walks,
    step_table,
    transition_matrix,
)

T = Fraction(1, 3)


def exact_f(g):
    return proximity_matrix(forest_matrix_exact(g))


def test_transition_examples():
    assert transition_matrix(make_path(4)).entries == (
        (2 * T, T, 0, 0), (T, T, T, 0), (0, T, T, T), (0, 0, T, 2 * T))
    h = Fraction(1, 2)
    assert transition_matrix(make_complete(3)).entries == ((0, h, h), (h, 0, h), (h, h, 0))
    assert transition_matrix(make_path(2)).entries == ((0, 1), (1, 0))
    with pytest.raises(InvalidSizeError):
        transition_matrix(Graph(1, ()))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 10), p=st.floats(0, 1), seed=st.integers(0, 2**32))
def test_transition_properties(n, p, seed):
    g = random_graph(n, p, seed)
    P = transition_matrix(g)
    eps = Fraction(1, n - 1)
    for i in g.vertices:
        assert sum(P.entries[i - 1]) == 1
        for j in g.vertices:
            x = P.entry(i, j)
            assert x >= 0
            if i != j:
                assert x == (eps if g.has_edge(i, j) else 0)


def test_exact_q_examples():
    q = exact_q_matrix(make_path(4))
    assert q.entries[0] == (Fraction(13, 21), Fraction(5, 21), Fraction(2, 21), Fraction(1, 21))
    assert exact_q_matrix(make_complete(3)).diagonal() == [Fraction(1, 2)] * 3


@pytest.mark.parametrize("name, g", exact_corpus(16), ids=lambda x: x if isinstance(x, str) else "")
def test_exact_q_equals_f(name, g):
    assert exact_q_matrix(g) == exact_f(g)


def test_expected_steps():
    assert expected_steps(make_path(4)) == 3
    assert expected_steps(make_path(2)) == 1
    assert expected_steps(make_path(100)) == 99


def test_config():
    cfg = WalkConfig.for_graph(make_path(4), 10, 1)
    assert (cfg.epsilon, cfg.q, cfg.max_steps) == (T, Fraction(1, 4), 4000)
    with pytest.raises(ValidationError):
        WalkConfig(4, 0, 1)
    with pytest.raises(ValidationError):
        WalkConfig(4, 10, -1)
    with pytest.raises(ValidationError):
        WalkConfig(4, 10, 2**64)
    with pytest.raises(ValidationError):
        simulate_walks(make_path(5), cfg)


def test_step_table():
    table = step_table(make_path(4))
    # 0-based: vertex 1's only neighbour is vertex 2, other draws stay
    assert table.tolist() == [[1, 0, 0], [0, 2, 1], [1, 3, 2], [2, 3, 3]]


def test_p2_estimates():
    g = make_path(2)
    est = simulate_walks(g, WalkConfig.for_graph(g, 10**6, 42))
    assert np.abs(est.estimates - np.array([[2, 1], [1, 2]]) / 3).max() < 0.005


def test_p4_estimate():
    g = make_path(4)
    est = simulate_walks(g, WalkConfig.for_graph(g, 10**6, 3))
    assert abs(est.estimates[0, 0] - 13 / 21) < 0.005
    assert (est.hits.sum(axis=1) == 10**6).all()
    assert est.aborted_walks == 0


def test_k3_estimate():
    g = make_complete(3)
    est = simulate_walks(g, WalkConfig.for_graph(g, 10**5, 9))
    assert np.abs(np.diag(est.estimates) - 0.5).max() < 0.01


def test_step_count_law():
    g = make_path(4)
    n = g.n
    est = simulate_walks(g, WalkConfig.for_graph(g, 250_000, 17))  # 10^6 walks in total
    assert abs(est.mean_steps - (n - 1)) < 0.01 * (n - 1)
    assert abs(est.zero_step_fraction - 1 / n) < 0.005


def test_convergence_sweep():
    g = make_path(4)
    exact = exact_f(g)
    errors = [simulate_walks(g, WalkConfig.for_graph(g, w, 2024)).max_abs_error(exact)
              for w in (10**3, 10**4, 10**5, 10**6)]
    smoothed = [(a + b) / 2 for a, b in zip(errors, errors[1:])]
    assert all(a >= b for a, b in zip(smoothed, smoothed[1:])), errors
    # about 1/sqrt(walks): three decades should shrink the error by well over 5x
    assert errors[-1] < errors[0] / 5


def test_determinism_and_workers():
    g = random_graph(7, 0.5, seed=1)
    base = WalkConfig.for_graph(g, 100_000, 99, block_size=10_000)
    a = simulate_walks(g, base)
    b = simulate_walks(g, base)
    c = simulate_walks(g, WalkConfig.for_graph(g, 100_000, 99, block_size=10_000, workers=4))
    assert np.array_equal(a.hits, b.hits) and np.array_equal(a.hits, c.hits)
    assert a.total_steps == c.total_steps
    d = simulate_walks(g, WalkConfig.for_graph(g, 100_000, 100, block_size=10_000))
    assert not np.array_equal(a.hits, d.hits)


def test_max_steps_abort_resamples():
    g = make_path(4)
    est = simulate_walks(g, WalkConfig.for_graph(g, 20_000, 5, max_steps=2))
    assert est.aborted_walks > 0
    assert (est.hits.sum(axis=1) == 20_000).all()


def test_report_shape():
    g = make_path(3)
    est = simulate_walks(g, WalkConfig.for_graph(g, 1000, 8))
    rep = est.report(8, exact_f(g))
    assert set(rep) == {"n", "num_walks", "seed", "estimates", "max_abs_error_vs_exact",
                        "aborted_walks"}
    assert rep["n"] == 3 and len(rep["estimates"]) == 3
