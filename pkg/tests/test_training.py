import numpy as np
import pytest

from nnselect import (AllStartsFailed, Architecture, Dataset, FitConfig,
                      UnderdeterminedFit, fit, init_params, rss, rss_gradient)
from nnselect.seeding import start_streams


def make_data(rng, n=60, p_all=2, signal=True):
    X = rng.uniform(0.0, 1.0, size=(n, p_all))
    if signal:
        y = np.sin(3.0 * X[:, 0]) + rng.normal(0.0, 0.1, size=n)
    else:
        y = 1.5 + rng.normal(0.0, 0.3, size=n)
    return Dataset(X, y, tuple(f"x{j}" for j in range(p_all)), "y")


class TestInitParams:
    def test_same_seed_identical(self):
        arch = Architecture((0, 1), 3)
        a = init_params(arch, np.random.default_rng(9), 0.7)
        b = init_params(arch, np.random.default_rng(9), 0.7)
        np.testing.assert_array_equal(a, b)

    def test_consecutive_draws_differ(self):
        arch = Architecture((0,), 2)
        rng = np.random.default_rng(3)
        assert not np.array_equal(init_params(arch, rng),
                                  init_params(arch, rng))

    def test_distribution_bounds_and_mean(self):
        arch = Architecture((0,), 1)  # K = 4
        rng = np.random.default_rng(11)
        draws = np.concatenate([init_params(arch, rng, 0.7)
                                for _ in range(2500)])  # 10,000 values
        assert draws.min() >= -0.7 and draws.max() <= 0.7
        assert abs(draws.mean()) < 0.02

    def test_prefix_stable_start_streams(self):
        # stream i is unchanged when the start budget grows
        short = [g.uniform(size=3).tolist() for g in start_streams(5, 2)]
        long = [g.uniform(size=3).tolist() for g in start_streams(5, 6)]
        assert long[:2] == short


class TestFit:
    def test_beats_best_constant_predictor(self, rng):
        data = make_data(rng, n=40, signal=False)
        arch = Architecture((0,), 1)
        model = fit(arch, data, FitConfig(n_init=2, seed=1))
        const_rss = float(((data.y - data.y.mean()) ** 2).sum())
        assert model.summary.rss <= const_rss + 1e-9

    def test_multi_start_monotone(self, rng):
        data = make_data(rng)
        arch = Architecture((0, 1), 2)
        r1 = fit(arch, data, FitConfig(n_init=1, seed=7)).summary.rss
        r5 = fit(arch, data, FitConfig(n_init=5, seed=7)).summary.rss
        assert r5 <= r1

    def test_seed_determinism_bit_identical(self, rng):
        data = make_data(rng)
        arch = Architecture((0, 1), 2)
        cfg = FitConfig(n_init=4, seed=123)
        a = fit(arch, data, cfg)
        b = fit(arch, data, cfg)
        np.testing.assert_array_equal(a.theta_hat, b.theta_hat)
        assert a.summary == b.summary
        assert a.best_start_index == b.best_start_index

    def test_local_optimality_or_flagged(self, rng):
        data = make_data(rng)
        arch = Architecture((0,), 1)
        cfg = FitConfig(n_init=3, seed=2, gradient_tolerance=1e-6)
        model = fit(arch, data, cfg)
        sup = np.abs(rss_gradient(arch, model.theta_hat, data)).max()
        assert sup <= cfg.gradient_tolerance or not model.best_converged

    def test_underdetermined_rejected(self, rng):
        data = make_data(rng, n=5)
        arch = Architecture((0, 1), 2)  # K = 9 > n - 2
        with pytest.raises(UnderdeterminedFit):
            fit(arch, data, FitConfig(n_init=1, seed=0))

    def test_all_starts_failed(self, rng):
        # squared residuals overflow for astronomically large responses
        X = rng.uniform(size=(12, 1))
        data = Dataset(X, np.full(12, 1e200), ("a",), "y")
        arch = Architecture((0,), 1)
        with pytest.raises(AllStartsFailed):
            fit(arch, data, FitConfig(n_init=2, seed=0))

    def test_matches_dense_random_search_with_polish(self):
        # tiny instance: n = 30, p = 1, q = 1, K = 4. A large uniform
        # search over [-5, 5]^4 plus local descent from the best points
        # brackets the attainable minimum; fit must come within 1%.
        rng = np.random.default_rng(99)
        X = rng.uniform(0.0, 1.0, size=(30, 1))
        y = 0.8 / (1.0 + np.exp(-(4.0 * X[:, 0] - 2.0))) \
            + rng.normal(0.0, 0.05, size=30)
        data = Dataset(X, y, ("x0",), "y")
        arch = Architecture((0,), 1)

        candidates = rng.uniform(-5.0, 5.0, size=(10**6, 4))
        values = _rss_vectorized(candidates, X[:, 0], y)
        order = np.argsort(values)[:20]
        from scipy.optimize import minimize
        from nnselect.network import make_rss_objective
        objective = make_rss_objective(arch, data)
        polished = min(
            float(minimize(objective, candidates[i], jac=True,
                           method="BFGS",
                           options={"maxiter": 500, "gtol": 1e-8}).fun)
            for i in order)

        model = fit(arch, data, FitConfig(n_init=10, seed=4))
        assert model.summary.rss <= polished * 1.01


def _rss_vectorized(thetas, x, y):
    """Brute-force RSS of many (w0, w1, g0, g1) vectors on a 1-d problem."""
    z = thetas[:, 0:1] + thetas[:, 1:2] * x[None, :]
    h = 1.0 / (1.0 + np.exp(-z))
    pred = thetas[:, 2:3] + thetas[:, 3:4] * h
    return ((y[None, :] - pred) ** 2).sum(axis=1)
