import math

import numpy as np
import pytest

from nnselect import (Architecture, Dataset, DegenerateFit, aic, bic,
                      log_likelihood, oos_mse, sigma2_mle, summarize_fit)

from .conftest import random_problem, scalar_net


class TestSigma2:
    def test_formula(self):
        assert sigma2_mle(10.0, 5) == 2.0

    def test_zero_rss_is_degenerate(self):
        with pytest.raises(DegenerateFit):
            sigma2_mle(0.0, 5)

    def test_negative_rss_rejected(self):
        with pytest.raises(ValueError):
            sigma2_mle(-1.0, 5)

    def test_maximizes_profile_likelihood_on_grid(self, rng):
        # the Gaussian log-likelihood as a function of sigma2, at fixed rss
        def loglik_at(sigma2, rss, n):
            return -0.5 * n * math.log(2 * math.pi * sigma2) \
                - rss / (2 * sigma2)

        for _ in range(20):
            n = int(rng.integers(5, 200))
            y = rng.normal(2.0, 1.5, size=n)
            rss = float(((y - y.mean()) ** 2).sum())  # optimal constant model
            s2_hat = sigma2_mle(rss, n)
            grid = np.linspace(0.25 * s2_hat, 4.0 * s2_hat, 1000)
            values = [loglik_at(s2, rss, n) for s2 in grid]
            best_grid = grid[int(np.argmax(values))]
            # the analytic optimum beats every grid point and sits nearby
            assert loglik_at(s2_hat, rss, n) >= max(values)
            assert abs(best_grid - s2_hat) <= grid[1] - grid[0]


class TestLogLikelihood:
    def test_algebraic_cancellation(self):
        # rss chosen so sigma2 = 1/(2*pi): loglik = -(n/2)(ln 1 + 1) = -1 at n=2
        n = 2
        rss = n / (2 * math.pi)
        assert log_likelihood(rss, n) == pytest.approx(-1.0, rel=1e-14)

    def test_monotone_decreasing_in_rss(self):
        assert log_likelihood(1.0, 10) > log_likelihood(2.0, 10)

    def test_matches_per_observation_summation(self):
        # frozen value, cross-checked against summing the density per row
        assert log_likelihood(3.7, 12) == pytest.approx(-9.967819417629144,
                                                        rel=1e-14)
        rng = np.random.default_rng(3)
        for _ in range(10):
            n = int(rng.integers(3, 50))
            resid = rng.normal(size=n)
            rss = float((resid ** 2).sum())
            s2 = rss / n
            per_row = sum(-0.5 * math.log(2 * math.pi * s2)
                          - r * r / (2 * s2) for r in resid)
            assert log_likelihood(rss, n) == pytest.approx(per_row, rel=1e-12)

    def test_zero_rss_rejected(self):
        with pytest.raises(DegenerateFit):
            log_likelihood(0.0, 4)


class TestInformationCriteria:
    def test_bic_penalty_vanishes_at_n_one(self):
        assert bic(-10.0, 1, 4) == 20.0

    def test_aic_counts_variance_parameter(self):
        assert aic(0.0, 4) == 10.0

    def test_frozen_values(self):
        ll = log_likelihood(3.7, 12)
        assert bic(ll, 12, 5) == pytest.approx(34.84507873398629, rel=1e-14)
        assert aic(ll, 5) == pytest.approx(31.93563883525829, rel=1e-14)

    def test_bic_penalizes_harder_for_n_at_least_8(self):
        # equal log-likelihoods: BIC must prefer the smaller model whenever
        # AIC does, since ln(n) > 2 from n = 8 up
        for n in (8, 20, 1000):
            small = summarize_fit(5.0, n, 4)
            big = summarize_fit(5.0, n, 10)
            assert big.log_lik == small.log_lik
            assert (big.aic > small.aic) and (big.bic > small.bic)
            assert (big.bic - small.bic) > (big.aic - small.aic)

    def test_summary_internally_consistent(self, rng):
        for _ in range(25):
            n = int(rng.integers(3, 500))
            k = int(rng.integers(1, 40))
            rss = float(rng.uniform(0.01, 100.0))
            s = summarize_fit(rss, n, k)
            assert s.sigma2_hat == pytest.approx(rss / n, rel=1e-15)
            assert s.bic == pytest.approx(-2 * s.log_lik
                                          + math.log(n) * (k + 1), rel=1e-12)
            assert s.aic == pytest.approx(-2 * s.log_lik + 2 * (k + 1),
                                          rel=1e-12)


class TestArgmaxEquivalence:
    def test_rss_minimizer_is_likelihood_maximizer(self, rng):
        # over any finite set of parameter vectors, both orderings agree
        arch, _, data = random_problem(rng, n=25)
        from nnselect import rss as rss_of
        thetas = [rng.normal(size=arch.n_params) for _ in range(12)]
        rss_values = [rss_of(arch, t, data) for t in thetas]
        ll_values = [log_likelihood(r, data.n) for r in rss_values]
        assert int(np.argmin(rss_values)) == int(np.argmax(ll_values))


class TestOosMse:
    def test_zero_on_interpolated_rows(self):
        arch = Architecture((0,), 1)
        data = Dataset(np.array([[0.1], [0.9]]), np.array([2.0, 2.0]),
                       ("a",), "y")
        holdout = Dataset(np.array([[0.5]]), np.array([2.0]), ("a",), "y")
        theta = np.array([0.0, 0.0, 2.0, 0.0])
        model = _as_model(arch, theta)
        assert oos_mse(model, holdout) == 0.0

    def test_constant_predictor_hand_value(self):
        arch = Architecture((0,), 1)
        theta = np.array([0.0, 0.0, 1.0, 0.0])  # predicts 1 everywhere
        holdout = Dataset(np.array([[0.0], [0.0], [0.0]]),
                          np.array([0.0, 1.0, 3.0]), ("a",), "y")
        model = _as_model(arch, theta)
        assert oos_mse(model, holdout) == pytest.approx((1 + 0 + 4) / 3)

    def test_matches_rowwise_oracle(self, rng):
        arch = Architecture((0, 1), 2)
        theta = rng.normal(size=arch.n_params)
        X = rng.uniform(size=(10, 2))
        y = rng.normal(size=10)
        holdout = Dataset(X, y, ("a", "b"), "y")
        model = _as_model(arch, theta)
        hidden = theta[:6].reshape(2, 3)  # p=2, q=2 layout
        per_row = [(y[i] - scalar_net(X[i], hidden[:, 0], hidden[:, 1:],
                                      theta[6], theta[7:])) ** 2
                   for i in range(10)]
        assert oos_mse(model, holdout) == pytest.approx(np.mean(per_row),
                                                        rel=1e-12)

    def test_empty_holdout_rejected(self, rng):
        arch, theta, data = random_problem(rng)
        model = _as_model(arch, theta)
        empty = Dataset(np.empty((0, data.p_all)), np.empty(0),
                        data.covariate_names, "y")
        with pytest.raises(ValueError):
            oos_mse(model, empty)


class _as_model:
    """Minimal stand-in carrying just arch and theta_hat."""

    def __init__(self, arch, theta):
        self.arch = arch
        self.theta_hat = np.asarray(theta, dtype=float)
