"""Gaussian-likelihood fit criteria.

With normal errors the error variance has the closed-form maximizer
RSS / n given the network weights, so the likelihood is profiled: the
weights are obtained by least squares and sigma2 is estimated in a
separate step. Information criteria count K + 1 parameters (the K
network weights plus the variance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .network import predict_batch

if TYPE_CHECKING:
    from .data import Dataset
    from .training import FittedModel


class DegenerateFit(Exception):
    """Zero residual variance: the Gaussian likelihood is unbounded.

    Raised for perfect interpolation; selection must discard such a
    candidate rather than treat it as infinitely good.
    """


def sigma2_mle(rss: float, n: int) -> float:
    """Profile estimate of the error variance, RSS / n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if rss < 0:
        raise ValueError("rss cannot be negative")
    sigma2 = rss / n
    if sigma2 == 0.0:
        raise DegenerateFit(f"rss={rss} with n={n} gives zero variance")
    return sigma2


def log_likelihood(rss: float, n: int) -> float:
    """Profiled Gaussian log-likelihood, -(n/2) * (ln(2*pi*rss/n) + 1)."""
    sigma2 = sigma2_mle(rss, n)
    return -0.5 * n * (math.log(2.0 * math.pi * sigma2) + 1.0)


def bic(log_lik: float, n: int, k: int) -> float:
    """Bayesian information criterion with K + 1 counted parameters."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 1:
        raise ValueError("k must be at least 1")
    return -2.0 * log_lik + math.log(n) * (k + 1)


def aic(log_lik: float, k: int) -> float:
    """Akaike information criterion with K + 1 counted parameters."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return -2.0 * log_lik + 2.0 * (k + 1)


@dataclass(frozen=True)
class FitSummary:
    """Internally consistent bundle of fit measures for one model."""

    rss: float
    n: int
    k: int
    sigma2_hat: float
    log_lik: float
    bic: float
    aic: float


def summarize_fit(rss: float, n: int, k: int) -> FitSummary:
    """Build the full criteria bundle from (rss, n, K).

    Raises DegenerateFit when rss is zero, since no finite criterion
    value exists there.
    """
    ll = log_likelihood(rss, n)
    return FitSummary(
        rss=float(rss),
        n=int(n),
        k=int(k),
        sigma2_hat=sigma2_mle(rss, n),
        log_lik=ll,
        bic=bic(ll, n, k),
        aic=aic(ll, k),
    )


def oos_mse(model: "FittedModel", holdout: "Dataset") -> float:
    """Mean squared prediction error on held-out rows (no refitting)."""
    if holdout.n == 0:
        raise ValueError("holdout dataset is empty")
    resid = holdout.y - predict_batch(model.arch, model.theta_hat, holdout.X)
    return float(np.mean(resid ** 2))
