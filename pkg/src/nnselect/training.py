"""Multi-start quasi-Newton fitting of a fixed architecture.

The residual sum of squares is minimized with BFGS and exact analytic
gradients, launched from ``n_init`` independent random initial vectors;
the best local optimum wins. Every start has its own seed stream derived
prefix-stably from the config seed, so results are bit-reproducible, the
start set for a larger ``n_init`` extends the smaller one, and evaluation
order never matters.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy.optimize import minimize

from .criteria import FitSummary, summarize_fit
from .network import Architecture, make_rss_objective
from .seeding import start_streams

if TYPE_CHECKING:
    from .data import Dataset


class UnderdeterminedFit(ValueError):
    """Fewer rows than K + 2: the Gaussian MLE degenerates."""


class AllStartsFailed(Exception):
    """Every optimization start produced a non-finite optimum."""


@dataclass(frozen=True)
class FitConfig:
    """Knobs for one multi-start fit.

    ``init_range`` is the half-width of the uniform initialization
    interval; ``gradient_tolerance`` is the sup-norm stopping threshold
    of the local optimizer.
    """

    n_init: int = 5
    max_iterations: int = 500
    gradient_tolerance: float = 1e-6
    init_range: float = 0.7
    seed: int = 0

    def __post_init__(self):
        if self.n_init < 1:
            raise ValueError("n_init must be at least 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.gradient_tolerance <= 0:
            raise ValueError("gradient_tolerance must be positive")
        if self.init_range <= 0:
            raise ValueError("init_range must be positive")


@dataclass(frozen=True)
class FittedModel:
    """A locally optimal parameter vector with its fit criteria."""

    arch: Architecture
    theta_hat: np.ndarray
    summary: FitSummary
    n_starts: int
    starts_converged: int
    best_start_index: int
    best_converged: bool  # False when the winner stopped short of the gradient tolerance


def init_params(arch: Architecture, rng: np.random.Generator,
                init_range: float = 0.7) -> np.ndarray:
    """Draw a uniform random initial parameter vector on [-r, r]^K."""
    return rng.uniform(-init_range, init_range, size=arch.n_params)


def fit(arch: Architecture, data: "Dataset", config: FitConfig) -> FittedModel:
    """Fit one architecture by multi-start RSS minimization.

    Returns the start achieving minimal RSS (ties to the lowest start
    index). Raises UnderdeterminedFit when the data cannot identify the
    parameters, AllStartsFailed when no start yields a finite optimum,
    and DegenerateFit when the winner interpolates the data exactly.
    """
    k = arch.n_params
    if data.n < k + 2:
        raise UnderdeterminedFit(
            f"n={data.n} rows cannot identify K={k} parameters "
            f"(need n >= K + 2)"
        )
    objective = make_rss_objective(arch, data)

    best: tuple[float, int, np.ndarray, bool] | None = None
    converged = 0
    for i, rng in enumerate(start_streams(config.seed, config.n_init)):
        theta0 = init_params(arch, rng, config.init_range)
        with warnings.catch_warnings():
            # line-search stalls short of gtol are routine here and are
            # surfaced through the convergence counters instead
            warnings.simplefilter("ignore")
            res = minimize(
                objective, theta0, jac=True, method="BFGS",
                options={"maxiter": config.max_iterations,
                         "gtol": config.gradient_tolerance},
            )
        value = float(res.fun)
        if not (np.isfinite(value) and np.isfinite(res.x).all()):
            continue
        # status 0 means the gradient-norm test passed; a capped or
        # stalled start is still usable but flagged.
        ok = res.status == 0
        if ok:
            converged += 1
        if best is None or value < best[0]:
            best = (value, i, res.x.copy(), ok)

    if best is None:
        raise AllStartsFailed(
            f"all {config.n_init} starts diverged for p={arch.p}, q={arch.q}"
        )
    value, index, theta_hat, best_ok = best
    return FittedModel(
        arch=arch,
        theta_hat=theta_hat,
        summary=summarize_fit(value, data.n, k),
        n_starts=config.n_init,
        starts_converged=converged,
        best_start_index=index,
        best_converged=best_ok,
    )
