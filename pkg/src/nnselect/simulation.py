"""Simulation laboratory: known-truth generators and recovery metrics.

Datasets are generated from a network with a known architecture: a few
important covariates feed every hidden node, the remaining covariates
carry exactly zero weight, and Gaussian noise is added on top. A
replicate study then runs the selector on fresh draws and scores how
often the true input set (PI), hidden-node count (PH), and full
architecture (PT) are recovered, plus the mean count of noise inputs
correctly dropped (C).
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass
from statistics import median
from typing import Callable

import numpy as np
from joblib import Parallel, delayed

from . import seeding
from .criteria import oos_mse
from .data import Dataset
from .network import Architecture, Weights, pack_params, predict_batch
from .seeding import fold_seed
from .selection import SelectionConfig, select

# Default generator noise level, calibrated so the true architecture is
# recoverable at n = 1000 yet genuinely hard at n = 250 (see
# generate_true_model for the matching weight laws).
DEFAULT_NOISE_SD = 0.5


@dataclass(frozen=True)
class TrueModel:
    """Data-generating network with a known important-input set."""

    p_important: int
    p_noise: int
    q_true: int
    weights: np.ndarray  # parameters of the important-input architecture
    noise_sd: float

    @property
    def p_total(self) -> int:
        return self.p_important + self.p_noise

    @property
    def arch(self) -> Architecture:
        return Architecture(tuple(range(self.p_important)), self.q_true)

    @property
    def k_true(self) -> int:
        return self.arch.n_params


def generate_true_model(seed: int, p_important: int = 3, p_noise: int = 10,
                        q_true: int = 3,
                        noise_sd: float = DEFAULT_NOISE_SD) -> TrueModel:
    """Draw a random true model with unambiguous important inputs and an
    identifiable hidden width.

    All weights on important paths are bounded away from zero, and the
    hidden layer is built so that its width is actually recoverable from
    data on the unit covariate cube: hidden node k gets a dominant weight
    (magnitude uniform on [8, 16], random sign) on covariate k mod p and
    cross-weights uniform on [-2, -0.5] union [0.5, 2], and its bias
    places the logistic transition at a uniform interior point of the
    cube. Distinct dominant axes plus interior transitions keep every
    unit genuinely nonlinear over the data and stop two units from
    merging into one effective node; soft or aligned units collapse to a
    smaller effective width that no selector could recover.
    Hidden-to-output weights are uniform on [-3, -1.5] union [1.5, 3];
    the output bias is uniform on [-1, 1]. Noise covariates get no
    weights at all.
    """
    rng = np.random.default_rng(seed)

    def away_from_zero(low, high, size):
        magnitude = rng.uniform(low, high, size=size)
        sign = rng.choice([-1.0, 1.0], size=size)
        return magnitude * sign

    input_weights = away_from_zero(0.5, 2.0, (q_true, p_important))
    for k in range(q_true):
        j = k % p_important
        input_weights[k, j] = np.sign(input_weights[k, j]) * rng.uniform(8.0, 16.0)
    transition = rng.uniform(0.2, 0.8, size=(q_true, p_important))
    weights = Weights(
        hidden_bias=-(input_weights * transition).sum(axis=1),
        input_weights=input_weights,
        output_bias=float(rng.uniform(-1.0, 1.0)),
        output_weights=away_from_zero(1.5, 3.0, q_true),
    )
    return TrueModel(p_important, p_noise, q_true, pack_params(weights),
                     float(noise_sd))


def true_surface(model: TrueModel, X: np.ndarray) -> np.ndarray:
    """Noise-free response surface of the true model."""
    return predict_batch(model.arch, model.weights, X)


def simulate_dataset(model: TrueModel, n: int, seed: int) -> Dataset:
    """Simulate n rows: uniform covariates, network signal, Gaussian noise."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.default_rng(seed)
    X = rng.uniform(0.0, 1.0, size=(n, model.p_total))
    y = true_surface(model, X) + rng.normal(0.0, model.noise_sd, size=n)
    names = tuple(f"x{j + 1}" for j in range(model.p_total))
    return Dataset(X, y, names, "y")


@dataclass(frozen=True)
class ReplicateMetrics:
    """Recovery score for one replicate."""

    c: int            # noise inputs correctly dropped
    pi_hit: bool      # selected mask == true important set
    ph_hit: bool      # selected q == true q
    pt_hit: bool      # both
    wall_time: float  # seconds


def score_selection(model: TrueModel, arch: Architecture,
                    wall_time: float = 0.0) -> ReplicateMetrics:
    """Score a selected architecture against the generating truth."""
    important = tuple(range(model.p_important))
    noise = set(range(model.p_important, model.p_total))
    mask = set(arch.input_mask)
    pi = tuple(sorted(mask)) == important
    ph = arch.q == model.q_true
    return ReplicateMetrics(
        c=len(noise) - len(noise & mask),
        pi_hit=pi,
        ph_hit=ph,
        pt_hit=pi and ph,
        wall_time=wall_time,
    )


@dataclass(frozen=True)
class ReplicateResult:
    """Outcome of one replicate: metrics, or the error that excluded it."""

    index: int
    metrics: ReplicateMetrics | None
    selected_q: int | None = None
    selected_mask: tuple[int, ...] | None = None
    selected_k: int | None = None
    test_mse: float | None = None
    error: str | None = None


@dataclass(frozen=True)
class StudySummary:
    """Aggregate recovery metrics over a replicate study."""

    n_replicates: int
    n_failed: int
    c_mean: float
    pi: float
    ph: float
    pt: float
    median_time: float
    median_k: float
    median_test_mse: float
    results: tuple[ReplicateResult, ...]


def aggregate(results: list[ReplicateResult] | tuple[ReplicateResult, ...],
              ) -> StudySummary:
    """Reduce per-replicate results to study-level metrics.

    Failed replicates are excluded from every average but counted.
    """
    results = tuple(results)
    scored = [r for r in results if r.metrics is not None]
    if not scored:
        raise ValueError("no replicate produced a usable selection")
    return StudySummary(
        n_replicates=len(results),
        n_failed=len(results) - len(scored),
        c_mean=float(np.mean([r.metrics.c for r in scored])),
        pi=float(np.mean([r.metrics.pi_hit for r in scored])),
        ph=float(np.mean([r.metrics.ph_hit for r in scored])),
        pt=float(np.mean([r.metrics.pt_hit for r in scored])),
        median_time=float(median(r.metrics.wall_time for r in scored)),
        median_k=float(median(r.selected_k for r in scored)),
        median_test_mse=float(median(r.test_mse for r in scored)),
        results=results,
    )


def _run_one_replicate(index: int, generator: Callable[[int], TrueModel],
                       n: int, config: SelectionConfig, seed: int,
                       test_fraction: float) -> ReplicateResult:
    model = generator(fold_seed(seed, seeding.REP_MODEL, index, 0))
    data = simulate_dataset(model, n,
                            fold_seed(seed, seeding.REP_DATA, index, 0))
    rep_config = dataclasses.replace(
        config, fit_config=dataclasses.replace(
            config.fit_config,
            seed=fold_seed(seed, seeding.REP_SELECT, index, 0)))
    started = time.perf_counter()
    try:
        fitted, _ = select(data, None, rep_config)
    except Exception as exc:  # noqa: BLE001 - replicate errors are recorded
        return ReplicateResult(index=index, metrics=None,
                               error=f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - started
    test = simulate_dataset(
        model, max(1, round(test_fraction * n)),
        fold_seed(seed, seeding.REP_TEST, index, 0))
    return ReplicateResult(
        index=index,
        metrics=score_selection(model, fitted.arch, elapsed),
        selected_q=fitted.arch.q,
        selected_mask=fitted.arch.input_mask,
        selected_k=fitted.summary.k,
        test_mse=oos_mse(fitted, test),
    )


def run_replicates(generator: Callable[[int], TrueModel], n: int,
                   n_replicates: int, config: SelectionConfig, seed: int,
                   test_fraction: float = 0.2, n_jobs: int = 1) -> StudySummary:
    """Run a seeded replicate study and aggregate recovery metrics.

    Each replicate draws a fresh true model and dataset from seeds folded
    out of (seed, replicate index), runs the selector, and is scored
    against its own truth; a fresh test set measures out-of-sample error
    of the selected model. Results are deterministic in ``seed`` and do
    not depend on ``n_jobs``.
    """
    if n_replicates < 1:
        raise ValueError("n_replicates must be at least 1")
    tasks = (delayed(_run_one_replicate)(r, generator, n, config, seed,
                                         test_fraction)
             for r in range(n_replicates))
    results = Parallel(n_jobs=n_jobs)(tasks)
    return aggregate(results)
