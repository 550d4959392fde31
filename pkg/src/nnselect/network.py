"""Single-hidden-layer regression network.

The model is

    g(x) = g0 + sum_k gk * logistic(w0k + sum_j wjk * xj)

with the sum over hidden nodes k = 1..q and over the active covariates j.
This module owns the architecture description, the flat parameter layout,
the forward map, and exact derivatives of the residual sum of squares.

Parameter layout (frozen; all serialization depends on it): for each
hidden node k in order, the node bias w0k followed by its input weights
w1k..wpk, then the output bias g0, then the output weights g1..gq. The
total length is K = (p + 2) * q + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy.special import expit

if TYPE_CHECKING:
    from .data import Dataset

ACTIVATIONS = ("logistic",)


def param_count(p: int, q: int) -> int:
    """Number of network parameters for p active inputs and q hidden nodes."""
    if q < 1:
        raise ValueError("q must be at least 1")
    if p < 0:
        raise ValueError("p must be nonnegative")
    return (p + 2) * q + 1


@dataclass(frozen=True)
class Architecture:
    """An input subset plus a hidden-layer width.

    ``input_mask`` holds 0-based covariate column indices; it is stored
    sorted and de-duplicated. ``q`` counts logistic hidden nodes.
    """

    input_mask: tuple[int, ...]
    q: int
    activation: str = "logistic"

    def __post_init__(self):
        mask = tuple(sorted({int(i) for i in self.input_mask}))
        if any(i < 0 for i in mask):
            raise ValueError("covariate indices must be nonnegative")
        object.__setattr__(self, "input_mask", mask)
        if int(self.q) < 1:
            raise ValueError("need at least one hidden node")
        object.__setattr__(self, "q", int(self.q))
        if self.activation not in ACTIVATIONS:
            raise ValueError(f"unknown activation {self.activation!r}")

    @property
    def p(self) -> int:
        return len(self.input_mask)

    @property
    def n_params(self) -> int:
        return param_count(self.p, self.q)

    def with_inputs(self, input_mask) -> "Architecture":
        return Architecture(tuple(input_mask), self.q, self.activation)

    def with_q(self, q: int) -> "Architecture":
        return Architecture(self.input_mask, q, self.activation)


@dataclass(frozen=True)
class Weights:
    """Structured view of a flat parameter vector."""

    hidden_bias: np.ndarray    # (q,)
    input_weights: np.ndarray  # (q, p)
    output_bias: float
    output_weights: np.ndarray  # (q,)


def unpack_params(arch: Architecture, theta: np.ndarray) -> Weights:
    """Split a flat parameter vector into the layered weight blocks."""
    theta = np.asarray(theta, dtype=np.float64)
    if theta.shape != (arch.n_params,):
        raise ValueError(
            f"theta has shape {theta.shape}, expected ({arch.n_params},) "
            f"for p={arch.p}, q={arch.q}"
        )
    q, p = arch.q, arch.p
    hidden = theta[: q * (p + 1)].reshape(q, p + 1)
    return Weights(
        hidden_bias=hidden[:, 0].copy(),
        input_weights=hidden[:, 1:].copy(),
        output_bias=float(theta[q * (p + 1)]),
        output_weights=theta[q * (p + 1) + 1:].copy(),
    )


def pack_params(weights: Weights) -> np.ndarray:
    """Flatten weight blocks back into the canonical layout."""
    hidden = np.column_stack([weights.hidden_bias, weights.input_weights])
    return np.concatenate([
        hidden.ravel(),
        [weights.output_bias],
        weights.output_weights,
    ])


def _active_columns(arch: Architecture, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ValueError("X must be 2-d")
    if arch.input_mask and X.shape[1] <= max(arch.input_mask):
        raise ValueError(
            f"X has {X.shape[1]} columns but the mask needs index "
            f"{max(arch.input_mask)}"
        )
    return X[:, arch.input_mask]


def forward(arch: Architecture, theta: np.ndarray, x: np.ndarray) -> float:
    """Evaluate the network at a single covariate row."""
    x = np.asarray(x, dtype=np.float64).ravel()
    active = _active_columns(arch, x[np.newaxis, :])[0]
    if not np.isfinite(active).all():
        raise ValueError("non-finite covariate values")
    w = unpack_params(arch, theta)
    z = w.hidden_bias + w.input_weights @ active
    return float(w.output_bias + w.output_weights @ expit(z))


def predict_batch(arch: Architecture, theta: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Row-wise network predictions for a design matrix."""
    active = _active_columns(arch, X)
    if not np.isfinite(active).all():
        raise ValueError("non-finite covariate values")
    w = unpack_params(arch, theta)
    hidden = expit(active @ w.input_weights.T + w.hidden_bias)
    return w.output_bias + hidden @ w.output_weights


def rss(arch: Architecture, theta: np.ndarray, data: "Dataset") -> float:
    """Residual sum of squares on a dataset.

    A non-finite result is returned as-is (never clamped); the trainer
    treats it as a failed fit.
    """
    resid = data.y - predict_batch(arch, theta, data.X)
    with np.errstate(over="ignore", invalid="ignore"):
        return float(resid @ resid)


def rss_gradient(arch: Architecture, theta: np.ndarray, data: "Dataset") -> np.ndarray:
    """Exact gradient of the RSS in the flat parameter layout."""
    return make_rss_objective(arch, data)(np.asarray(theta, dtype=np.float64))[1]


def make_rss_objective(arch: Architecture, data: "Dataset"):
    """Bind (arch, data) into a fused RSS value-and-gradient callable.

    The returned function is what the optimizer iterates on, so the active
    covariate block is extracted once here rather than per evaluation.
    """
    X = np.ascontiguousarray(_active_columns(arch, data.X))
    y = data.y
    q, p = arch.q, arch.p
    k_hidden = q * (p + 1)

    def value_and_grad(theta: np.ndarray) -> tuple[float, np.ndarray]:
        hidden = theta[:k_hidden].reshape(q, p + 1)
        g0 = theta[k_hidden]
        g = theta[k_hidden + 1:]
        with np.errstate(over="ignore", invalid="ignore"):
            h = expit(X @ hidden[:, 1:].T + hidden[:, 0])   # (n, q)
            resid = y - (g0 + h @ g)
            value = float(resid @ resid)
            # dRSS/dw via the chain rule through each node's activation
            back = (resid[:, np.newaxis] * (h * (1.0 - h))) * g  # (n, q)
            grad_hidden = np.empty((q, p + 1))
            grad_hidden[:, 0] = back.sum(axis=0)
            grad_hidden[:, 1:] = back.T @ X
            grad = np.concatenate([
                grad_hidden.ravel(), [resid.sum()], h.T @ resid,
            ])
        return value, -2.0 * grad

    return value_and_grad
