import math

import numpy as np
import pytest

from nnselect import Architecture, Dataset, init_params


def scalar_net(x_active, hidden_bias, input_weights, output_bias, output_weights):
    """Straight transcription of the model formula, one term at a time.

    Kept deliberately independent of the library's vectorized code so it
    can serve as an oracle for forward / rss / prediction tests.
    """
    total = output_bias
    for k in range(len(output_weights)):
        z = hidden_bias[k]
        for j in range(len(x_active)):
            z += input_weights[k][j] * x_active[j]
        total += output_weights[k] * (1.0 / (1.0 + math.exp(-z)))
    return total


def central_diff_gradient(f, theta, h=1e-6):
    """Central finite-difference gradient, the reference for exact gradients."""
    theta = np.asarray(theta, dtype=np.float64)
    grad = np.empty_like(theta)
    for i in range(theta.size):
        up = theta.copy()
        dn = theta.copy()
        up[i] += h
        dn[i] -= h
        grad[i] = (f(up) - f(dn)) / (2.0 * h)
    return grad


def random_problem(rng, n=12, p_all=4, p=2, q=2):
    """A random (architecture, theta, dataset) triple."""
    mask = tuple(sorted(rng.choice(p_all, size=p, replace=False).tolist()))
    arch = Architecture(mask, q)
    theta = init_params(arch, rng, 1.5)
    X = rng.uniform(-1.0, 2.0, size=(n, p_all))
    y = rng.normal(0.0, 1.0, size=n)
    names = tuple(f"c{j}" for j in range(p_all))
    return arch, theta, Dataset(X, y, names, "y")


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
