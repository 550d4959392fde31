"""Walk through the regression network and its fit criteria.

The model is a single hidden layer of logistic units:

    g(x) = g0 + sum_k gk * logistic(w0k + sum_j wjk * xj)

We build a tiny architecture by hand, look at the flat parameter layout,
and check the likelihood identities that drive everything else.
"""

import numpy as np

from nnselect import (Architecture, Dataset, Weights, forward, pack_params,
                      param_count, predict_batch, rss, rss_gradient,
                      summarize_fit, unpack_params)

# ---------------------------------------------------------------------------
# Architectures are an input subset plus a hidden width. K = (p + 2) q + 1.
arch = Architecture(input_mask=(0, 2), q=2)
print("architecture:", arch)
print("p =", arch.p, " q =", arch.q, " K =", arch.n_params)
assert arch.n_params == param_count(2, 2) == 9

# ---------------------------------------------------------------------------
# Parameters live in one flat vector: per hidden node its bias then input
# weights, then the output bias, then the output weights.
weights = Weights(
    hidden_bias=np.array([0.5, -1.0]),
    input_weights=np.array([[2.0, -1.0], [1.0, 3.0]]),
    output_bias=0.2,
    output_weights=np.array([1.5, -0.7]),
)
theta = pack_params(weights)
print("\ntheta layout:", theta)
assert np.array_equal(pack_params(unpack_params(arch, theta)), theta)

# Covariate 1 is outside the mask, so it cannot move the prediction.
x = np.array([0.3, 99.0, 0.8])
print("g(x) =", forward(arch, theta, x))
x[1] = -99.0
print("g(x) with masked covariate changed:", forward(arch, theta, x))

# ---------------------------------------------------------------------------
# Residual sum of squares and its exact gradient feed the optimizer.
rng = np.random.default_rng(0)
X = rng.uniform(size=(40, 3))
y = predict_batch(arch, theta, X) + rng.normal(0, 0.1, size=40)
data = Dataset(X, y, ("u", "v", "w"), "y")

value = rss(arch, theta, data)
grad = rss_gradient(arch, theta, data)
print("\nrss at the true weights:", round(value, 4))
print("gradient sup-norm:", round(float(np.abs(grad).max()), 4))

# ---------------------------------------------------------------------------
# With Gaussian errors the variance is profiled out: sigma2 = RSS / n, and
# the information criteria count the K network weights plus sigma2.
summary = summarize_fit(value, data.n, arch.n_params)
print("\nsigma2_hat =", round(summary.sigma2_hat, 5))
print("log_lik    =", round(summary.log_lik, 3))
print("BIC        =", round(summary.bic, 3))
print("AIC        =", round(summary.aic, 3))
assert np.isclose(summary.bic,
                  -2 * summary.log_lik + np.log(data.n) * (summary.k + 1))
