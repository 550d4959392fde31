"""Step through the three selection phases on data with known structure.

The response depends on two of five covariates through two logistic
ridges. Selection first picks the hidden width with all inputs present
(hidden phase), then backward-eliminates covariates (input phase), then
polishes with single-step moves in both directions (fine-tuning). BIC is
the objective, so every accepted move must buy its parameters.
"""

import numpy as np

from nnselect import Dataset, FitConfig, SelectionConfig, select

rng = np.random.default_rng(21)
n = 400
X = rng.uniform(size=(n, 5))
signal = 2.0 / (1 + np.exp(-(14 * X[:, 0] - 7))) \
    + 1.6 / (1 + np.exp(-(10 * X[:, 3] - 5)))
y = signal + rng.normal(0, 0.3, size=n)
data = Dataset(X, y, tuple(f"x{j}" for j in range(5)), "y")

config = SelectionConfig(
    q_max=4,
    objective="bic",
    strategy="hif",
    fit_config=FitConfig(n_init=5, seed=99),
)
model, trace = select(data, None, config)

print("true structure: inputs (x0, x3), two hidden ridges")
print("selected inputs:", [data.covariate_names[j]
                           for j in model.arch.input_mask])
print("selected q:", model.arch.q, " K:", model.summary.k)
print("BIC:", round(model.summary.bic, 2))

print("\ndecision trail (accepted steps only):")
for step in trace.accepted_steps():
    names = ",".join(data.covariate_names[j] for j in step.arch.input_mask)
    print(f"  {step.phase:<12} q={step.arch.q} inputs=[{names}] "
          f"objective={step.objective_value:.2f}")

print(f"\n{len(trace.steps)} candidates were fit in total; rejected moves")
print("stay in the trace with accepted=False for audit.")
