"""Pilot runs for the riskier acceptance settings (small replicate counts)."""

import sys
import time

from nnselect import FitConfig, SelectionConfig, generate_true_model, run_replicates

which = sys.argv[1] if len(sys.argv) > 1 else "all"
reps = int(sys.argv[2]) if len(sys.argv) > 2 else 10


def study(label, n, n_init, objective, strategy, n_reps, seed=20260809):
    cfg = SelectionConfig(q_max=10, objective=objective, strategy=strategy,
                          fit_config=FitConfig(n_init=n_init, seed=0))
    t0 = time.perf_counter()
    s = run_replicates(generate_true_model, n, n_reps, cfg, seed=seed)
    dt = (time.perf_counter() - t0) / n_reps
    print(f"{label}: PT={s.pt:.2f} PH={s.ph:.2f} PI={s.pi:.2f} C={s.c_mean:.2f} "
          f"medK={s.median_k:.0f} medMSE={s.median_test_mse:.3f} "
          f"medTime={s.median_time:.1f}s failed={s.n_failed} [{dt:.0f}s/rep]",
          flush=True)
    return s


if which in ("all", "objectives"):
    study("n=1000 ninit=5 BIC hif", 1000, 5, "bic", "hif", reps)
    study("n=1000 ninit=5 AIC hif", 1000, 5, "aic", "hif", reps)
    study("n=1000 ninit=5 OOS hif", 1000, 5, "oos", "hif", reps)

if which in ("all", "strategies"):
    study("n=250 ninit=5 BIC hif", 250, 5, "bic", "hif", reps)
    study("n=250 ninit=5 BIC hi ", 250, 5, "bic", "hi", reps)
    study("n=250 ninit=5 BIC ihf", 250, 5, "bic", "ihf", reps)
