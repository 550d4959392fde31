"""Scan the generator noise level for true-model recovery rates.

First pass: smoke configuration (n=500, n_init=5) over candidate noise
levels. Reports PT/PH/PI/C per level so the default noise_sd can be set
where the recovery targets are attainable.
"""

import functools
import sys
import time

from nnselect import FitConfig, SelectionConfig, generate_true_model, run_replicates

REPS = int(sys.argv[1]) if len(sys.argv) > 1 else 10
N = int(sys.argv[2]) if len(sys.argv) > 2 else 500
N_INIT = int(sys.argv[3]) if len(sys.argv) > 3 else 5
LEVELS = [float(v) for v in sys.argv[4].split(",")] if len(sys.argv) > 4 \
    else [0.05, 0.1, 0.2]

for sd in LEVELS:
    gen = functools.partial(generate_true_model, noise_sd=sd)
    cfg = SelectionConfig(q_max=10, objective="bic", strategy="hif",
                          fit_config=FitConfig(n_init=N_INIT, seed=0))
    t0 = time.perf_counter()
    s = run_replicates(gen, N, REPS, cfg, seed=20260809)
    dt = time.perf_counter() - t0
    print(f"noise_sd={sd}: PT={s.pt:.2f} PH={s.ph:.2f} PI={s.pi:.2f} "
          f"C={s.c_mean:.2f} medK={s.median_k:.0f} "
          f"medMSE={s.median_test_mse:.4f} failed={s.n_failed} "
          f"[{dt/REPS:.0f}s/rep]", flush=True)
