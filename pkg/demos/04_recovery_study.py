"""A small known-truth recovery study.

Each replicate draws a fresh true network (3 important inputs, 10 pure
noise inputs, 3 hidden nodes), simulates data, runs BIC-driven selection,
and scores the result: C counts noise inputs correctly dropped, PI / PH /
PT are the probabilities of recovering the input set, the hidden width,
and the whole architecture. Desk-scale settings here; the CLI command
`nnselect simulate` exposes the same study with full knobs.
"""

import functools
import time

from nnselect import (FitConfig, SelectionConfig, generate_true_model,
                      run_replicates)

generator = functools.partial(generate_true_model)  # library default laws

config = SelectionConfig(
    q_max=6,
    objective="bic",
    strategy="hif",
    fit_config=FitConfig(n_init=3, seed=0),
)

started = time.perf_counter()
study = run_replicates(generator, n=600, n_replicates=5, config=config,
                       seed=20260809)
elapsed = time.perf_counter() - started

print(f"{study.n_replicates} replicates, {study.n_failed} failed, "
      f"{elapsed:.0f}s total\n")
print(f"C (noise inputs dropped, of 10): {study.c_mean:.2f}")
print(f"PI (correct input set):          {study.pi:.2f}")
print(f"PH (correct hidden width):       {study.ph:.2f}")
print(f"PT (correct architecture):       {study.pt:.2f}")
print(f"median selected K (true 16):     {study.median_k:.0f}")
print(f"median fresh-data MSE:           {study.median_test_mse:.3f}")

print("\nper replicate:")
for r in study.results:
    mask = ",".join(str(j + 1) for j in r.selected_mask)
    print(f"  #{r.index}: inputs=x[{mask}] q={r.selected_q} "
          f"K={r.selected_k} PT={'yes' if r.metrics.pt_hit else 'no'}")
