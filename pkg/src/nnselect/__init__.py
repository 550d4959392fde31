"""Likelihood-based model selection for single-hidden-layer network regression."""

from .criteria import (DegenerateFit, FitSummary, aic, bic, log_likelihood,
                       oos_mse, sigma2_mle, summarize_fit)
from .data import Dataset, Scaler, apply_scaler, fit_scaler, load_csv, split
from .network import (Architecture, Weights, forward, pack_params,
                      param_count, predict_batch, rss, rss_gradient,
                      unpack_params)
from .selection import (SelectionConfig, SelectionTrace, TraceStep,
                        fine_tune, hidden_phase, input_phase, select)
from .simulation import (ReplicateMetrics, StudySummary, TrueModel,
                         generate_true_model, run_replicates,
                         score_selection, simulate_dataset)
from .training import (AllStartsFailed, FitConfig, FittedModel,
                       UnderdeterminedFit, fit, init_params)

__version__ = "0.1.0"

__all__ = [
    "Architecture", "Weights", "param_count", "forward", "predict_batch",
    "rss", "rss_gradient", "pack_params", "unpack_params",
    "FitSummary", "sigma2_mle", "log_likelihood", "bic", "aic",
    "summarize_fit", "oos_mse", "DegenerateFit",
    "FitConfig", "FittedModel", "fit", "init_params",
    "AllStartsFailed", "UnderdeterminedFit",
    "SelectionConfig", "SelectionTrace", "TraceStep",
    "hidden_phase", "input_phase", "fine_tune", "select",
    "TrueModel", "ReplicateMetrics", "StudySummary",
    "generate_true_model", "simulate_dataset", "score_selection",
    "run_replicates",
    "Dataset", "Scaler", "load_csv", "split", "fit_scaler", "apply_scaler",
]
