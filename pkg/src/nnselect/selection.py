"""Stepwise architecture selection.

Three building blocks, each a backward search driven by a pluggable
objective (BIC, AIC, or validation mean squared error):

* hidden phase -- fit every hidden-node count 1..q_max with the current
  inputs, keep the minimizer;
* input phase -- backward elimination of one covariate at a time while
  the objective strictly improves;
* fine-tuning -- alternate single hidden-node moves (grow or shrink) and
  single input moves (drop or add), accepting only strict improvements,
  until a full round changes nothing.

The standard composition runs them in that order (strategy ``hif``); the
other strategies reorder or truncate the same pieces. All accept
decisions require strict improvement, so accepted objective values are
strictly decreasing and termination is guaranteed on the finite
candidate space. Every candidate fit draws its seed from
(seed, phase, step, candidate), which makes runs reproducible and
independent of candidate evaluation order.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from . import seeding
from .criteria import DegenerateFit, oos_mse
from .data import Dataset, _round_half_up
from .network import Architecture
from .seeding import fold_seed
from .training import (AllStartsFailed, FitConfig, FittedModel,
                       UnderdeterminedFit, fit)

OBJECTIVES = ("bic", "aic", "oos")
STRATEGIES = ("hif", "ihf", "hi", "ih", "f")

_CANDIDATE_ERRORS = (AllStartsFailed, UnderdeterminedFit, DegenerateFit)


class PhaseFailed(Exception):
    """No candidate in a selection phase produced a usable fit."""


@dataclass(frozen=True)
class SelectionConfig:
    """Search space and objective for one selection run."""

    q_max: int
    objective: str = "bic"
    strategy: str = "hif"
    fit_config: FitConfig = field(default_factory=FitConfig)
    validation_fraction: float = 0.2  # used only when objective == "oos"

    def __post_init__(self):
        if self.q_max < 1:
            raise ValueError("q_max must be at least 1")
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if not 0.0 < self.validation_fraction < 1.0:
            raise ValueError("validation_fraction must be in (0, 1)")


@dataclass(frozen=True)
class TraceStep:
    """One evaluated candidate in a selection run."""

    phase: str
    arch: Architecture
    objective_value: float  # nan when the fit failed
    accepted: bool
    rss: float
    k: int
    starts_converged: int
    error: str | None = None


@dataclass(frozen=True)
class SelectionTrace:
    """Ordered record of every candidate considered during selection."""

    steps: tuple[TraceStep, ...]
    strategy: str
    objective: str

    def accepted_steps(self) -> list[TraceStep]:
        return [s for s in self.steps if s.accepted]

    @property
    def final_arch(self) -> Architecture:
        accepted = self.accepted_steps()
        if not accepted:
            raise ValueError("trace has no accepted steps")
        return accepted[-1].arch

    def phases(self) -> list[str]:
        seen: list[str] = []
        for s in self.steps:
            if s.phase not in seen:
                seen.append(s.phase)
        return seen


class _Evaluator:
    """Fits candidates and scores them under the active objective."""

    def __init__(self, data: Dataset, objective: str, fit_config: FitConfig,
                 validation: Dataset | None = None):
        if objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        if objective == "oos" and validation is None:
            raise ValueError("objective 'oos' needs a validation dataset")
        self.data = data
        self.objective = objective
        self.fit_config = fit_config
        self.validation = validation

    def seed_for(self, phase_tag: int, step: int, candidate: int) -> int:
        return fold_seed(self.fit_config.seed, phase_tag, step, candidate)

    def evaluate(self, arch: Architecture, seed: int) -> tuple[float, FittedModel]:
        config = dataclasses.replace(self.fit_config, seed=seed)
        model = fit(arch, self.data, config)
        if self.objective == "bic":
            value = model.summary.bic
        elif self.objective == "aic":
            value = model.summary.aic
        else:
            value = oos_mse(model, self.validation)
        return value, model

    def try_candidate(self, phase: str, phase_tag: int, step: int,
                      candidate: int, arch: Architecture,
                      steps: list[TraceStep]) -> tuple[float, FittedModel] | None:
        """Evaluate one candidate, recording a trace step; None on failure."""
        try:
            value, model = self.evaluate(
                arch, self.seed_for(phase_tag, step, candidate))
        except _CANDIDATE_ERRORS as exc:
            steps.append(TraceStep(
                phase=phase, arch=arch, objective_value=float("nan"),
                accepted=False, rss=float("nan"), k=arch.n_params,
                starts_converged=0, error=f"{type(exc).__name__}: {exc}",
            ))
            return None
        steps.append(TraceStep(
            phase=phase, arch=arch, objective_value=value, accepted=False,
            rss=model.summary.rss, k=model.summary.k,
            starts_converged=model.starts_converged,
        ))
        return value, model


def _accept(steps: list[TraceStep], index: int) -> None:
    steps[index] = dataclasses.replace(steps[index], accepted=True)


def _make_evaluator(data, objective, fit_config, validation) -> _Evaluator:
    if isinstance(objective, _Evaluator):
        return objective
    return _Evaluator(data, objective, fit_config or FitConfig(), validation)


def hidden_phase(data: Dataset, inputs, q_max: int, objective="bic",
                 fit_config: FitConfig | None = None, *,
                 validation: Dataset | None = None,
                 trace: list[TraceStep] | None = None) -> int:
    """Pick the hidden-node count in 1..q_max minimizing the objective.

    All candidates share the given input set; ties break toward fewer
    nodes. Candidates whose fit fails are excluded; if every candidate
    fails the phase raises PhaseFailed.
    """
    inputs = tuple(sorted(inputs))
    if not inputs:
        raise ValueError("hidden phase needs a nonempty input set")
    ev = _make_evaluator(data, objective, fit_config, validation)
    steps: list[TraceStep] = []
    best_q, best_value = None, np.inf
    for q in range(1, q_max + 1):
        out = ev.try_candidate("hidden", seeding.PHASE_HIDDEN, 0, q,
                               Architecture(inputs, q), steps)
        if out is not None and out[0] < best_value:
            best_q, best_value = q, out[0]
    if best_q is None:
        raise PhaseFailed("every hidden-node candidate failed to fit")
    # one step per candidate in q order, so the winner sits at q - 1
    _accept(steps, best_q - 1)
    if trace is not None:
        trace.extend(steps)
    return best_q


def input_phase(data: Dataset, inputs, q: int, objective="bic",
                fit_config: FitConfig | None = None, *,
                validation: Dataset | None = None,
                trace: list[TraceStep] | None = None) -> tuple[int, ...]:
    """Backward-eliminate covariates at a fixed hidden-node count.

    Repeatedly drops the single covariate whose removal most lowers the
    objective, as long as the drop is a strict improvement; stops when no
    removal helps or one covariate remains. Returns the surviving mask.
    """
    current = tuple(sorted(inputs))
    if not current:
        raise ValueError("input phase needs a nonempty input set")
    ev = _make_evaluator(data, objective, fit_config, validation)
    steps: list[TraceStep] = []

    out = ev.try_candidate("input", seeding.PHASE_INPUT, 0, 0,
                           Architecture(current, q), steps)
    if out is None:
        raise PhaseFailed("the input-phase incumbent failed to fit")
    _accept(steps, 0)
    incumbent_value = out[0]

    step = 1
    while len(current) > 1:
        best = None  # (value, covariate, step index)
        for j in current:
            cand = tuple(i for i in current if i != j)
            out = ev.try_candidate("input", seeding.PHASE_INPUT, step, j + 1,
                                   Architecture(cand, q), steps)
            if out is not None and (best is None or out[0] < best[0]):
                best = (out[0], j, len(steps) - 1)
        if best is None or best[0] >= incumbent_value:
            break
        incumbent_value = best[0]
        current = tuple(i for i in current if i != best[1])
        _accept(steps, best[2])
        step += 1

    if trace is not None:
        trace.extend(steps)
    return current


def fine_tune(data: Dataset, current: Architecture, q_max: int, all_inputs,
              objective="bic", fit_config: FitConfig | None = None, *,
              validation: Dataset | None = None,
              trace: list[TraceStep] | None = None) -> Architecture:
    """Alternate single hidden-node and single input moves until stable.

    Each round first tries q-1 / q+1 (ties favor shrinking), then a pool
    of all single-covariate removals and additions (ties favor removal,
    then the lowest covariate index). Only strictly improving moves are
    accepted; the search stops after a full round with no accepted move.
    """
    all_inputs = tuple(sorted(all_inputs))
    ev = _make_evaluator(data, objective, fit_config, validation)
    steps: list[TraceStep] = []

    out = ev.try_candidate("fine-hidden", seeding.PHASE_FINE_HIDDEN, 0, 0,
                           current, steps)
    if out is None:
        raise PhaseFailed("the fine-tuning incumbent failed to fit")
    _accept(steps, 0)
    value = out[0]

    step = 1
    while True:
        moved = False

        # hidden move: shrink first so exact ties favor parsimony
        best = None
        for q_new in (current.q - 1, current.q + 1):
            if not 1 <= q_new <= q_max:
                continue
            out = ev.try_candidate("fine-hidden", seeding.PHASE_FINE_HIDDEN,
                                   step, q_new, current.with_q(q_new), steps)
            if out is not None and (best is None or out[0] < best[0]):
                best = (out[0], current.with_q(q_new), len(steps) - 1)
        if best is not None and best[0] < value:
            value, current = best[0], best[1]
            _accept(steps, best[2])
            moved = True

        # input move: removals and additions compete in one pool,
        # enumerated removals-first in covariate order
        pool: list[tuple[int, Architecture]] = []
        if current.p > 1:
            for j in current.input_mask:
                pool.append((2 * j + 1, current.with_inputs(
                    tuple(i for i in current.input_mask if i != j))))
        for j in all_inputs:
            if j not in current.input_mask:
                pool.append((2 * j + 2, current.with_inputs(
                    current.input_mask + (j,))))
        best = None
        for code, cand in pool:
            out = ev.try_candidate("fine-input", seeding.PHASE_FINE_INPUT,
                                   step, code, cand, steps)
            if out is not None and (best is None or out[0] < best[0]):
                best = (out[0], cand, len(steps) - 1)
        if best is not None and best[0] < value:
            value, current = best[0], best[1]
            _accept(steps, best[2])
            moved = True

        if not moved:
            break
        step += 1

    if trace is not None:
        trace.extend(steps)
    return current


def _validation_split(data: Dataset, fraction: float, seed: int
                      ) -> tuple[Dataset, Dataset]:
    """Split off a validation set sized at ``fraction`` of the remainder."""
    n_val = _round_half_up(fraction * data.n / (1.0 + fraction))
    if n_val < 1 or data.n - n_val < 1:
        raise ValueError(f"cannot carve a validation set from n={data.n}")
    perm = np.random.default_rng(
        np.random.SeedSequence(seed)).permutation(data.n)
    val_rows = np.sort(perm[:n_val])
    fit_rows = np.sort(perm[n_val:])
    return data.take(fit_rows), data.take(val_rows)


def select(data: Dataset, inputs=None, config: SelectionConfig | None = None,
           ) -> tuple[FittedModel, SelectionTrace]:
    """Run a full selection strategy and refit the winning architecture.

    ``inputs`` defaults to every covariate in the data. Under the ``oos``
    objective the data is first split (seeded) into fitting and
    validation rows; all fits use fitting rows only and the objective is
    the validation mean squared error.
    """
    if config is None:
        raise ValueError("a SelectionConfig is required")
    if inputs is None:
        inputs = range(data.p_all)
    inputs = tuple(sorted(inputs))
    if not inputs:
        raise ValueError("selection needs at least one candidate covariate")

    fit_config = config.fit_config
    fit_data, validation = data, None
    if config.objective == "oos":
        fit_data, validation = _validation_split(
            data, config.validation_fraction,
            fold_seed(fit_config.seed, seeding.PHASE_VALIDATION_SPLIT, 0, 0))

    ev = _Evaluator(fit_data, config.objective, fit_config, validation)
    steps: list[TraceStep] = []
    kw = dict(validation=validation, trace=steps)

    if config.strategy in ("hif", "hi"):
        q_star = hidden_phase(fit_data, inputs, config.q_max, ev, fit_config, **kw)
        mask = input_phase(fit_data, inputs, q_star, ev, fit_config, **kw)
        arch = Architecture(mask, q_star)
    elif config.strategy in ("ihf", "ih"):
        mask = input_phase(fit_data, inputs, config.q_max, ev, fit_config, **kw)
        q_star = hidden_phase(fit_data, mask, config.q_max, ev, fit_config, **kw)
        arch = Architecture(mask, q_star)
    else:  # "f": fine-tune from the full model
        arch = Architecture(inputs, config.q_max)
    if config.strategy in ("hif", "ihf", "f"):
        arch = fine_tune(fit_data, arch, config.q_max, inputs, ev, fit_config, **kw)

    final_seed = fold_seed(fit_config.seed, seeding.PHASE_FINAL, 0, 0)
    value, model = ev.evaluate(arch, final_seed)
    steps.append(TraceStep(
        phase="final", arch=arch, objective_value=value, accepted=True,
        rss=model.summary.rss, k=model.summary.k,
        starts_converged=model.starts_converged,
    ))
    trace = SelectionTrace(steps=tuple(steps), strategy=config.strategy,
                           objective=config.objective)
    return model, trace
