"""Command-line interface.

Three subcommands, all fully seeded so that rerunning with the same flags
reproduces the report bit-for-bit (wall-clock lines live in a separate
[timing] section):

* ``select``   load -> split -> rescale -> run a selection strategy, then
  compare the selected model against the full (all inputs, q_max) model
  on the held-out test rows;
* ``fit``      fit one explicitly specified architecture;
* ``simulate`` run a known-truth replicate study and report recovery
  metrics.

Reports are structured text (key-value and table sections); ``--out``
writes to a file instead of stdout and ``--trace-out`` /
``--replicates-out`` add flat CSV side files.
"""

from __future__ import annotations

import argparse
import functools
import sys
import time
from dataclasses import dataclass

from . import seeding
from .criteria import DegenerateFit, oos_mse
from .data import Dataset, apply_scaler, fit_scaler, load_csv, split
from .network import Architecture
from .seeding import fold_seed
from .selection import PhaseFailed, SelectionConfig, SelectionTrace, select
from .simulation import (DEFAULT_NOISE_SD, StudySummary, generate_true_model,
                         run_replicates)
from .training import AllStartsFailed, FitConfig, FittedModel, fit

BUNDLED = ("boston", "red-wine", "white-wine")


@dataclass(frozen=True)
class RunReport:
    """Everything a command produced, ready to render or inspect."""

    command: str
    config: dict
    sections: tuple[tuple[str, tuple[str, ...]], ...]
    timing: tuple[str, ...]
    trace: SelectionTrace | None = None
    trace_csv: tuple[str, ...] | None = None
    selected: FittedModel | None = None
    study: StudySummary | None = None

    def render(self) -> str:
        lines = [f"# nnselect {self.command} report", "", "[config]"]
        lines += [f"{k}: {v}" for k, v in self.config.items()]
        for title, rows in self.sections:
            lines += ["", f"[{title}]", *rows]
        lines += ["", "[timing]", *self.timing, ""]
        return "\n".join(lines)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.10g}"
    return str(x)


def _load(args) -> Dataset:
    if args.data is not None:
        if args.response is None:
            raise SystemExit("--response is required with --data")
        return load_csv(args.data, args.response)
    if args.dataset is not None:
        from . import datasets
        return datasets.load_dataset(args.dataset.replace("-", "_"))
    raise SystemExit("provide --data PATH --response NAME, or --dataset NAME")


def _fit_config(args, seed: int) -> FitConfig:
    return FitConfig(n_init=args.n_init, max_iterations=args.max_iter,
                     gradient_tolerance=args.grad_tol,
                     init_range=args.init_range, seed=seed)


def _echo_common(args, extra: dict | None = None) -> dict:
    config = {
        "data": args.data or args.dataset,
        "response": getattr(args, "response", None),
        "seed": args.seed,
        "n_init": args.n_init,
        "max_iter": args.max_iter,
        "grad_tol": _fmt(args.grad_tol),
        "init_range": _fmt(args.init_range),
    }
    if extra:
        config.update(extra)
    return config


def _model_rows(name: str, data: Dataset, model: FittedModel,
                test_error: float | None) -> list[str]:
    names = [data.covariate_names[i] for i in model.arch.input_mask]
    s = model.summary
    rows = [
        f"inputs: {','.join(names)}",
        f"p: {model.arch.p}",
        f"q: {model.arch.q}",
        f"K: {s.k}",
        f"n: {s.n}",
        f"rss: {_fmt(s.rss)}",
        f"sigma2_hat: {_fmt(s.sigma2_hat)}",
        f"log_lik: {_fmt(s.log_lik)}",
        f"bic: {_fmt(s.bic)}",
        f"aic: {_fmt(s.aic)}",
        f"starts_converged: {model.starts_converged}/{model.n_starts}",
    ]
    if test_error is not None:
        rows.append(f"test_oos: {_fmt(test_error)}")
    return rows


def _trace_rows(data: Dataset, trace: SelectionTrace) -> list[str]:
    header = "step,phase,accepted,q,p,inputs,objective,rss,K,converged,error"
    rows = [header]
    for i, s in enumerate(trace.steps):
        names = ";".join(data.covariate_names[j] for j in s.arch.input_mask)
        rows.append(",".join([
            str(i), s.phase, "1" if s.accepted else "0", str(s.arch.q),
            str(s.arch.p), names, _fmt(s.objective_value), _fmt(s.rss),
            str(s.k), str(s.starts_converged), s.error or "",
        ]))
    return rows


def _prepare_split(args, data: Dataset):
    """Shared load/split/rescale pipeline for fit and select."""
    if args.test_fraction > 0:
        train, test = split(data, args.test_fraction,
                            fold_seed(args.seed, seeding.TEST_SPLIT, 0, 0))
    else:
        train, test = data, None
    scaler = fit_scaler(train)
    train_s = apply_scaler(scaler, train)
    test_s = apply_scaler(scaler, test) if test is not None else None
    return train_s, test_s


def cmd_select(args) -> RunReport:
    data = _load(args)
    train, test = _prepare_split(args, data)
    config = SelectionConfig(
        q_max=args.q_max, objective=args.objective, strategy=args.strategy,
        fit_config=_fit_config(args, args.seed),
        validation_fraction=args.val_fraction,
    )
    started = time.perf_counter()
    model, trace = select(train, None, config)
    elapsed = time.perf_counter() - started

    full_arch = Architecture(tuple(range(train.p_all)), args.q_max)
    full_seed = fold_seed(args.seed, seeding.PHASE_FULL_MODEL, 0, 0)
    full = fit(full_arch, train, _fit_config(args, full_seed))

    sel_oos = oos_mse(model, test) if test is not None else None
    full_oos = oos_mse(full, test) if test is not None else None

    comparison = [
        f"delta_bic_full_minus_selected: {_fmt(full.summary.bic - model.summary.bic)}",
        f"delta_k_full_minus_selected: {full.summary.k - model.summary.k}",
    ]
    if test is not None:
        comparison.append(f"test_n: {test.n}")

    report = RunReport(
        command="select",
        config=_echo_common(args, {
            "q_max": args.q_max, "objective": args.objective,
            "strategy": args.strategy,
            "test_fraction": _fmt(args.test_fraction),
            "val_fraction": _fmt(args.val_fraction),
            "n_train": train.n, "n_test": test.n if test is not None else 0,
            "rows_rejected": data.n_rejected,
        }),
        sections=(
            ("selected-model", tuple(_model_rows("selected", train, model, sel_oos))),
            ("full-model", tuple(_model_rows("full", train, full, full_oos))),
            ("comparison", tuple(comparison)),
            ("trace", tuple(_trace_rows(train, trace))),
        ),
        timing=(f"wall_time_s: {elapsed:.3f}",),
        trace=trace,
        trace_csv=tuple(_trace_rows(train, trace)),
        selected=model,
    )
    return report


def cmd_fit(args) -> RunReport:
    data = _load(args)
    train, test = _prepare_split(args, data)
    try:
        mask = tuple(train.column_index(name.strip())
                     for name in args.inputs.split(","))
    except KeyError as exc:
        raise SystemExit(str(exc)) from None
    arch = Architecture(mask, args.q)
    started = time.perf_counter()
    model = fit(arch, train,
                _fit_config(args, fold_seed(args.seed, seeding.FIXED_FIT, 0, 0)))
    elapsed = time.perf_counter() - started
    test_error = oos_mse(model, test) if test is not None else None
    return RunReport(
        command="fit",
        config=_echo_common(args, {
            "inputs": args.inputs, "q": args.q,
            "test_fraction": _fmt(args.test_fraction),
            "n_train": train.n, "n_test": test.n if test is not None else 0,
            "rows_rejected": data.n_rejected,
        }),
        sections=(
            ("fitted-model", tuple(_model_rows("fitted", train, model, test_error))),
        ),
        timing=(f"wall_time_s: {elapsed:.3f}",),
        selected=model,
    )


def cmd_simulate(args) -> RunReport:
    generator = functools.partial(
        generate_true_model, p_important=args.p_important,
        p_noise=args.p_noise, q_true=args.q_true, noise_sd=args.noise_sd)
    config = SelectionConfig(
        q_max=args.q_max, objective=args.objective, strategy=args.strategy,
        fit_config=_fit_config(args, 0),
        validation_fraction=args.val_fraction,
    )
    started = time.perf_counter()
    study = run_replicates(generator, args.n, args.replicates, config,
                           seed=args.seed, n_jobs=args.jobs)
    elapsed = time.perf_counter() - started

    aggregate_rows = [
        f"replicates: {study.n_replicates}",
        f"failed: {study.n_failed}",
        f"c_mean: {_fmt(study.c_mean)}",
        f"pi: {_fmt(study.pi)}",
        f"ph: {_fmt(study.ph)}",
        f"pt: {_fmt(study.pt)}",
        f"median_k: {_fmt(study.median_k)}",
        f"median_test_mse: {_fmt(study.median_test_mse)}",
    ]
    rep_rows = ["replicate,c,pi,ph,pt,q,k,test_mse,error"]
    for r in study.results:
        if r.metrics is None:
            rep_rows.append(f"{r.index},,,,,,,,{r.error}")
        else:
            m = r.metrics
            rep_rows.append(",".join([
                str(r.index), str(m.c), str(int(m.pi_hit)),
                str(int(m.ph_hit)), str(int(m.pt_hit)), str(r.selected_q),
                str(r.selected_k), _fmt(r.test_mse), "",
            ]))
    return RunReport(
        command="simulate",
        config={
            "n": args.n, "replicates": args.replicates,
            "p_important": args.p_important, "p_noise": args.p_noise,
            "q_true": args.q_true, "noise_sd": _fmt(args.noise_sd),
            "q_max": args.q_max, "objective": args.objective,
            "strategy": args.strategy, "seed": args.seed,
            "n_init": args.n_init, "max_iter": args.max_iter,
            "grad_tol": _fmt(args.grad_tol),
            "init_range": _fmt(args.init_range),
            "val_fraction": _fmt(args.val_fraction),
            "test_fraction": _fmt(args.test_fraction),
        },
        sections=(
            ("aggregate", tuple(aggregate_rows)),
            ("replicates", tuple(rep_rows)),
        ),
        timing=(
            f"median_replicate_s: {study.median_time:.3f}",
            f"wall_time_s: {elapsed:.3f}",
        ),
        study=study,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nnselect",
        description="Information-criteria model selection for single-hidden-"
                    "layer neural network regression.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_data=True):
        if with_data:
            p.add_argument("--data", help="CSV file with a header row")
            p.add_argument("--response", help="response column name")
            p.add_argument("--dataset", choices=BUNDLED,
                           help="bundled dataset instead of --data")
            p.add_argument("--test-fraction", type=float, default=0.1)
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--n-init", type=int, default=5)
        p.add_argument("--max-iter", type=int, default=500)
        p.add_argument("--grad-tol", type=float, default=1e-6)
        p.add_argument("--init-range", type=float, default=0.7)
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes for independent work units")
        p.add_argument("--out", help="write the report here instead of stdout")

    def search(p):
        p.add_argument("--q-max", type=int, default=10)
        p.add_argument("--objective", choices=("bic", "aic", "oos"),
                       default="bic")
        p.add_argument("--strategy", choices=("hif", "ihf", "hi", "ih", "f"),
                       default="hif")
        p.add_argument("--val-fraction", type=float, default=0.2,
                       help="validation share for the oos objective")

    p_select = sub.add_parser("select", help="run model selection on a table")
    common(p_select)
    search(p_select)
    p_select.add_argument("--trace-out", help="write the trace as CSV here")
    p_select.set_defaults(func=cmd_select)

    p_fit = sub.add_parser("fit", help="fit one fixed architecture")
    common(p_fit)
    p_fit.add_argument("--inputs", required=True,
                       help="comma-separated covariate names")
    p_fit.add_argument("--q", type=int, required=True)
    p_fit.set_defaults(func=cmd_fit)

    p_sim = sub.add_parser("simulate", help="known-truth recovery study")
    common(p_sim, with_data=False)
    search(p_sim)
    p_sim.add_argument("--n", type=int, default=500,
                       help="rows per simulated dataset")
    p_sim.add_argument("--replicates", type=int, default=100)
    p_sim.add_argument("--p-important", type=int, default=3)
    p_sim.add_argument("--p-noise", type=int, default=10)
    p_sim.add_argument("--q-true", type=int, default=3)
    p_sim.add_argument("--noise-sd", type=float, default=DEFAULT_NOISE_SD,
                       help="generator noise level")
    p_sim.add_argument("--test-fraction", type=float, default=0.2,
                       help="fresh test rows as a share of n")
    p_sim.add_argument("--replicates-out",
                       help="write per-replicate CSV (with wall times) here")
    p_sim.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except (ValueError, FileNotFoundError, KeyError, AllStartsFailed,
            PhaseFailed, DegenerateFit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = report.render()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if getattr(args, "trace_out", None) and report.trace_csv is not None:
        with open(args.trace_out, "w") as fh:
            fh.write("\n".join(report.trace_csv) + "\n")
    if getattr(args, "replicates_out", None) and report.study is not None:
        with open(args.replicates_out, "w") as fh:
            fh.write("replicate,c,pi,ph,pt,q,k,test_mse,wall_time_s,error\n")
            for r in report.study.results:
                if r.metrics is None:
                    fh.write(f"{r.index},,,,,,,,,{r.error}\n")
                else:
                    m = r.metrics
                    fh.write(",".join([
                        str(r.index), str(m.c), str(int(m.pi_hit)),
                        str(int(m.ph_hit)), str(int(m.pt_hit)),
                        str(r.selected_q), str(r.selected_k),
                        _fmt(r.test_mse), f"{m.wall_time:.3f}", "",
                    ]) + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
