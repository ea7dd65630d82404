"""Command-line interface.

    evoweights weights --input data.csv --spec data.spec [--mode both] [--iters N]
    evoweights rank    --input data.csv --spec data.spec [--min]
    evoweights metrics --input data.csv --spec data.spec
    evoweights report  --input data.csv --spec data.spec --format json --out report.json

Exit status: 0 success, 2 usage, 3 input parse error, 4 spec/normalization or
configuration error, 5 dynamics error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

import numpy as np

from evoweights import __version__
from evoweights.core import ColumnMeans, EvoWeightsError, InvalidDataError, WeightVector, column_means
from evoweights.dynamics import (
    Converged,
    IterationConfig,
    MaxIterations,
    PositivityFailure,
    PositivityViolation,
    Trajectory,
    iterate,
)
from evoweights.equilibrium import fixed_point, fixed_point_residual
from evoweights.io import ParseError, SpecError, read_column_spec, read_dataset
from evoweights.metrics import feature_impact, impact_norm, qualified_impact_norm, top_cohort
from evoweights.normalize import (
    NormalizationError,
    NormalizationSpec,
    Strategy,
    normalize,
    order_preserving_columns,
)
from evoweights.ranking import RankReport, certify_scalarization, rank

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_SPEC = 4
EXIT_DYNAMICS = 5

COMMANDS = ("weights", "rank", "metrics", "report")
MODES = ("iterate", "closed-form", "both")


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str
    spec: str | None = None
    mode: str = "both"
    max_iterations: int = 10_000
    tolerance: float = 1e-12
    init: str = "uniform"
    maximize: bool = True
    format: str = "table"
    out: str | None = None
    delimiter: str = ","
    row_labels: bool = False

    def echo(self, spec: NormalizationSpec, names: tuple[str, ...]) -> dict[str, Any]:
        return {
            "command": self.command,
            "input": self.input,
            "spec": self.spec,
            "columns": [
                {"name": n, "strategy": s.value, "direction": d.value}
                for n, s, d in zip(names, spec.strategies, spec.directions)
            ],
            "mode": self.mode,
            "max_iterations": self.max_iterations,
            "tolerance": self.tolerance,
            "init": self.init,
            "objective": "max" if self.maximize else "min",
            "delimiter": self.delimiter,
            "row_labels": self.row_labels,
        }


class ConfigError(EvoWeightsError, ValueError):
    pass


def parse_init(init: str, m: int) -> WeightVector:
    if init.strip().lower() == "uniform":
        return WeightVector.uniform(m)
    try:
        raw = np.array([float(v) for v in init.split(",")])
    except ValueError:
        raise ConfigError(f"--init must be 'uniform' or {m} comma-separated numbers") from None
    if raw.size != m:
        raise ConfigError(f"--init has {raw.size} weights, dataset has {m} columns")
    if not np.all(np.isfinite(raw)) or raw.min() <= 0.0 or abs(raw.sum() - 1.0) > 1e-6:
        raise ConfigError("--init weights must be positive and sum to 1")
    return WeightVector(raw)


def _termination(term) -> dict[str, Any]:
    if isinstance(term, Converged):
        return {"kind": "converged", "steps": term.steps}
    if isinstance(term, MaxIterations):
        return {"kind": "max-iterations", "steps": term.steps}
    if isinstance(term, PositivityFailure):
        return {"kind": "positivity-violation", "step": term.step, "feature": term.feature}
    return {"kind": "none"}


def _floats(a) -> list[float]:
    return [float(v) for v in np.asarray(a).ravel()]


class Pipeline:
    """Loads, normalizes and evaluates one dataset according to a RunConfig."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.data = read_dataset(config.input, config.delimiter, config.row_labels)
        names = self.data.column_names
        if config.spec:
            self.spec = read_column_spec(config.spec, names)
        else:
            self.spec = NormalizationSpec(tuple(Strategy.IDENTITY for _ in names))
        self.phi = normalize(self.data, self.spec)
        self.means: ColumnMeans = column_means(self.phi)
        self.gamma_star = fixed_point(self.means)
        self.gamma0 = parse_init(config.init, len(names))
        self._trajectory: Trajectory | None = None

    @property
    def trajectory(self) -> Trajectory:
        if self._trajectory is None:
            cfg = IterationConfig(self.config.max_iterations, self.config.tolerance, True)
            self._trajectory = iterate(self.gamma0, self.means, cfg)
        return self._trajectory

    def learned_weights(self) -> WeightVector:
        if self.config.mode == "iterate":
            return self.trajectory.final
        return self.gamma_star

    def weights_section(self) -> dict[str, Any]:
        mode = self.config.mode
        out: dict[str, Any] = {"column_means": _floats(self.means.means)}
        if mode in ("iterate", "both"):
            traj = self.trajectory
            out["trajectory"] = {
                "states": [_floats(s.weights) for s in traj.states],
                "termination": _termination(traj.termination),
                "steps": traj.steps,
            }
            out["final"] = _floats(traj.final.weights)
            out["gap_linf"] = float(np.max(np.abs(traj.final.weights - self.gamma_star.weights)))
            out["final_residual"] = fixed_point_residual(traj.final, self.means)
        if mode in ("closed-form", "both"):
            out["equilibrium"] = _floats(self.gamma_star.weights)
        return out

    def _regime(self, gamma: WeightVector) -> dict[str, Any]:
        maximize = self.config.maximize
        report: RankReport = rank(self.phi, gamma, maximize)
        cert = certify_scalarization(self.phi, gamma, maximize)
        return {
            "weights": _floats(gamma.weights),
            "scores": _floats(report.scores),
            "order": [int(i) for i in report.order],
            "pareto": [bool(f) for f in report.pareto_flags],
            "certified": cert.certified,
            "best_rows": list(cert.best_rows),
            "witness": list(cert.witness) if cert.witness else None,
        }

    def rank_section(self) -> dict[str, Any]:
        return {
            "objective": "max" if self.config.maximize else "min",
            "dominance_on": "normalized",
            "order_preserving": dict(
                zip(self.data.column_names, order_preserving_columns(self.data, self.phi, self.spec))
            ),
            "uniform": self._regime(WeightVector.uniform(self.phi.shape[1])),
            "learned": self._regime(self.learned_weights()),
        }

    def metrics_section(self) -> dict[str, Any]:
        gamma = self.learned_weights()
        cohort = top_cohort(self.phi)
        return {
            "impact_norm": impact_norm(self.means, gamma),
            "qualified_impact_norm": qualified_impact_norm(self.phi, gamma),
            "cohort": [int(i) for i in cohort],
            "cohort_labels": [self.data.row_labels[i] for i in cohort],
            "feature_impact": _floats(feature_impact(self.phi, gamma)),
        }

    def body(self) -> dict[str, Any]:
        cmd = self.config.command
        body: dict[str, Any] = {
            "config": self.config.echo(self.spec, self.data.column_names),
            "dataset": {
                "rows": self.data.shape[0],
                "columns": list(self.data.column_names),
                "row_labels": list(self.data.row_labels),
            },
        }
        if cmd in ("weights", "report"):
            body["weights"] = self.weights_section()
        if cmd in ("rank", "report"):
            body["rankings"] = self.rank_section()
        if cmd in ("metrics", "report"):
            body["metrics"] = self.metrics_section()
        return body


def structured_document(body: dict[str, Any]) -> str:
    """Serialize a report; everything outside ``body`` is run metadata."""
    doc = {"meta": {"tool": "evoweights", "version": __version__, "schema": 1}, "body": body}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _fmt(values, digits: int) -> str:
    return "  ".join(f"{v:.{digits}f}" for v in values)


def render_table(body: dict[str, Any]) -> str:
    cols = body["dataset"]["columns"]
    labels = body["dataset"]["row_labels"]
    lines: list[str] = []
    head = "".join(f"{c:>10}" for c in cols)

    if "weights" in body:
        w = body["weights"]
        lines += ["Column means", f"{'':12}{head}", f"{'mean':12}" + "".join(f"{v:10.4f}" for v in w["column_means"]), ""]
        if "trajectory" in w:
            lines += ["Weight trajectory", f"{'k':12}{head}"]
            for k, state in enumerate(w["trajectory"]["states"]):
                lines.append(f"{k:<12}" + "".join(f"{v:10.4f}" for v in state))
            term = w["trajectory"]["termination"]
            lines.append(f"termination: {term['kind']} after {w['trajectory']['steps']} steps")
        if "equilibrium" in w:
            lines.append(f"{'closed form':12}" + "".join(f"{v:10.4f}" for v in w["equilibrium"]))
        if "gap_linf" in w:
            lines.append(f"max |final - closed form| = {w['gap_linf']:.3e}")
        lines.append("")

    if "rankings" in body:
        r = body["rankings"]
        lines.append(f"Rankings (objective: {r['objective']}, dominance checked on normalized data)")
        for key, title in (("uniform", "uniform weights"), ("learned", "learned weights")):
            reg = r[key]
            lines.append(f"-- {title}: {_fmt(reg['weights'], 4)}")
            lines.append(f"{'rank':>4}  {'score':>8}  {'pareto':>6}  row")
            for pos, i in enumerate(reg["order"], start=1):
                flag = "yes" if reg["pareto"][i] else "no"
                lines.append(f"{pos:>4}  {reg['scores'][i]:8.6f}  {flag:>6}  {labels[i]}")
            lines.append(f"best row Pareto optimal: {'yes' if reg['certified'] else 'NO'}")
        lines.append("")

    if "metrics" in body:
        mt = body["metrics"]
        lines += [
            "Metrics",
            f"impact norm            {mt['impact_norm']:.4f}",
            f"qualified impact norm  {mt['qualified_impact_norm']:.4f}",
            "top cohort             " + "; ".join(mt["cohort_labels"]),
            f"{'feature impact':12}" + "".join(f"{c:>10}" for c in cols),
            f"{'':14}" + "".join(f"{v:10.5f}" for v in mt["feature_impact"]),
            "",
        ]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evoweights",
        description="Feature weights for multi-objective datasets via a replicator-type dynamic.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "weights": "column means, weight trajectory and closed-form equilibrium",
        "rank": "rank rows under uniform and learned weights with Pareto checks",
        "metrics": "impact norm, qualified impact norm and feature impact",
        "report": "everything above in one document",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("--input", required=True, help="delimited text file, first row headers")
        p.add_argument("--spec", help="column spec file (default: identity for every column)")
        p.add_argument("--mode", choices=MODES, default="both")
        p.add_argument("--iters", type=int, default=10_000, help="maximum number of updates")
        p.add_argument("--tol", type=float, default=1e-12, help="sup-norm stopping tolerance")
        p.add_argument("--init", default="uniform", help="'uniform' or comma-separated weights")
        direction = p.add_mutually_exclusive_group()
        direction.add_argument("--max", dest="maximize", action="store_true", default=True)
        direction.add_argument("--min", dest="maximize", action="store_false")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--delimiter", default=",")
        p.add_argument("--row-labels", action="store_true", help="first column holds row labels")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=args.input,
        spec=args.spec,
        mode=args.mode,
        max_iterations=args.iters,
        tolerance=args.tol,
        init=args.init,
        maximize=args.maximize,
        format=args.format,
        out=args.out,
        delimiter=args.delimiter,
        row_labels=args.row_labels,
    )


def run(config: RunConfig) -> str:
    """Execute one command and return the rendered report text."""
    try:
        IterationConfig(config.max_iterations, config.tolerance)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    body = Pipeline(config).body()
    if config.format == "json":
        return structured_document(body)
    return render_table(body)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    try:
        text = run(config)
    except ParseError as exc:
        print(f"evoweights: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SpecError, NormalizationError, ConfigError, InvalidDataError) as exc:
        print(f"evoweights: spec error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except PositivityViolation as exc:
        print(f"evoweights: dynamics error: {exc}", file=sys.stderr)
        return EXIT_DYNAMICS
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
