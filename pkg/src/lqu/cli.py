"""Command-line front end.

Subcommands:
  compute <file>   per-bipartition report for a density-matrix JSON file
  sweep            parameter sweep over a named family, written as CSV
  random           seeded random-state demonstration (per-bipartition values
                   generally differ)

Exit codes: 0 success, 2 bad input/config, 3 numerical contract violation.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from dataclasses import dataclass

import numpy as np

from .analytic import closed_form_for
from .core import LquReport, NumericalContractViolation, lqu_all
from .states import (
    PURE_FAMILIES,
    DensityMatrixFormatError,
    GammaOutOfRange,
    NoiseOutOfRange,
    StateSpec,
    UnknownFamily,
    build_state,
    load_density_matrix,
    mix_white_noise,
    random_pure,
    save_density_matrix,
    validate,
)

SWEEP_FAMILIES = tuple(PURE_FAMILIES) + ("kay", "random")


def _fmt(x: float) -> str:
    """12 significant digits, shortest form."""
    return format(float(x), ".12g")


@dataclass(frozen=True)
class SweepConfig:
    spec: StateSpec
    param_from: float
    param_to: float
    steps: int
    output_path: str

    def check(self) -> None:
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if self.param_from > self.param_to:
            raise ValueError(
                f"--from ({self.param_from}) must not exceed --to ({self.param_to})"
            )
        lo, hi = (2.0, np.inf) if self.spec.family == "kay" else (0.0, 1.0)
        for name, p in (("--from", self.param_from), ("--to", self.param_to)):
            if not lo <= p <= hi:
                raise ValueError(
                    f"{name} = {p} outside the {self.spec.family!r} domain "
                    f"[{lo}, {hi}]"
                )


def _report_lines(report: LquReport) -> list[str]:
    lines = [f"q{i} {_fmt(v)}" for i, v in enumerate(report.per_bipartition)]
    lines.append(f"mean {_fmt(report.mean)}")
    return lines


def cmd_compute(args) -> int:
    rho = load_density_matrix(args.file)
    violations = validate(rho)
    if violations:
        detail = ", ".join(str(v) for v in violations)
        print(f"error: {args.file} is not a valid density matrix: {detail}",
              file=sys.stderr)
        return 2
    for line in _report_lines(lqu_all(rho)):
        print(line)
    return 0


def sweep_rows(config: SweepConfig) -> tuple[list[str], list[list[str]]]:
    """Evaluate a sweep; returns (header, rows) ready for CSV writing."""
    config.check()
    spec = config.spec
    # np.linspace pins both endpoints exactly; interior points are uniform.
    params = np.linspace(config.param_from, config.param_to, config.steps)
    formula = closed_form_for(spec.family)
    rows: list[list[str]] = []
    n_qubits = None
    for p in params:
        p = float(p)
        rho = build_state(StateSpec(spec.family, p, spec.n_qubits, spec.seed))
        n_qubits = rho.n_qubits
        report = lqu_all(rho)
        analytic = _fmt(formula(p)) if formula is not None else ""
        rows.append(
            [_fmt(p)]
            + [_fmt(v) for v in report.per_bipartition]
            + [_fmt(report.mean), analytic]
        )
    header = ["param"] + [f"q{i}" for i in range(n_qubits)] + ["mean", "analytic"]
    return header, rows


def cmd_sweep(args) -> int:
    if args.family == "random" and (args.qubits is None or args.seed is None):
        print("error: --family random requires --qubits and --seed", file=sys.stderr)
        return 2
    spec = StateSpec(args.family, args.param_from, args.qubits, args.seed)
    config = SweepConfig(spec, args.param_from, args.param_to, args.steps, args.out)
    header, rows = sweep_rows(config)
    try:
        with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except BaseException:
        # never leave a partial file behind
        if os.path.exists(config.output_path):
            os.remove(config.output_path)
        raise
    return 0


def cmd_random(args) -> int:
    if not 0.0 <= args.pure_fraction <= 1.0:
        print(f"error: --pure-fraction {args.pure_fraction} outside [0, 1]",
              file=sys.stderr)
        return 2
    psi = random_pure(args.qubits, args.seed)
    rho = mix_white_noise(psi, 1.0 - args.pure_fraction)
    if args.dump:
        save_density_matrix(rho, args.dump)
    for line in _report_lines(lqu_all(rho)):
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lqu",
        description="Local quantum uncertainty for N-qubit states: "
        "per-bipartition values and their mean.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="report for a density-matrix JSON file")
    p_compute.add_argument("file", help="path to density-matrix JSON")
    p_compute.set_defaults(func=cmd_compute)

    p_sweep = sub.add_parser("sweep", help="parameter sweep written as CSV")
    p_sweep.add_argument("--family", required=True, choices=SWEEP_FAMILIES)
    p_sweep.add_argument("--from", dest="param_from", type=float, required=True,
                         metavar="A", help="first parameter value")
    p_sweep.add_argument("--to", dest="param_to", type=float, required=True,
                         metavar="B", help="last parameter value")
    p_sweep.add_argument("--steps", type=int, required=True,
                         help="number of grid points (>= 2)")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.add_argument("--qubits", type=int, help="qubit count (random family)")
    p_sweep.add_argument("--seed", type=int, help="RNG seed (random family)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_random = sub.add_parser("random", help="seeded random-state demonstration")
    p_random.add_argument("--qubits", type=int, required=True)
    p_random.add_argument("--seed", type=int, required=True)
    p_random.add_argument("--pure-fraction", type=float, required=True,
                          help="random-state weight; white noise gets the rest")
    p_random.add_argument("--dump", help="also write the density matrix as JSON")
    p_random.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NumericalContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (
        DensityMatrixFormatError,
        UnknownFamily,
        NoiseOutOfRange,
        GammaOutOfRange,
        FileNotFoundError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
