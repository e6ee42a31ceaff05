"""``swapkit`` command line: figure sweeps and the oracle verification suite."""

from __future__ import annotations

import argparse
import sys

from .experiments import (
    EXIT_ASSERTION,
    EXIT_CONFIG,
    EXIT_OK,
    EXPERIMENTS,
    ConfigError,
    GridAxis,
    SweepConfig,
    run_oracle_suite,
    run_sweep,
)


def _parse_grid(items: list[str]) -> dict[str, GridAxis]:
    grid = {}
    for item in items:
        name, sep, rng = item.partition("=")
        if not sep:
            raise ConfigError(f"grid must look like name=start:stop:step, got {item!r}")
        grid[name.strip()] = GridAxis.parse(rng)
    return grid


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swapkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate an experiment on a parameter grid and write CSV")
    sweep.add_argument("--experiment", required=True, help=f"one of: {', '.join(EXPERIMENTS)}")
    sweep.add_argument("--grid", action="append", default=[], metavar="NAME=START:STOP:STEP")
    sweep.add_argument("--out", required=True, help="CSV output path")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--samples", type=int, default=64, help="random qubits per cell (teleport only)")
    sweep.add_argument("--workers", type=int, default=1)

    verify = sub.add_parser("verify", help="run the analytic-versus-oracle cross-checks")
    verify.add_argument("--trials", type=int, default=1000)
    verify.add_argument("--seed", type=int, default=1)
    verify.add_argument("--out", help="also write the JSON report here")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            cfg = SweepConfig(args.experiment, _parse_grid(args.grid), args.out, args.seed, args.samples, args.workers)
            summary = run_sweep(cfg)
            print(f"{summary.experiment}: {summary.rows} rows -> {summary.output_path}")
            for c in summary.checks:
                print(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}: max deviation {c.max_deviation:.3g} (tol {c.tolerance:g})")
            return EXIT_OK if summary.passed else EXIT_ASSERTION

        report = run_oracle_suite(args.seed, args.trials)
        text = report.to_json()
        print(text)
        if args.out:
            try:
                with open(args.out, "w") as fh:
                    fh.write(text + "\n")
            except OSError as exc:
                raise ConfigError(f"cannot write {args.out}: {exc}") from exc
        return EXIT_OK if report.passed else EXIT_ASSERTION
    except ConfigError as exc:
        print(f"swapkit: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
