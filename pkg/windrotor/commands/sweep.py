"""
Sweep Command
Constrained grid search over diameter, rpm and chord
"""

import argparse

from ..errors import ConfigurationError
from ..services.config_loader import design_source, load_run_config
from ..services.design_search import best_feasible, sweep
from ..services.reporting import format_candidate, write_candidates_csv


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "sweep",
        help="Rank every grid point of a design space",
        description="Evaluates the full grid and writes ranked candidates, feasible ones first.",
    )
    parser.add_argument("--config", required=True, help="run file with flow, space and design sections")
    parser.add_argument("--out", help="candidates CSV path (default: output.csv from the config)")
    parser.add_argument("--jobs", type=int, help="concurrent grid evaluations (overrides run.n_jobs)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = load_run_config(args.config)
    if config.space is None:
        raise ConfigurationError("space: sweep needs a space section (the config has a single rotor)")
    out = args.out or config.output.csv
    if out is None:
        raise ConfigurationError("output.csv: sweep needs --out or output.csv")
    if args.jobs is not None and args.jobs < 1:
        raise ConfigurationError(f"--jobs must be at least 1, got {args.jobs}")

    flow = config.flow.to_flow()
    candidates = sweep(
        config.space.to_design_space(),
        config.to_constraints(),
        flow,
        design_source(config, flow),
        n_jobs=args.jobs or config.run.n_jobs,
    )
    write_candidates_csv(candidates, out)
    print(format_candidate(best_feasible(candidates)))
    return 0
