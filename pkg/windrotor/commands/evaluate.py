"""
Evaluate Command
Spanwise solution and rotor power for one geometry
"""

import argparse
import logging

from ..errors import ConfigurationError
from ..services.config_loader import design_point_for_chord, load_run_config
from ..services.reporting import format_evaluate_summary, write_series, write_station_csv
from ..services.rotor_model import evaluate_rotor, reynolds_number, tip_speed, tip_speed_ratio

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "evaluate",
        help="Evaluate one rotor geometry station by station",
        description="Writes the hub/station/tip table and prints rotor and electric power.",
    )
    parser.add_argument("--config", required=True, help="run file with flow, rotor and design sections")
    parser.add_argument("--out", help="station CSV path (default: output.csv from the config, else stdout)")
    parser.add_argument("--emit-series", dest="series_dir", help="directory for the spanwise series CSVs")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = load_run_config(args.config)
    if config.rotor is None:
        raise ConfigurationError("rotor: evaluate needs a rotor section (the config has a design space)")

    flow = config.flow.to_flow()
    geometry = config.rotor.to_geometry()
    design = design_point_for_chord(config, flow, geometry.chord)

    solution = evaluate_rotor(
        flow,
        geometry,
        design,
        station_count=config.run.station_count,
        drivetrain_efficiency=config.run.drivetrain_efficiency,
    )

    out = args.out or config.output.csv
    text = write_station_csv(solution, out)
    if out is None:
        print(text, end="")

    series_dir = args.series_dir or config.output.series_dir
    if series_dir:
        for path in write_series(solution, series_dir):
            logger.info(f"Series written: {path}")

    print(format_evaluate_summary(
        solution,
        reynolds=reynolds_number(flow, geometry.chord),
        tip_speed=tip_speed(geometry),
        tip_speed_ratio=tip_speed_ratio(flow, geometry),
        design=design,
    ))
    return 0
