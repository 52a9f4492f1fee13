"""
Polar Command
Stall-margined design point from a polar file
"""

import argparse

from ..services.airfoil_polars import (
    DEFAULT_STALL_MARGIN,
    design_point_from_polar,
    select_curve,
    stall_incidence,
    stall_lift_coefficient,
)
from ..services.polar_library import get_polar_library
from ..services.reporting import format_polar_report


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "polar",
        help="Derive the design point from an airfoil polar",
        description="Selects the curve for the operating Reynolds number and applies the stall margin.",
    )
    parser.add_argument("--file", required=True, help="polar CSV (kind, reynolds, incidence_deg, cl, cd)")
    parser.add_argument("--re", type=float, required=True, dest="reynolds", help="operating Reynolds number")
    parser.add_argument("--margin", type=float, default=DEFAULT_STALL_MARGIN, help="fraction of stall CL (default 0.85)")
    parser.add_argument("--drag-factor", type=float, default=1.0, help="drag safety factor (default 1.0)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    polars = get_polar_library().load(args.file)
    curve = select_curve(polars, args.reynolds)
    design = design_point_from_polar(curve, args.margin, args.drag_factor)
    print(format_polar_report(curve, stall_lift_coefficient(curve), stall_incidence(curve), design))
    return 0
