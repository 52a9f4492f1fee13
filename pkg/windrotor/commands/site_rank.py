"""
Site Rank Command
Order candidate sites by wind power density
"""

import argparse

from ..services.reporting import write_sites_csv
from ..services.site_ranking import load_sites, rank_sites


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "site-rank",
        help="Rank sites by 1/2 rho V^3",
        description="Reads a site CSV and writes the ranking, highest power density first.",
    )
    parser.add_argument("--file", required=True, help="site CSV (name, mean_wind_speed, ...)")
    parser.add_argument("--out", help="ranked CSV path (default: stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    scores = rank_sites(load_sites(args.file))
    text = write_sites_csv(scores, args.out)
    if args.out is None:
        print(text, end="")
    return 0
