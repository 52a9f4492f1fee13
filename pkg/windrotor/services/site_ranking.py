"""
Site Ranking Service
Ranks candidate sites by wind power density, 1/2 rho V^3 (W/m^2)
"""

import logging
import re
from pathlib import Path
from typing import List, Union

import pandas as pd
from pydantic import ValidationError

from ..errors import ConfigurationError, InputFormatError
from ..models.site import SiteRecord, SiteScore

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ["name", "mean_wind_speed"]
OPTIONAL_COLUMNS = ["air_density", "elevation", "seasonal_min_speed", "seasonal_max_speed"]


def power_density(wind_speed: float, air_density: float) -> float:
    """Kinetic power of the wind per unit swept area"""
    return 0.5 * air_density * wind_speed ** 3


def score_site(site: SiteRecord) -> SiteScore:
    swing = None
    swing_fraction = None
    if site.seasonal_min_speed is not None and site.seasonal_max_speed is not None:
        swing = site.seasonal_max_speed - site.seasonal_min_speed
        if site.mean_wind_speed > 0:
            swing_fraction = swing / site.mean_wind_speed
    return SiteScore(
        site=site,
        power_density=power_density(site.mean_wind_speed, site.air_density),
        seasonal_swing=swing,
        seasonal_swing_fraction=swing_fraction,
    )


def rank_sites(sites: List[SiteRecord]) -> List[SiteScore]:
    """Highest power density first; ties go to the denser air, then by name"""
    scores = [score_site(site) for site in sites]
    return sorted(scores, key=lambda s: (-s.power_density, -s.site.air_density, s.site.name))


def load_sites(path: Union[str, Path]) -> List[SiteRecord]:
    """Read a site CSV (name, mean_wind_speed and optional extra columns)"""
    source = str(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skip_blank_lines=False, skipinitialspace=True)
    except FileNotFoundError:
        raise ConfigurationError(f"site file not found: {source}")
    except pd.errors.EmptyDataError:
        raise ConfigurationError(f"site file is empty: {source}")
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        raise InputFormatError(str(e), line=int(match.group(1)) if match else None, path=source)

    missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
    if missing:
        raise InputFormatError(f"missing columns: {', '.join(missing)}", line=1, path=source)

    sites = []
    for index, row in frame.iterrows():
        line = index + 2
        fields = {
            c: str(row[c]).strip()
            for c in REQUIRED_COLUMNS + OPTIONAL_COLUMNS
            if c in frame.columns and str(row[c]).strip()
        }
        if not fields:
            continue
        try:
            sites.append(SiteRecord(**fields))
        except ValidationError as e:
            error = e.errors()[0]
            field = ".".join(str(part) for part in error["loc"]) or "row"
            raise InputFormatError(f"{field}: {error['msg']}", line=line, path=source)

    if not sites:
        raise ConfigurationError(f"site file has no rows: {source}")
    logger.info(f"Loaded {len(sites)} sites from {source}")
    return sites
