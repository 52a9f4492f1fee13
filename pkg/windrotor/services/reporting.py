"""
Reporting Service

CSV tables and console summaries for rotor solutions, sweeps, polars and
sites. Files carry 12 significant digits; console summaries carry 4.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np
import pandas as pd

from ..models.airfoil import AerodynamicDesignPoint, PolarCurve
from ..models.design import DesignCandidate
from ..models.rotor import RotorSolution
from ..models.site import SiteScore

logger = logging.getLogger(__name__)

FILE_FLOAT_FORMAT = "%.12g"

STATION_COLUMNS = ["station", "radius_m", "blade_angle_deg", "power_per_span_kW_per_m"]
CANDIDATE_COLUMNS = [
    "rank", "diameter_m", "rpm", "chord_m", "rotor_power_MW",
    "electric_power_MW", "tip_speed_m_per_s", "feasible",
]
SITE_COLUMNS = [
    "rank", "name", "mean_wind_speed_m_per_s", "air_density_kg_per_m3", "elevation_m",
    "power_density_W_per_m2", "seasonal_swing_m_per_s", "seasonal_swing_fraction",
]


def _write(frame: pd.DataFrame, path: Union[str, Path, None]) -> str:
    text = frame.to_csv(index=False, float_format=FILE_FLOAT_FORMAT, na_rep="", lineterminator="\n")
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.info(f"Wrote {len(frame)} rows to {path}")
    return text


# ============================================================================
# ROTOR SOLUTION
# ============================================================================

def station_frame(solution: RotorSolution) -> pd.DataFrame:
    """Hub, stations and tip; hub and tip have no blade angle"""
    rows = [{"station": "hub", "radius_m": solution.hub_radius, "blade_angle_deg": np.nan,
             "power_per_span_kW_per_m": solution.hub_power_per_span / 1000}]
    for number, station in enumerate(solution.stations, start=1):
        rows.append({
            "station": str(number),
            "radius_m": station.radius,
            "blade_angle_deg": station.blade_angle,
            "power_per_span_kW_per_m": station.power_per_span / 1000,
        })
    rows.append({"station": "tip", "radius_m": solution.tip_radius, "blade_angle_deg": np.nan,
                 "power_per_span_kW_per_m": solution.tip_power_per_span / 1000})
    return pd.DataFrame(rows, columns=STATION_COLUMNS)


def write_station_csv(solution: RotorSolution, path: Union[str, Path, None] = None) -> str:
    return _write(station_frame(solution), path)


def series_frames(solution: RotorSolution) -> Dict[str, pd.DataFrame]:
    """Spanwise distributions of beta, gamma, P_r and cumulative power share"""
    radii = solution.radii
    profile_radii, profile_powers = solution.spanwise_profile()
    return {
        "relative_angle": pd.DataFrame({
            "radius_m": radii,
            "relative_angle_deg": [s.relative_angle for s in solution.stations],
        }),
        "blade_angle": pd.DataFrame({
            "radius_m": radii,
            "blade_angle_deg": [s.blade_angle for s in solution.stations],
        }),
        "power_per_span": pd.DataFrame({
            "radius_m": profile_radii,
            "power_per_span_kW_per_m": [p / 1000 for p in profile_powers],
        }),
        "power_share": pd.DataFrame({
            "radius_m": profile_radii,
            "cumulative_power_fraction": solution.power_share(),
        }),
    }


def write_series(solution: RotorSolution, directory: Union[str, Path]) -> List[Path]:
    directory = Path(directory)
    paths = []
    for name, frame in series_frames(solution).items():
        path = directory / f"{name}.csv"
        _write(frame, path)
        paths.append(path)
    return paths


def format_evaluate_summary(
    solution: RotorSolution,
    reynolds: float,
    tip_speed: float,
    tip_speed_ratio: float,
    design: AerodynamicDesignPoint,
) -> str:
    lines = [
        f"rotor power {solution.rotor_power / 1e6:.4g} MW",
        f"electric power {solution.electric_power / 1e6:.4g} MW "
        f"(drivetrain efficiency {solution.drivetrain_efficiency:.4g})",
        f"Reynolds number {reynolds:.4g}",
        f"tip speed {tip_speed:.4g} m/s (tip-speed ratio {tip_speed_ratio:.4g})",
        f"design point CL {design.lift_coefficient:.4g}, CD {design.drag_coefficient:.4g}, "
        f"incidence {design.incidence:.4g} deg ({design.source.value})",
    ]
    return "\n".join(lines)


# ============================================================================
# SWEEP
# ============================================================================

def candidate_frame(candidates: List[DesignCandidate]) -> pd.DataFrame:
    rows = [
        {
            "rank": rank,
            "diameter_m": c.diameter,
            "rpm": c.rpm,
            "chord_m": c.chord,
            "rotor_power_MW": c.solution.rotor_power / 1e6 if c.solution is not None else np.nan,
            "electric_power_MW": c.solution.electric_power / 1e6 if c.solution is not None else np.nan,
            "tip_speed_m_per_s": c.tip_speed,
            "feasible": c.feasible,
        }
        for rank, c in enumerate(candidates, start=1)
    ]
    return pd.DataFrame(rows, columns=CANDIDATE_COLUMNS)


def write_candidates_csv(candidates: List[DesignCandidate], path: Union[str, Path, None] = None) -> str:
    return _write(candidate_frame(candidates), path)


def format_candidate(candidate: Optional[DesignCandidate]) -> str:
    if candidate is None:
        return "no feasible candidate"
    return (
        f"best feasible: diameter {candidate.diameter:.4g} m, {candidate.rpm:.4g} rpm, "
        f"chord {candidate.chord:.4g} m -> rotor power {candidate.solution.rotor_power / 1e6:.4g} MW, "
        f"electric power {candidate.solution.electric_power / 1e6:.4g} MW, "
        f"tip speed {candidate.tip_speed:.4g} m/s"
    )


# ============================================================================
# POLAR
# ============================================================================

def format_polar_report(
    curve: PolarCurve,
    stall_cl: float,
    stall_incidence: float,
    design: AerodynamicDesignPoint,
) -> str:
    lines = [
        f"selected curve Re {curve.reynolds:.4g}",
        f"stall CL {stall_cl:.4g} at {stall_incidence:.4g} deg",
        f"design CL {design.lift_coefficient:.4g}",
        f"design incidence {design.incidence:.4g} deg",
        f"design CD {design.drag_coefficient:.4g}",
        f"lift-to-drag ratio {design.lift_to_drag_ratio:.4g}",
    ]
    return "\n".join(lines)


# ============================================================================
# SITES
# ============================================================================

def site_frame(scores: List[SiteScore]) -> pd.DataFrame:
    rows = [
        {
            "rank": rank,
            "name": s.site.name,
            "mean_wind_speed_m_per_s": s.site.mean_wind_speed,
            "air_density_kg_per_m3": s.site.air_density,
            "elevation_m": s.site.elevation,
            "power_density_W_per_m2": s.power_density,
            "seasonal_swing_m_per_s": s.seasonal_swing,
            "seasonal_swing_fraction": s.seasonal_swing_fraction,
        }
        for rank, s in enumerate(scores, start=1)
    ]
    return pd.DataFrame(rows, columns=SITE_COLUMNS)


def write_sites_csv(scores: List[SiteScore], path: Union[str, Path, None] = None) -> str:
    return _write(site_frame(scores), path)
