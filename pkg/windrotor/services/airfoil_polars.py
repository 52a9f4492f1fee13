"""
Airfoil Polar Service

Ingests tabulated lift/drag curves per Reynolds regime, interpolates them,
detects stall and derives the stall-margined design point.

Angles are in degrees throughout.
"""

import logging
import math
import re
from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import ValidationError

from ..errors import ConfigurationError, InfeasibleMarginError, InputFormatError, OutOfRangeError
from ..models.airfoil import AerodynamicDesignPoint, DesignPointSource, PolarCurve, PolarSet

logger = logging.getLogger(__name__)

POLAR_COLUMNS = ["kind", "reynolds", "incidence_deg", "cl", "cd"]
DEFAULT_STALL_MARGIN = 0.85


# ============================================================================
# CURVE QUERIES
# ============================================================================

def select_curve(polars: PolarSet, operating_reynolds: float) -> PolarCurve:
    """
    Pick the curve measured at the largest Reynolds number not above the
    operating one; below every curve, fall back to the lowest-Reynolds curve.
    """
    if not polars.curves:
        raise ConfigurationError(f"polar set '{polars.airfoil_name}' has no curves")
    if operating_reynolds <= 0:
        raise ConfigurationError(f"operating Reynolds number must be positive, got {operating_reynolds}")

    ordered = sorted(polars.curves, key=lambda c: c.reynolds)
    selected = ordered[0]
    for curve in ordered:
        if curve.reynolds <= operating_reynolds:
            selected = curve
    logger.debug(f"Selected Re={selected.reynolds:g} curve for operating Re={operating_reynolds:g}")
    return selected


def stall_lift_coefficient(curve: PolarCurve) -> float:
    """Maximum lift coefficient over the curve's samples"""
    return max(curve.lift_coefficients)


def stall_incidence(curve: PolarCurve) -> float:
    """Incidence of the first maximum-lift sample"""
    lifts = curve.lift_coefficients
    return curve.incidences[lifts.index(max(lifts))]


def drag_at_lift(curve: PolarCurve, lift_coefficient: float, drag_safety_factor: float = 1.0) -> float:
    """
    Drag coefficient interpolated at a lift coefficient, scaled by a safety
    factor (>= 1) that stands in for a higher low-Reynolds drag reading.
    """
    if drag_safety_factor < 1:
        raise ConfigurationError(f"drag_safety_factor must be >= 1, got {drag_safety_factor}")
    lifts = [cl for cl, _ in curve.drag_samples]
    drags = [cd for _, cd in curve.drag_samples]
    if not lifts[0] <= lift_coefficient <= lifts[-1]:
        raise OutOfRangeError(
            f"lift coefficient {lift_coefficient} outside drag samples [{lifts[0]}, {lifts[-1]}] "
            f"at Re={curve.reynolds:g}"
        )
    return float(np.interp(lift_coefficient, lifts, drags)) * drag_safety_factor


def _rising_branch_incidence(curve: PolarCurve, target: float) -> Optional[float]:
    incidences = curve.incidences
    lifts = curve.lift_coefficients
    stall_index = lifts.index(max(lifts))

    for k in range(stall_index + 1):
        if lifts[k] == target:
            return incidences[k]
        if k > 0 and lifts[k - 1] < target < lifts[k]:
            fraction = (target - lifts[k - 1]) / (lifts[k] - lifts[k - 1])
            return incidences[k - 1] + fraction * (incidences[k] - incidences[k - 1])
    return None


# ============================================================================
# DESIGN POINTS
# ============================================================================

def design_point_from_polar(
    curve: PolarCurve,
    stall_margin: float = DEFAULT_STALL_MARGIN,
    drag_safety_factor: float = 1.0,
) -> AerodynamicDesignPoint:
    """
    Design point at a fraction of the stall lift coefficient

    The incidence is where the lift curve first reaches the design lift
    coefficient scanning up from the lowest incidence; samples past stall are
    never used.
    """
    if stall_margin <= 0:
        raise ConfigurationError(f"stall_margin must be positive, got {stall_margin}")

    stall_cl = stall_lift_coefficient(curve)
    target = stall_margin * stall_cl
    if stall_margin > 1:
        raise InfeasibleMarginError(
            f"stall margin {stall_margin} asks for CL {target:.4g}, above stall CL {stall_cl:.4g}"
        )

    incidence = _rising_branch_incidence(curve, target)
    if incidence is None:
        raise InfeasibleMarginError(
            f"CL {target:.4g} is not reached on the rising branch of the Re={curve.reynolds:g} curve"
        )

    drag = drag_at_lift(curve, target, drag_safety_factor)
    logger.debug(f"Design point CL={target:.6g} i={incidence:.6g} CD={drag:.6g} (stall CL {stall_cl:.6g})")
    return AerodynamicDesignPoint(
        lift_coefficient=target,
        drag_coefficient=drag,
        incidence=incidence,
        source=DesignPointSource.DERIVED_FROM_POLAR,
    )


def fixed_design_point(lift_coefficient: float, drag_coefficient: float, incidence: float) -> AerodynamicDesignPoint:
    """Design point given directly"""
    return AerodynamicDesignPoint(
        lift_coefficient=lift_coefficient,
        drag_coefficient=drag_coefficient,
        incidence=incidence,
        source=DesignPointSource.FIXED,
    )


# ============================================================================
# POLAR FILES
# ============================================================================

def _parse_float(raw: str, column: str, line: int, path: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise InputFormatError(f"column '{column}' is not a number: {raw!r}", line=line, path=path)
    if not math.isfinite(value):
        raise InputFormatError(f"column '{column}' must be finite, got {raw!r}", line=line, path=path)
    return value


def load_polar_set(path: Union[str, Path], airfoil_name: Optional[str] = None) -> PolarSet:
    """
    Read a polar CSV

    Columns: kind, reynolds, incidence_deg, cl, cd. `lift` rows fill
    incidence_deg and cl, `drag` rows fill cl and cd. Any number of Reynolds
    values per file.
    """
    path = Path(path)
    source = str(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skip_blank_lines=False, skipinitialspace=True)
    except FileNotFoundError:
        raise ConfigurationError(f"polar file not found: {source}")
    except pd.errors.EmptyDataError:
        raise ConfigurationError(f"polar file is empty: {source}")
    except pd.errors.ParserError as e:
        match = re.search(r"line (\d+)", str(e))
        raise InputFormatError(str(e), line=int(match.group(1)) if match else None, path=source)

    missing = [c for c in POLAR_COLUMNS if c not in frame.columns]
    if missing:
        raise InputFormatError(f"missing columns: {', '.join(missing)}", line=1, path=source)

    lift: Dict[float, List[Tuple[float, float]]] = defaultdict(list)
    drag: Dict[float, List[Tuple[float, float]]] = defaultdict(list)

    for index, row in frame.iterrows():
        line = index + 2  # header is line 1
        values = {c: str(row[c]).strip() for c in POLAR_COLUMNS}
        if not any(values.values()):
            continue

        kind = values["kind"].lower()
        reynolds = _parse_float(values["reynolds"], "reynolds", line, source)
        if kind == "lift":
            sample = (
                _parse_float(values["incidence_deg"], "incidence_deg", line, source),
                _parse_float(values["cl"], "cl", line, source),
            )
            lift[reynolds].append(sample)
        elif kind == "drag":
            sample = (
                _parse_float(values["cl"], "cl", line, source),
                _parse_float(values["cd"], "cd", line, source),
            )
            drag[reynolds].append(sample)
        else:
            raise InputFormatError(f"kind must be 'lift' or 'drag', got {values['kind']!r}", line=line, path=source)

    if not lift and not drag:
        raise ConfigurationError(f"polar file has no curves: {source}")

    curves = []
    for reynolds in sorted(set(lift) | set(drag)):
        if not lift[reynolds] or not drag[reynolds]:
            raise InputFormatError(f"Re={reynolds:g} needs both lift and drag rows", path=source)
        try:
            curves.append(
                PolarCurve(
                    reynolds=reynolds,
                    lift_samples=tuple(sorted(lift[reynolds])),
                    drag_samples=tuple(sorted(drag[reynolds])),
                )
            )
        except ValidationError as e:
            raise InputFormatError(f"invalid curve at Re={reynolds:g}: {e.errors()[0]['msg']}", path=source)

    polars = PolarSet.from_curves(airfoil_name or path.stem, curves)
    logger.info(f"Loaded polar '{polars.airfoil_name}' with {len(curves)} curves from {source}")
    return polars
