"""
Design Search Service

Exhaustive, deterministic grid sweep over rotor diameter, rotational speed
and chord. Grid points may be evaluated concurrently; results are always
assembled in canonical grid order (diameter-major, then rpm, then chord)
before ranking.
"""

import logging
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple, Union

from joblib import Parallel, delayed

from ..errors import ConfigurationError, RotorDesignError
from ..models.airfoil import AerodynamicDesignPoint
from ..models.design import AxisRange, DesignCandidate, DesignConstraints, DesignSpace
from ..models.rotor import FlowConditions, RotorGeometry
from .rotor_model import evaluate_rotor, tip_speed

logger = logging.getLogger(__name__)

DesignSource = Union[AerodynamicDesignPoint, Callable[[float], AerodynamicDesignPoint]]

GridPoint = Tuple[float, float, float]  # (diameter m, rpm, chord m)


def grid_values(axis: AxisRange) -> List[float]:
    """Values from minimum in steps, including maximum when a step lands on it"""
    count = int((axis.maximum - axis.minimum) / axis.step + 1e-9) + 1
    return [round(axis.minimum + k * axis.step, 10) for k in range(count)]


def grid_points(space: DesignSpace) -> List[GridPoint]:
    return list(
        product(
            grid_values(space.diameter_range),
            grid_values(space.rpm_range),
            grid_values(space.chord_range),
        )
    )


def is_feasible(electric_power: float, candidate_tip_speed: float, constraints: DesignConstraints) -> bool:
    if electric_power < constraints.target_electric_power:
        return False
    if constraints.max_tip_speed is not None and candidate_tip_speed > constraints.max_tip_speed:
        return False
    return True


def evaluate_candidate(
    point: GridPoint,
    space: DesignSpace,
    constraints: DesignConstraints,
    flow: FlowConditions,
    design: AerodynamicDesignPoint,
) -> DesignCandidate:
    diameter, rpm, chord = point
    geometry = RotorGeometry.from_diameter(
        diameter=diameter,
        chord=chord,
        rotational_speed=rpm,
        hub_tip_ratio=space.hub_tip_ratio,
        blade_count=space.blade_count,
    )
    speed = tip_speed(geometry)
    try:
        solution = evaluate_rotor(
            flow,
            geometry,
            design,
            station_count=constraints.station_count,
            drivetrain_efficiency=constraints.drivetrain_efficiency,
        )
    except ConfigurationError:
        raise
    except RotorDesignError as e:
        logger.warning(f"Grid point D={diameter:g} m, {rpm:g} rpm, c={chord:g} m is infeasible: {e}")
        return DesignCandidate(geometry=geometry, feasible=False, tip_speed=speed, failure=str(e))

    return DesignCandidate(
        geometry=geometry,
        solution=solution,
        feasible=is_feasible(solution.electric_power, speed, constraints),
        tip_speed=speed,
    )


def rank(candidates: List[DesignCandidate]) -> List[DesignCandidate]:
    """
    Feasible first, then smaller diameter, lower tip speed, lower rpm and
    smaller chord. The sort is stable, so remaining ties keep input order.
    """
    return sorted(
        candidates,
        key=lambda c: (not c.feasible, c.diameter, c.tip_speed, c.rpm, c.chord),
    )


def best_feasible(candidates: List[DesignCandidate]) -> Optional[DesignCandidate]:
    return next((c for c in candidates if c.feasible), None)


def sweep(
    space: DesignSpace,
    constraints: DesignConstraints,
    flow: FlowConditions,
    design: DesignSource,
    n_jobs: int = 1,
) -> List[DesignCandidate]:
    """
    Evaluate every grid point and return all candidates ranked

    `design` is either a fixed design point or a callable mapping chord to a
    design point (polar-derived points depend on the chord through Re).
    """
    points = grid_points(space)
    if not points:
        raise ConfigurationError("design space grid is empty")

    # Resolved up front so worker scheduling never touches the polar lookup
    designs: Dict[float, AerodynamicDesignPoint] = {}
    for chord in grid_values(space.chord_range):
        designs[chord] = design if isinstance(design, AerodynamicDesignPoint) else design(chord)

    logger.info(f"Sweeping {len(points)} grid points with n_jobs={n_jobs}")
    candidates = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(evaluate_candidate)(point, space, constraints, flow, designs[point[2]])
        for point in points
    )

    ranked = rank(list(candidates))
    feasible_count = sum(1 for c in ranked if c.feasible)
    logger.info(f"Sweep finished: {feasible_count} of {len(ranked)} candidates feasible")
    return ranked
