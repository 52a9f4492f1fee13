"""
Rotor Model Service

Velocity-triangle blade-element model: each radial station is an independent
2-D airfoil section with relative velocity W = sqrt(U^2 + V^2). No induction
factors, tip loss or wake effects are applied.

Power per unit span is integrated piecewise-linearly from the hub (anchored
at zero) through the stations to the tip (extrapolated from the last two
stations), then multiplied by the blade count.
"""

import logging
import math
from typing import List, Sequence, Tuple

from scipy.integrate import trapezoid

from ..errors import ConfigurationError, OutOfRangeError, RotorDesignError
from ..models.airfoil import AerodynamicDesignPoint
from ..models.rotor import (
    DEFAULT_DRIVETRAIN_EFFICIENCY,
    FlowConditions,
    RadialStation,
    RotorGeometry,
    RotorSolution,
)

logger = logging.getLogger(__name__)

DEFAULT_STATION_COUNT = 16


def reynolds_number(flow: FlowConditions, chord: float) -> float:
    """Re = V c / nu"""
    return flow.wind_speed * chord / flow.kinematic_viscosity


def angular_velocity(rotational_speed: float) -> float:
    """rad/s from rpm"""
    if rotational_speed <= 0:
        raise ConfigurationError(f"rotational speed must be positive, got {rotational_speed} rpm")
    return 2 * math.pi * rotational_speed / 60


def tip_speed(geometry: RotorGeometry) -> float:
    """Blade tip speed in m/s"""
    return angular_velocity(geometry.rotational_speed) * geometry.tip_radius


def tip_speed_ratio(flow: FlowConditions, geometry: RotorGeometry) -> float:
    return tip_speed(geometry) / flow.wind_speed


def station_radii(geometry: RotorGeometry, station_count: int = DEFAULT_STATION_COUNT) -> List[float]:
    """
    Equally spaced stations r_n = n / (N + 1) * span + r_h, n = 1..N

    Neither the hub nor the tip is a station.
    """
    if station_count < 2:
        raise ConfigurationError(f"station_count must be at least 2, got {station_count}")
    span = geometry.span
    return [n / (station_count + 1) * span + geometry.hub_radius for n in range(1, station_count + 1)]


def velocity_triangle(tangential_velocity: float, wind_speed: float) -> Tuple[float, float]:
    """Relative angle beta (deg, from the axial direction) and relative speed W"""
    beta = math.degrees(math.atan(tangential_velocity / wind_speed))
    relative_velocity = math.sqrt(tangential_velocity ** 2 + wind_speed ** 2)
    return beta, relative_velocity


def solve_station(
    radius: float,
    flow: FlowConditions,
    geometry: RotorGeometry,
    design: AerodynamicDesignPoint,
) -> RadialStation:
    """Velocity triangle, forces and power per unit span at one radius"""
    if not geometry.hub_radius <= radius <= geometry.tip_radius:
        raise OutOfRangeError(
            f"radius {radius} m outside rotor [{geometry.hub_radius}, {geometry.tip_radius}]"
        )

    u = angular_velocity(geometry.rotational_speed) * radius
    beta, w = velocity_triangle(u, flow.wind_speed)

    dynamic_pressure_chord = 0.5 * flow.air_density * w ** 2 * geometry.chord
    lift = dynamic_pressure_chord * design.lift_coefficient
    drag = dynamic_pressure_chord * design.drag_coefficient

    beta_rad = math.radians(beta)
    tangential_force = lift * math.cos(beta_rad) - drag * math.sin(beta_rad)

    return RadialStation(
        radius=radius,
        tangential_velocity=u,
        relative_angle=beta,
        relative_velocity=w,
        lift_per_span=lift,
        drag_per_span=drag,
        tangential_force_per_span=tangential_force,
        power_per_span=tangential_force * u,
        blade_angle=beta + design.incidence,
    )


def extrapolate_tip_power(stations: Sequence[RadialStation], tip_radius: float) -> float:
    """Linear extrapolation of P_r to the tip through the last two stations"""
    if len(stations) < 2:
        raise ConfigurationError("tip extrapolation needs at least 2 stations")
    inner, outer = stations[-2], stations[-1]
    slope = (outer.power_per_span - inner.power_per_span) / (outer.radius - inner.radius)
    return outer.power_per_span + slope * (tip_radius - outer.radius)


def integrate_rotor_power(
    stations: Sequence[RadialStation],
    geometry: RotorGeometry,
    drivetrain_efficiency: float = DEFAULT_DRIVETRAIN_EFFICIENCY,
) -> RotorSolution:
    """Piecewise-linear spanwise integral of P_r times the blade count"""
    if len(stations) < 2:
        raise ConfigurationError(f"integration needs at least 2 stations, got {len(stations)}")

    hub_power = 0.0
    tip_power = extrapolate_tip_power(stations, geometry.tip_radius)

    radii = [geometry.hub_radius] + [s.radius for s in stations] + [geometry.tip_radius]
    powers = [hub_power] + [s.power_per_span for s in stations] + [tip_power]
    rotor_power = geometry.blade_count * float(trapezoid(powers, radii))

    if rotor_power <= 0:
        raise RotorDesignError(f"rotor produces no power ({rotor_power:.6g} W); drag exceeds lift torque")

    return RotorSolution(
        stations=tuple(stations),
        hub_radius=geometry.hub_radius,
        tip_radius=geometry.tip_radius,
        blade_count=geometry.blade_count,
        hub_power_per_span=hub_power,
        tip_power_per_span=tip_power,
        rotor_power=rotor_power,
        electric_power=drivetrain_efficiency * rotor_power,
        drivetrain_efficiency=drivetrain_efficiency,
    )


def evaluate_rotor(
    flow: FlowConditions,
    geometry: RotorGeometry,
    design: AerodynamicDesignPoint,
    station_count: int = DEFAULT_STATION_COUNT,
    drivetrain_efficiency: float = DEFAULT_DRIVETRAIN_EFFICIENCY,
) -> RotorSolution:
    """Stations, per-station solution and spanwise integration end to end"""
    stations = [solve_station(r, flow, geometry, design) for r in station_radii(geometry, station_count)]
    solution = integrate_rotor_power(stations, geometry, drivetrain_efficiency)
    logger.debug(
        f"D={geometry.diameter:g} m rpm={geometry.rotational_speed:g} c={geometry.chord:g} m "
        f"-> P={solution.rotor_power:.6g} W"
    )
    return solution
