"""
Rotor Models
Flow state, rotor geometry and the spanwise blade-element solution
"""

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.integrate import cumulative_trapezoid

# Standard values used for the Dhofar design
DEFAULT_AIR_DENSITY = 1.22  # kg/m^3
DEFAULT_KINEMATIC_VISCOSITY = 1.5e-5  # m^2/s
DEFAULT_DRIVETRAIN_EFFICIENCY = 0.85


class FlowConditions(BaseModel):
    """Ambient wind state"""
    model_config = ConfigDict(frozen=True)

    wind_speed: float = Field(..., gt=0)  # m/s
    air_density: float = Field(default=DEFAULT_AIR_DENSITY, gt=0)  # kg/m^3
    kinematic_viscosity: float = Field(default=DEFAULT_KINEMATIC_VISCOSITY, gt=0)  # m^2/s


class RotorGeometry(BaseModel):
    """Rotor dimensions and speed; the span is always derived"""
    model_config = ConfigDict(frozen=True)

    tip_radius: float = Field(..., gt=0)  # m
    hub_radius: float = Field(..., gt=0)  # m
    chord: float = Field(..., gt=0)  # m
    blade_count: int = Field(..., ge=1)
    rotational_speed: float = Field(..., gt=0)  # rpm

    @model_validator(mode="after")
    def validate_hub_inside_tip(self):
        if self.hub_radius >= self.tip_radius:
            raise ValueError("hub_radius must be smaller than tip_radius")
        return self

    @classmethod
    def from_diameter(
        cls,
        diameter: float,
        chord: float,
        rotational_speed: float,
        hub_tip_ratio: float = 0.05,
        blade_count: int = 3,
    ) -> "RotorGeometry":
        """Geometry from rotor diameter and hub-to-tip ratio"""
        tip_radius = diameter / 2
        return cls(
            tip_radius=tip_radius,
            hub_radius=hub_tip_ratio * tip_radius,
            chord=chord,
            blade_count=blade_count,
            rotational_speed=rotational_speed,
        )

    @property
    def span(self) -> float:
        return self.tip_radius - self.hub_radius

    @property
    def diameter(self) -> float:
        return 2 * self.tip_radius


class RadialStation(BaseModel):
    """Blade-element solution at one radius (angles in degrees, forces per unit span)"""
    model_config = ConfigDict(frozen=True)

    radius: float  # m
    tangential_velocity: float = Field(..., ge=0)  # U, m/s
    relative_angle: float = Field(..., ge=0, lt=90)  # beta, deg
    relative_velocity: float = Field(..., gt=0)  # W, m/s
    lift_per_span: float  # L, N/m
    drag_per_span: float  # D, N/m
    tangential_force_per_span: float  # F_theta, N/m
    power_per_span: float  # P_r, W/m
    blade_angle: float  # gamma = beta + incidence, deg


class RotorSolution(BaseModel):
    """Spanwise stations plus integrated rotor and electric power"""
    model_config = ConfigDict(frozen=True)

    stations: Tuple[RadialStation, ...] = Field(..., min_length=2)
    hub_radius: float = Field(..., gt=0)
    tip_radius: float = Field(..., gt=0)
    blade_count: int = Field(..., ge=1)
    hub_power_per_span: float = 0.0
    tip_power_per_span: float
    rotor_power: float = Field(..., gt=0)  # W
    electric_power: float  # W
    drivetrain_efficiency: float = Field(default=DEFAULT_DRIVETRAIN_EFFICIENCY, gt=0, le=1)

    @model_validator(mode="after")
    def validate_station_order(self):
        radii = [s.radius for s in self.stations]
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("stations must be strictly increasing in radius")
        if radii[0] <= self.hub_radius or radii[-1] >= self.tip_radius:
            raise ValueError("stations must lie strictly between hub and tip")
        return self

    @property
    def radii(self) -> List[float]:
        return [s.radius for s in self.stations]

    def spanwise_profile(self) -> Tuple[List[float], List[float]]:
        """Radii and P_r including the hub anchor and the extrapolated tip"""
        radii = [self.hub_radius] + self.radii + [self.tip_radius]
        powers = [self.hub_power_per_span] + [s.power_per_span for s in self.stations] + [self.tip_power_per_span]
        return radii, powers

    def power_share(self) -> List[float]:
        """Cumulative fraction of rotor power inboard of each profile point"""
        radii, powers = self.spanwise_profile()
        shares = cumulative_trapezoid(powers, radii, initial=0.0)
        return (shares / shares[-1]).tolist()
