"""
Design Search Models
Swept design-variable ranges, feasibility constraints and evaluated candidates
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .rotor import DEFAULT_DRIVETRAIN_EFFICIENCY, RotorGeometry, RotorSolution


class AxisRange(BaseModel):
    """Inclusive (min, max, step) range of one design variable"""
    model_config = ConfigDict(frozen=True)

    minimum: float
    maximum: float
    step: float = Field(..., gt=0)

    @model_validator(mode="after")
    def validate_bounds(self):
        if self.minimum > self.maximum:
            raise ValueError("minimum must be <= maximum")
        return self


class DesignSpace(BaseModel):
    """Grid over rotor diameter (m), rotational speed (rpm) and chord (m)"""
    model_config = ConfigDict(frozen=True)

    diameter_range: AxisRange = AxisRange(minimum=80.0, maximum=110.0, step=5.0)
    rpm_range: AxisRange = AxisRange(minimum=6.0, maximum=18.0, step=1.0)
    chord_range: AxisRange = AxisRange(minimum=1.0, maximum=4.0, step=0.25)
    hub_tip_ratio: float = Field(default=0.05, gt=0, lt=1)
    blade_count: int = Field(default=3, ge=1)

    @model_validator(mode="after")
    def validate_positive_axes(self):
        for name in ("diameter_range", "rpm_range", "chord_range"):
            if getattr(self, name).minimum <= 0:
                raise ValueError(f"{name} must start above zero")
        return self


class DesignConstraints(BaseModel):
    """What a candidate must satisfy to be feasible"""
    model_config = ConfigDict(frozen=True)

    target_electric_power: float = Field(default=2.0e6, ge=0)  # W
    drivetrain_efficiency: float = Field(default=DEFAULT_DRIVETRAIN_EFFICIENCY, gt=0, le=1)
    max_tip_speed: Optional[float] = Field(default=None, gt=0)  # m/s
    station_count: int = Field(default=16, ge=2)


class DesignCandidate(BaseModel):
    """One evaluated grid point; no solution when the rotor produces no power"""
    model_config = ConfigDict(frozen=True)

    geometry: RotorGeometry
    solution: Optional[RotorSolution] = None
    failure: Optional[str] = None
    feasible: bool
    tip_speed: float  # m/s

    @property
    def diameter(self) -> float:
        return self.geometry.diameter

    @property
    def rpm(self) -> float:
        return self.geometry.rotational_speed

    @property
    def chord(self) -> float:
        return self.geometry.chord
