"""
Run Configuration Models
Validated form of the flat `section.key = value` run files
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .airfoil import DesignPointSource
from .design import AxisRange, DesignConstraints, DesignSpace
from .rotor import (
    DEFAULT_AIR_DENSITY,
    DEFAULT_DRIVETRAIN_EFFICIENCY,
    DEFAULT_KINEMATIC_VISCOSITY,
    FlowConditions,
    RotorGeometry,
)


POLAR_ONLY_FIELDS = {"stall_margin", "drag_safety_factor", "operating_reynolds"}


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, allow_inf_nan=False)


class FlowSection(_Section):
    """[flow] ambient wind"""
    wind_speed: float = Field(..., gt=0)
    air_density: float = Field(default=DEFAULT_AIR_DENSITY, gt=0)
    kinematic_viscosity: float = Field(default=DEFAULT_KINEMATIC_VISCOSITY, gt=0)

    def to_flow(self) -> FlowConditions:
        return FlowConditions(**self.model_dump())


class RotorSection(_Section):
    """[rotor] a single geometry to evaluate"""
    diameter: float = Field(..., gt=0)
    hub_tip_ratio: float = Field(default=0.05, gt=0, lt=1)
    chord: float = Field(..., gt=0)
    blade_count: int = Field(default=3, ge=1)
    rpm: float = Field(..., gt=0)

    def to_geometry(self) -> RotorGeometry:
        return RotorGeometry.from_diameter(
            diameter=self.diameter,
            chord=self.chord,
            rotational_speed=self.rpm,
            hub_tip_ratio=self.hub_tip_ratio,
            blade_count=self.blade_count,
        )


class SpaceSection(_Section):
    """[space] the grid swept by `sweep`"""
    diameter_min: float = Field(default=80.0, gt=0)
    diameter_max: float = Field(default=110.0, gt=0)
    diameter_step: float = Field(default=5.0, gt=0)
    rpm_min: float = Field(default=6.0, gt=0)
    rpm_max: float = Field(default=18.0, gt=0)
    rpm_step: float = Field(default=1.0, gt=0)
    chord_min: float = Field(default=1.0, gt=0)
    chord_max: float = Field(default=4.0, gt=0)
    chord_step: float = Field(default=0.25, gt=0)
    hub_tip_ratio: float = Field(default=0.05, gt=0, lt=1)
    blade_count: int = Field(default=3, ge=1)

    @model_validator(mode="after")
    def validate_ranges(self):
        for axis in ("diameter", "rpm", "chord"):
            low, high = getattr(self, f"{axis}_min"), getattr(self, f"{axis}_max")
            if low > high:
                raise ValueError(f"{axis}_min {low:g} exceeds {axis}_max {high:g}")
        return self

    def to_design_space(self) -> DesignSpace:
        return DesignSpace(
            diameter_range=AxisRange(minimum=self.diameter_min, maximum=self.diameter_max, step=self.diameter_step),
            rpm_range=AxisRange(minimum=self.rpm_min, maximum=self.rpm_max, step=self.rpm_step),
            chord_range=AxisRange(minimum=self.chord_min, maximum=self.chord_max, step=self.chord_step),
            hub_tip_ratio=self.hub_tip_ratio,
            blade_count=self.blade_count,
        )


class DesignSection(_Section):
    """[design] fixed CL/CD/incidence, or a polar file with a stall margin"""
    lift_coefficient: Optional[float] = Field(default=None, gt=0)
    drag_coefficient: Optional[float] = Field(default=None, gt=0)
    incidence: Optional[float] = Field(default=None, gt=0, lt=90)
    polar_file: Optional[str] = None
    stall_margin: float = Field(default=0.85, gt=0, le=1)
    drag_safety_factor: float = Field(default=1.0, ge=1)
    operating_reynolds: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def validate_single_source(self):
        fixed = [self.lift_coefficient, self.drag_coefficient, self.incidence]
        has_fixed = any(v is not None for v in fixed)
        if has_fixed and self.polar_file:
            raise ValueError("give either lift_coefficient/drag_coefficient/incidence or polar_file, not both")
        if not has_fixed and not self.polar_file:
            raise ValueError("a design point needs lift_coefficient/drag_coefficient/incidence or polar_file")
        if has_fixed and any(v is None for v in fixed):
            raise ValueError("lift_coefficient, drag_coefficient and incidence must all be set")
        if has_fixed and self.drag_coefficient >= self.lift_coefficient:
            raise ValueError("drag_coefficient must be smaller than lift_coefficient")
        polar_only = sorted(self.model_fields_set & POLAR_ONLY_FIELDS)
        if polar_only and not self.polar_file:
            raise ValueError(f"{', '.join(polar_only)} only apply with polar_file")
        return self

    @property
    def source(self) -> DesignPointSource:
        return DesignPointSource.DERIVED_FROM_POLAR if self.polar_file else DesignPointSource.FIXED


class ConstraintsSection(_Section):
    """[constraints] sweep feasibility"""
    target_electric_power: float = Field(default=2.0e6, ge=0)
    max_tip_speed: Optional[float] = Field(default=None, gt=0)


class RunSection(_Section):
    """[run] numerical settings"""
    station_count: int = Field(default=16, ge=2)
    drivetrain_efficiency: float = Field(default=DEFAULT_DRIVETRAIN_EFFICIENCY, gt=0, le=1)
    n_jobs: int = Field(default=1, ge=1)


class OutputSection(_Section):
    """[output] file destinations"""
    csv: Optional[str] = None
    series_dir: Optional[str] = None


class RunConfig(_Section):
    """One validated run file"""
    flow: FlowSection
    rotor: Optional[RotorSection] = None
    space: Optional[SpaceSection] = None
    design: DesignSection
    constraints: ConstraintsSection = ConstraintsSection()
    run: RunSection = RunSection()
    output: OutputSection = OutputSection()

    @model_validator(mode="after")
    def validate_geometry_or_space(self):
        if (self.rotor is None) == (self.space is None):
            raise ValueError("exactly one of the rotor or space sections must be present")
        return self

    def to_constraints(self) -> DesignConstraints:
        return DesignConstraints(
            target_electric_power=self.constraints.target_electric_power,
            drivetrain_efficiency=self.run.drivetrain_efficiency,
            max_tip_speed=self.constraints.max_tip_speed,
            station_count=self.run.station_count,
        )
