"""
Airfoil Models
Lift/drag polars per Reynolds regime and the aerodynamic design point
"""

from enum import Enum
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class DesignPointSource(str, Enum):
    """Where a design point came from"""
    FIXED = "fixed"
    DERIVED_FROM_POLAR = "derived-from-polar"


class PolarCurve(BaseModel):
    """Lift and drag samples of one airfoil at one Reynolds number"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    reynolds: float = Field(..., gt=0)
    # (incidence_deg, cl)
    lift_samples: Tuple[Tuple[float, float], ...] = Field(..., min_length=3)
    # (cl, cd)
    drag_samples: Tuple[Tuple[float, float], ...] = Field(..., min_length=2)

    @field_validator("lift_samples")
    @classmethod
    def validate_lift_samples(cls, v):
        incidences = [alpha for alpha, _ in v]
        if any(b <= a for a, b in zip(incidences, incidences[1:])):
            raise ValueError("lift samples must be strictly increasing in incidence")
        return v

    @field_validator("drag_samples")
    @classmethod
    def validate_drag_samples(cls, v):
        lifts = [cl for cl, _ in v]
        if any(b <= a for a, b in zip(lifts, lifts[1:])):
            raise ValueError("drag samples must be strictly increasing in lift coefficient")
        if any(cd <= 0 for _, cd in v):
            raise ValueError("drag coefficients must be positive")
        return v

    @property
    def incidences(self) -> List[float]:
        return [alpha for alpha, _ in self.lift_samples]

    @property
    def lift_coefficients(self) -> List[float]:
        return [cl for _, cl in self.lift_samples]


class PolarSet(BaseModel):
    """All curves published for one airfoil"""
    model_config = ConfigDict(frozen=True)

    airfoil_name: str = Field(..., min_length=1)
    curves: Tuple[PolarCurve, ...] = Field(..., min_length=1)

    @field_validator("curves")
    @classmethod
    def validate_reynolds_order(cls, v):
        reynolds = [curve.reynolds for curve in v]
        if any(b <= a for a, b in zip(reynolds, reynolds[1:])):
            raise ValueError("curves must be sorted by strictly increasing Reynolds number")
        return v

    @classmethod
    def from_curves(cls, airfoil_name: str, curves: List[PolarCurve]) -> "PolarSet":
        """Build a set from curves in any order"""
        return cls(airfoil_name=airfoil_name, curves=tuple(sorted(curves, key=lambda c: c.reynolds)))


class AerodynamicDesignPoint(BaseModel):
    """Operating lift, drag and incidence of the blade sections"""
    model_config = ConfigDict(frozen=True)

    lift_coefficient: float = Field(..., gt=0)
    drag_coefficient: float = Field(..., gt=0)
    incidence: float = Field(..., gt=0, lt=90)  # degrees
    source: DesignPointSource = DesignPointSource.FIXED

    @model_validator(mode="after")
    def validate_drag_below_lift(self):
        if self.drag_coefficient >= self.lift_coefficient:
            raise ValueError("drag_coefficient must be smaller than lift_coefficient")
        return self

    @property
    def lift_to_drag_ratio(self) -> float:
        return self.lift_coefficient / self.drag_coefficient
