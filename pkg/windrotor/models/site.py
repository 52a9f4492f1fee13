"""
Site Models
Candidate wind farm sites and their wind power density scores
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .rotor import DEFAULT_AIR_DENSITY


class SiteRecord(BaseModel):
    """Annual mean wind at one location"""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    name: str = Field(..., min_length=1)
    mean_wind_speed: float = Field(..., ge=0)  # m/s
    air_density: float = Field(default=DEFAULT_AIR_DENSITY, gt=0)  # kg/m^3
    elevation: Optional[float] = None  # m, informational
    seasonal_min_speed: Optional[float] = Field(default=None, ge=0)  # m/s
    seasonal_max_speed: Optional[float] = Field(default=None, ge=0)  # m/s

    @model_validator(mode="after")
    def validate_seasonal_bounds(self):
        if (
            self.seasonal_min_speed is not None
            and self.seasonal_max_speed is not None
            and self.seasonal_min_speed > self.seasonal_max_speed
        ):
            raise ValueError("seasonal_min_speed must be <= seasonal_max_speed")
        return self


class SiteScore(BaseModel):
    """A site with its computed wind power density"""
    model_config = ConfigDict(frozen=True)

    site: SiteRecord
    power_density: float  # W/m^2
    seasonal_swing: Optional[float] = None  # m/s
    seasonal_swing_fraction: Optional[float] = None  # of the annual mean
