"""
Run Configuration Loader

Reads flat `section.key = value` files with python-dotenv's parser and
validates them into a RunConfig. Validation failures name the dotted field.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Union

from dotenv import dotenv_values
from pydantic import ValidationError

from ..errors import ConfigurationError
from ..models.airfoil import AerodynamicDesignPoint
from ..models.config import RunConfig
from ..models.rotor import FlowConditions
from .airfoil_polars import design_point_from_polar, fixed_design_point, select_curve
from .design_search import DesignSource
from .polar_library import get_polar_library
from .rotor_model import reynolds_number

logger = logging.getLogger(__name__)


def _nest(flat: Dict[str, Any]) -> Dict[str, Any]:
    nested: Dict[str, Any] = {}
    for key, value in flat.items():
        if "." in key:
            section, field = key.split(".", 1)
            nested.setdefault(section, {})[field] = value
        else:
            nested[key] = value
    return nested


def format_validation_error(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        field = ".".join(str(p) for p in item["loc"]) or "config"
        parts.append(f"{field}: {item['msg']}")
    return "; ".join(parts)


def parse_run_config(flat: Dict[str, Any], base_dir: Union[str, Path, None] = None) -> RunConfig:
    """Validate already-parsed key/value pairs"""
    for key, value in flat.items():
        if value is None:
            raise ConfigurationError(f"{key}: expected 'key = value'")
    values = {k: v for k, v in flat.items() if v != ""}

    polar_file = values.get("design.polar_file")
    if polar_file and base_dir is not None and not Path(polar_file).is_absolute():
        values["design.polar_file"] = str(Path(base_dir) / polar_file)

    try:
        return RunConfig.model_validate(_nest(values))
    except ValidationError as e:
        raise ConfigurationError(format_validation_error(e))


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """Read and validate a run file"""
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"config file not found: {path}")
    flat = dotenv_values(path, interpolate=False)
    config = parse_run_config(dict(flat), base_dir=path.parent)
    logger.info(f"Loaded run config {path} ({len(flat)} keys)")
    return config


def design_source(config: RunConfig, flow: FlowConditions) -> DesignSource:
    """
    The configured design point

    A polar-derived point depends on the operating Reynolds number, so for a
    polar source this returns a callable of chord.
    """
    section = config.design
    if not section.polar_file:
        return fixed_design_point(section.lift_coefficient, section.drag_coefficient, section.incidence)

    polars = get_polar_library().load(section.polar_file)

    def resolve(chord: float) -> AerodynamicDesignPoint:
        operating = section.operating_reynolds or reynolds_number(flow, chord)
        curve = select_curve(polars, operating)
        return design_point_from_polar(curve, section.stall_margin, section.drag_safety_factor)

    return resolve


def design_point_for_chord(config: RunConfig, flow: FlowConditions, chord: float) -> AerodynamicDesignPoint:
    source = design_source(config, flow)
    return source if isinstance(source, AerodynamicDesignPoint) else source(chord)
