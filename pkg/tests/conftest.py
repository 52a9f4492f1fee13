"""Shared fixtures: the Dhofar design and small polar curves"""

from pathlib import Path

import pandas as pd
import pytest
from scipy.integrate import trapezoid

from windrotor.models.airfoil import AerodynamicDesignPoint, PolarCurve
from windrotor.models.rotor import FlowConditions, RotorGeometry
from windrotor.services.rotor_model import evaluate_rotor

DATA_DIR = Path(__file__).resolve().parent.parent / "windrotor" / "data"

# Reference Dhofar distribution: (blade angle deg, power per span kW/m) for stations 1..16
DHOFAR_STATIONS = [
    (60.5, 0.98), (71.9, 1.95), (78.8, 3.29), (83.3, 5.00),
    (86.3, 7.07), (88.6, 9.49), (90.3, 12.25), (91.6, 15.35),
    (92.7, 18.76), (93.6, 22.49), (94.3, 26.52), (95.0, 30.84),
    (95.5, 35.44), (96.0, 40.31), (96.4, 45.45), (96.7, 50.84),
]
DHOFAR_TIP_KW_PER_M = 56.22


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def dhofar_flow() -> FlowConditions:
    return FlowConditions(wind_speed=6.0, air_density=1.22, kinematic_viscosity=1.5e-5)


@pytest.fixture
def dhofar_geometry() -> RotorGeometry:
    return RotorGeometry.from_diameter(diameter=80.0, chord=3.5, rotational_speed=15.0, hub_tip_ratio=0.05, blade_count=3)


@pytest.fixture
def dhofar_design() -> AerodynamicDesignPoint:
    return AerodynamicDesignPoint(lift_coefficient=1.3, drag_coefficient=0.018, incidence=12.5)


@pytest.fixture
def dhofar_solution(dhofar_flow, dhofar_geometry, dhofar_design):
    return evaluate_rotor(dhofar_flow, dhofar_geometry, dhofar_design, station_count=16, drivetrain_efficiency=0.85)


@pytest.fixture
def linear_curve() -> PolarCurve:
    """CL = 0.1 * alpha up to stall at 15 deg"""
    return PolarCurve(
        reynolds=1.0e6,
        lift_samples=((0.0, 0.0), (5.0, 0.5), (10.0, 1.0), (15.0, 1.5), (20.0, 1.1)),
        drag_samples=((0.0, 0.006), (1.0, 0.012), (1.6, 0.03)),
    )


def make_curve(reynolds: float, peak: float = 1.5) -> PolarCurve:
    return PolarCurve(
        reynolds=reynolds,
        lift_samples=((0.0, 0.0), (10.0, 1.0), (15.0, peak), (20.0, 1.0)),
        drag_samples=((0.0, 0.006), (2.0, 0.04)),
    )


def write_config(path: Path, **overrides) -> Path:
    """Dhofar run file with selected keys replaced (None drops the key)"""
    values = {
        "flow.wind_speed": "6.0",
        "flow.air_density": "1.22",
        "flow.kinematic_viscosity": "1.5e-5",
        "rotor.diameter": "80",
        "rotor.hub_tip_ratio": "0.05",
        "rotor.chord": "3.5",
        "rotor.blade_count": "3",
        "rotor.rpm": "15",
        "design.lift_coefficient": "1.3",
        "design.drag_coefficient": "0.018",
        "design.incidence": "12.5",
        "run.station_count": "16",
        "run.drivetrain_efficiency": "0.85",
    }
    for key, value in overrides.items():
        key = key.replace("__", ".")
        if value is None:
            values.pop(key, None)
        else:
            values[key] = str(value)
    path.write_text("".join(f"{k} = {v}\n" for k, v in values.items()))
    return path


def integrate_station_csv(path: Path, blade_count: int) -> float:
    """Rotor power (W) re-integrated from a written station CSV"""
    frame = pd.read_csv(path)
    return blade_count * 1000 * float(trapezoid(frame["power_per_span_kW_per_m"], frame["radius_m"]))
