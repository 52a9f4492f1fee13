from .airfoil import AerodynamicDesignPoint, DesignPointSource, PolarCurve, PolarSet
from .design import AxisRange, DesignCandidate, DesignConstraints, DesignSpace
from .rotor import FlowConditions, RadialStation, RotorGeometry, RotorSolution
from .site import SiteRecord, SiteScore

__all__ = [
    "AerodynamicDesignPoint",
    "AxisRange",
    "DesignCandidate",
    "DesignConstraints",
    "DesignPointSource",
    "DesignSpace",
    "FlowConditions",
    "PolarCurve",
    "PolarSet",
    "RadialStation",
    "RotorGeometry",
    "RotorSolution",
    "SiteRecord",
    "SiteScore",
]
