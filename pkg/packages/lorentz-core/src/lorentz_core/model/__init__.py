"""
常曲率 Lorentz 模型空间 M_K

@author Ysf
@date 2026-10-16
"""

from .anti_de_sitter import AntiDeSitterPlane
from .base import COMPOSED_TOL, MEMBERSHIP_TOL, METRIC_TOL, PIPELINE_TOL, ModelSpace
from .de_sitter import DeSitterPlane
from .errors import (
    CoordinateOffModel,
    GridTooCoarse,
    LegNotTimelike,
    ModelSpaceError,
    NoUniqueGeodesic,
    ReverseTriangleViolated,
    SizeBoundViolated,
    SturmNotApplicable,
    UnrealizableTriple,
)
from .factory import get_model, timelike_diameter
from .minkowski import MinkowskiPlane, reverse_cauchy_schwarz_gap
from .monotonicity import (
    HingeBehaviourReport,
    HingeMonotonicityReport,
    hinge_behaviour_probe,
    hinge_monotonicity_probe,
    sturm_check,
)
from .operations import (
    geodesic_point,
    hyperbolic_angle,
    nonnormalized_angle,
    signed_distance,
    tau_K,
)
from .triangles import (
    law_of_cosines_third_side,
    realize_adjacent_vertex,
    realize_signed_triangle,
    realize_triangle,
    size_bounds_check,
)
from .types import Hinge, ModelPoint, SideLengths, SignedValue

__all__ = [
    # 模型
    "ModelSpace",
    "MinkowskiPlane",
    "DeSitterPlane",
    "AntiDeSitterPlane",
    "get_model",
    "timelike_diameter",
    # 类型
    "ModelPoint",
    "SignedValue",
    "Hinge",
    "SideLengths",
    # 运算
    "tau_K",
    "signed_distance",
    "nonnormalized_angle",
    "hyperbolic_angle",
    "geodesic_point",
    "law_of_cosines_third_side",
    "realize_triangle",
    "realize_signed_triangle",
    "realize_adjacent_vertex",
    "size_bounds_check",
    "hinge_monotonicity_probe",
    "hinge_behaviour_probe",
    "sturm_check",
    "reverse_cauchy_schwarz_gap",
    "HingeMonotonicityReport",
    "HingeBehaviourReport",
    # 容差
    "MEMBERSHIP_TOL",
    "METRIC_TOL",
    "COMPOSED_TOL",
    "PIPELINE_TOL",
    # 异常
    "ModelSpaceError",
    "CoordinateOffModel",
    "NoUniqueGeodesic",
    "LegNotTimelike",
    "SizeBoundViolated",
    "ReverseTriangleViolated",
    "UnrealizableTriple",
    "GridTooCoarse",
    "SturmNotApplicable",
]
