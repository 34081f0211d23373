"""
三角比较

时间曲率界判定、Alexandrov 构型与粘合引理。

@author Ysf
@date 2026-10-16
"""

from .alexandrov import (
    AlexandrovConfig,
    AlexandrovReport,
    Constellation,
    Inequality,
    Intersection,
    Relation,
    alexandrov_check,
    alexandrov_check_other,
    angle_gap,
    sample_alexandrov_configs,
)
from .errors import (
    ComparisonError,
    ConfigInfeasible,
    NoRealizingCurve,
    OffSide,
    ParameterOutOfRange,
    SideMismatch,
    SubtriangleDegenerate,
)
from .gluing import (
    GluedComparison,
    GluingCase,
    GluingLemmaReport,
    IntermediateCheck,
    ManifoldPiece,
    SignedComparisonReport,
    classify_pair,
    detour_function,
    detour_samples,
    glue_comparison_triangles,
    glue_signed_triangles,
    gluing_lemma_check,
    gluing_lemma_manifold_check,
    signed_comparison,
)
from .regions import FiniteRegion, HalfPlaneRegion, ModelRegion, QuotientRegion, Region
from .triangles import STRATA, comparison_point, comparison_triangle, evaluate_triangle
from .types import Bound, PairRecord, Side, TimelikeTriangle, TriangleReport
from .verdict import curvature_verdict

__all__ = [
    # 区域
    "Region",
    "ModelRegion",
    "FiniteRegion",
    "QuotientRegion",
    "HalfPlaneRegion",
    # 类型
    "Bound",
    "Side",
    "TimelikeTriangle",
    "PairRecord",
    "TriangleReport",
    "STRATA",
    # 曲率界
    "comparison_triangle",
    "comparison_point",
    "evaluate_triangle",
    "curvature_verdict",
    # Alexandrov
    "Constellation",
    "Intersection",
    "Relation",
    "AlexandrovConfig",
    "Inequality",
    "AlexandrovReport",
    "alexandrov_check",
    "alexandrov_check_other",
    "sample_alexandrov_configs",
    "angle_gap",
    # 粘合
    "GluedComparison",
    "GluingCase",
    "GluingLemmaReport",
    "IntermediateCheck",
    "ManifoldPiece",
    "SignedComparisonReport",
    "classify_pair",
    "detour_function",
    "detour_samples",
    "glue_comparison_triangles",
    "glue_signed_triangles",
    "gluing_lemma_check",
    "gluing_lemma_manifold_check",
    "signed_comparison",
    # 异常
    "ComparisonError",
    "OffSide",
    "NoRealizingCurve",
    "ConfigInfeasible",
    "ParameterOutOfRange",
    "SubtriangleDegenerate",
    "SideMismatch",
]
