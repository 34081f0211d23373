"""
有限 Lorentz 预长度空间

@author Ysf
@date 2026-10-16
"""

from .curves import check_curve, realizing_points, tau_length
from .diagnostics import isolation_report, lsc_defect, max_lsc_defect, sampling_modulus
from .errors import MalformedSpace, NotCausal, SpaceError, UnknownPoint
from .restrict import restrict_space, time_reversed
from .sampling import (
    diamond_sample,
    geodesic_midpoints,
    line_sample,
    minkowski_grid,
    sample_model_points,
)
from .types import (
    DENSE_LIMIT,
    INF,
    CurveDirection,
    DiscreteCausalCurve,
    FiniteLorentzSpace,
    IsolationReport,
    Pair,
    PointId,
    PointIsolation,
)
from .validator import (
    AxiomViolation,
    SpaceValidator,
    ValidationResult,
    ValidationWarning,
    validate_space,
)

__all__ = [
    # 类型
    "FiniteLorentzSpace",
    "DiscreteCausalCurve",
    "CurveDirection",
    "IsolationReport",
    "PointIsolation",
    "PointId",
    "Pair",
    "INF",
    "DENSE_LIMIT",
    # 验证
    "SpaceValidator",
    "ValidationResult",
    "ValidationWarning",
    "AxiomViolation",
    "validate_space",
    # 曲线与诊断
    "tau_length",
    "check_curve",
    "realizing_points",
    "lsc_defect",
    "max_lsc_defect",
    "sampling_modulus",
    "isolation_report",
    "restrict_space",
    "time_reversed",
    # 采样
    "sample_model_points",
    "minkowski_grid",
    "diamond_sample",
    "line_sample",
    "geodesic_midpoints",
    # 异常
    "SpaceError",
    "MalformedSpace",
    "UnknownPoint",
    "NotCausal",
]
