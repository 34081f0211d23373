"""
Lorentz 预长度空间粘合与比较几何核心包

五层结构：
- model: 常曲率二维模型空间 M_K 与比较三角形
- space: 有限 Lorentz 预长度空间、公理验证与诊断
- amalgamation: 不相交并、粘合映射、商空间与链
- comparison: 时间曲率界、Alexandrov 构型与粘合引理
- config / spacefile: 运行配置与 JSON 空间文件

@author Ysf
@date 2026-10-16
"""

__version__ = "0.1.0"

# 模型空间
from .model import (
    ModelPoint,
    ModelSpace,
    SideLengths,
    get_model,
    realize_triangle,
)

# 有限空间
from .space import (
    FiniteLorentzSpace,
    SpaceValidator,
    ValidationResult,
    validate_space,
)

# 粘合
from .amalgamation import (
    GluedHalfPlanes,
    GluingSpec,
    QuotientSpace,
    build_quotient,
)

# 比较
from .comparison import (
    Bound,
    alexandrov_check,
    curvature_verdict,
    gluing_lemma_check,
)

# 配置与文件
from .config import ConfigError, ConfigLoader, LorentzConfig
from .spacefile import SpaceFileError, load_gluing, load_space

__all__ = [
    # 版本
    "__version__",
    # 模型空间
    "ModelPoint",
    "ModelSpace",
    "SideLengths",
    "get_model",
    "realize_triangle",
    # 有限空间
    "FiniteLorentzSpace",
    "SpaceValidator",
    "ValidationResult",
    "validate_space",
    # 粘合
    "GluingSpec",
    "QuotientSpace",
    "GluedHalfPlanes",
    "build_quotient",
    # 比较
    "Bound",
    "curvature_verdict",
    "alexandrov_check",
    "gluing_lemma_check",
    # 配置与文件
    "ConfigLoader",
    "ConfigError",
    "LorentzConfig",
    "SpaceFileError",
    "load_space",
    "load_gluing",
]
