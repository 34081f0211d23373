"""
运行配置模块

提供容差、采样与场景参数的 Schema 定义和加载器。

@author Ysf
@date 2026-10-16
"""

from .loader import (
    DEFAULT_PROFILE,
    LOG_LEVEL_ENV,
    PROFILE_ENV,
    SEED_ENV,
    ConfigError,
    ConfigLoader,
)
from .schema import (
    LorentzConfig,
    LscFailureScenario,
    OrientationReversalScenario,
    ReshetnyakScenario,
    SamplingConfig,
    ScenarioConfig,
    ToleranceConfig,
    VerticalLineScenario,
)

__all__ = [
    # Schema
    "LorentzConfig",
    "ToleranceConfig",
    "SamplingConfig",
    "ScenarioConfig",
    "LscFailureScenario",
    "VerticalLineScenario",
    "OrientationReversalScenario",
    "ReshetnyakScenario",
    # Loader
    "ConfigLoader",
    "ConfigError",
    "DEFAULT_PROFILE",
    "PROFILE_ENV",
    "SEED_ENV",
    "LOG_LEVEL_ENV",
]
