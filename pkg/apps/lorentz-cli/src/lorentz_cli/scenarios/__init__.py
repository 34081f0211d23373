"""
可复现场景

导入各场景模块即完成注册。

@author Ysf
@date 2026-10-16
"""

from . import curvature_bounds, orientation, point_gluing, reshetnyak, vertical_line  # noqa: F401
from .base import Scenario, ScenarioResult
from .registry import ScenarioError, ScenarioRegistry, UnknownScenarioError

__all__ = [
    "Scenario",
    "ScenarioResult",
    "ScenarioRegistry",
    "ScenarioError",
    "UnknownScenarioError",
]
