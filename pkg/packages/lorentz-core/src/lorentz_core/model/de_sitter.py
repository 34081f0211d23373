"""
de Sitter 平面 (K > 0)

单位模型 {⟨x,x⟩ = 1}，环境签名 (-, +, +)；原点 (0, 1, 0)，
时间轴 (sinh t, cosh t, 0)，未来方向为 x0 增加的方向。

@author Ysf
@date 2026-10-16
"""

import math
from typing import Tuple

import numpy as np

from .base import MEMBERSHIP_TOL
from .curved import CurvedModel
from .errors import NoUniqueGeodesic
from .types import ModelPoint

_ETA = np.diag([-1.0, 1.0, 1.0])


class DeSitterPlane(CurvedModel):
    """二维 de Sitter 空间（按曲率缩放）"""

    _level = 1.0
    _normal_sign = 1.0

    def __init__(self, curvature: float = 1.0):
        if curvature <= 0:
            raise ValueError(f"de Sitter 模型要求 K > 0，实际 {curvature}")
        super().__init__(curvature)

    @property
    def metric(self) -> np.ndarray:
        return _ETA

    def origin(self) -> ModelPoint:
        return ModelPoint((0.0, self.radius, 0.0), self.curvature)

    def time_axis(self, s: float) -> ModelPoint:
        R = self.radius
        t = s / R
        return ModelPoint((R * math.sinh(t), R * math.cosh(t), 0.0), self.curvature)

    def _log_unit(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        c = float(p @ _ETA @ q)
        w = q - c * p
        if c > 1.0:
            s = math.acosh(c)
            return (s / math.sinh(s)) * w
        if c == 1.0:
            return w
        if c > -1.0:
            s = math.acos(c)
            return (s / math.sin(s)) * w
        raise NoUniqueGeodesic(f"de Sitter 中 ⟨p,q⟩ = {c:.6g} <= -1，无唯一测地线")

    def _exp_unit(self, p: np.ndarray, v: np.ndarray) -> np.ndarray:
        n = float(v @ _ETA @ v)
        if n < 0:
            th = math.sqrt(-n)
            return math.cosh(th) * p + (math.sinh(th) / th) * v
        if n > 0:
            th = math.sqrt(n)
            return math.cos(th) * p + (math.sin(th) / th) * v
        return p + v

    def is_future(self, p: ModelPoint, v: np.ndarray) -> bool:
        return float(v[0]) > 0

    def tangent_frame(self, p: ModelPoint) -> Tuple[np.ndarray, np.ndarray]:
        u = p.vec / self.radius
        e0 = np.array([1.0, 0.0, 0.0]) + u[0] * u
        e0 = e0 / math.sqrt(1.0 + u[0] * u[0])
        return e0, self.normal(p, e0)

    def _pairwise_unit(self, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        C = u @ _ETA @ u.T
        # w = q - c·p 的时间分量决定定向
        w0 = u[None, :, 0] - C * u[:, None, 0]
        future = w0 > 0
        s = np.arccosh(np.maximum(C, 1.0))
        timelike_sq = s * s
        chron = (C > 1.0) & (timelike_sq > MEMBERSHIP_TOL) & future
        causal = (C > -1.0) & future & ((C >= 1.0) | (np.arccos(np.clip(C, -1.0, 1.0)) ** 2 <= MEMBERSHIP_TOL))
        return np.where(chron, s, 0.0), chron, causal
