"""
anti-de Sitter 平面 (K < 0)

单位模型 {⟨x,x⟩ = -1}，环境签名 (-, -, +)；原点 (1, 0, 0)，
时间轴 (cos t, sin t, 0)。时间定向由向量场 (-x1, x0, 0) 给出。
类时分离取 arccos 主支，τ < π·R。

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

_ETA = np.diag([-1.0, -1.0, 1.0])


class AntiDeSitterPlane(CurvedModel):
    """二维 anti-de Sitter 空间（按曲率缩放）"""

    _level = -1.0
    _normal_sign = -1.0

    def __init__(self, curvature: float = -1.0):
        if curvature >= 0:
            raise ValueError(f"anti-de Sitter 模型要求 K < 0，实际 {curvature}")
        super().__init__(curvature)

    @property
    def metric(self) -> np.ndarray:
        return _ETA

    def origin(self) -> ModelPoint:
        return ModelPoint((self.radius, 0.0, 0.0), self.curvature)

    def time_axis(self, s: float) -> ModelPoint:
        R = self.radius
        t = s / R
        return ModelPoint((R * math.cos(t), R * math.sin(t), 0.0), self.curvature)

    def _log_unit(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        c = float(p @ _ETA @ q)
        m = -c
        w = q + c * p
        if m > 1.0:
            s = math.acosh(m)
            return (s / math.sinh(s)) * w
        if m == 1.0:
            return w
        if m > -1.0:
            s = math.acos(m)
            return (s / math.sin(s)) * w
        raise NoUniqueGeodesic(f"anti-de Sitter 中 -⟨p,q⟩ = {m:.6g} <= -1，无唯一测地线")

    def _exp_unit(self, p: np.ndarray, v: np.ndarray) -> np.ndarray:
        n = float(v @ _ETA @ v)
        if n < 0:
            th = math.sqrt(-n)
            return math.cos(th) * p + (math.sin(th) / th) * v
        if n > 0:
            th = math.sqrt(n)
            return math.cosh(th) * p + (math.sinh(th) / th) * v
        return p + v

    def is_future(self, p: ModelPoint, v: np.ndarray) -> bool:
        return float(p.ambient_coords[0] * v[1] - p.ambient_coords[1] * v[0]) > 0

    def tangent_frame(self, p: ModelPoint) -> Tuple[np.ndarray, np.ndarray]:
        u = p.vec / self.radius
        e0 = np.array([-u[1], u[0], 0.0])
        e0 = e0 / math.sqrt(u[0] * u[0] + u[1] * u[1])
        return e0, self.normal(p, e0)

    def _pairwise_unit(self, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        M = -(u @ _ETA @ u.T)
        future = (u[:, None, 0] * u[None, :, 1] - u[:, None, 1] * u[None, :, 0]) > 0
        s = np.arccos(np.clip(M, -1.0, 1.0))
        inside = (M > -1.0) & (M < 1.0)
        chron = inside & (s * s > MEMBERSHIP_TOL) & future
        spacelike_sq = np.arccosh(np.maximum(M, 1.0)) ** 2
        causal = (M > -1.0) & future & ((M <= 1.0) | (spacelike_sq <= MEMBERSHIP_TOL))
        return np.where(chron, s, 0.0), chron, causal
