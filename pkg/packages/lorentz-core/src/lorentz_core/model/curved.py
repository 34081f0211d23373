"""
非零曲率模型的公共部分

M_K (K≠0) 嵌入三维环境空间 {⟨x,x⟩ = 1/K}。所有计算在单位模型上进行，
再按 R = 1/√|K| 缩放：坐标 ×R，τ ×R，切向量 ×R。

@author Ysf
@date 2026-10-16
"""

import math
from abc import abstractmethod
from typing import Tuple

import numpy as np

from .base import MEMBERSHIP_TOL, ModelSpace
from .errors import NoUniqueGeodesic
from .types import ModelPoint


class CurvedModel(ModelSpace):
    """de Sitter / anti-de Sitter 公共实现"""

    ambient_dim = 3

    # 单位模型上 ⟨x,x⟩ 的取值（dS: +1，AdS: -1）
    _level: float = 1.0
    # 法向量 η(e×p) 的方向符号，使原点处 n = (0, 0, 1)
    _normal_sign: float = 1.0

    def constraint_residual(self, coords: np.ndarray) -> float:
        u = coords / self.radius
        return abs(float(u @ self.metric @ u) - self._level)

    def project(self, coords: np.ndarray) -> ModelPoint:
        u = np.asarray(coords, dtype=float) / self.radius
        norm = float(u @ self.metric @ u) * self._level
        if norm <= 0:
            raise NoUniqueGeodesic(f"坐标 {coords} 无法投影回模型")
        return ModelPoint.from_array(self.radius * u / math.sqrt(norm), self.curvature)

    # ---------- 单位模型钩子 ----------

    @abstractmethod
    def _log_unit(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def _exp_unit(self, p: np.ndarray, v: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def _pairwise_unit(self, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        ...

    # ---------- 缩放包装 ----------

    def log(self, p: ModelPoint, q: ModelPoint) -> np.ndarray:
        R = self.radius
        return R * self._log_unit(p.vec / R, q.vec / R)

    def exp(self, p: ModelPoint, v: np.ndarray) -> ModelPoint:
        R = self.radius
        return self.project(R * self._exp_unit(p.vec / R, np.asarray(v, dtype=float) / R))

    def normal(self, p: ModelPoint, e: np.ndarray) -> np.ndarray:
        n = self._normal_sign * (self.metric @ np.cross(np.asarray(e, dtype=float), p.vec))
        return self.unit(n)

    def orientation(self, a: ModelPoint, b: ModelPoint, c: ModelPoint) -> float:
        R = self.radius
        return float(np.linalg.det(np.stack([a.vec, b.vec, c.vec]) / R))

    def pairwise(self, coords: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        u = np.asarray(coords, dtype=float) / self.radius
        s, chron, causal = self._pairwise_unit(u)
        diff = np.abs(u[:, None, :] - u[None, :, :]).max(axis=2)
        causal = causal | (diff <= MEMBERSHIP_TOL)
        return self.radius * s, chron, causal
