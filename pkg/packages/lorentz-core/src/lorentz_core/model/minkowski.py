"""
Minkowski 平面 (K = 0)

坐标 (t, x)，度量 η = diag(-1, +1)。

@author Ysf
@date 2026-10-16
"""

import math
from typing import Tuple

import numpy as np

from .base import MEMBERSHIP_TOL, ModelSpace
from .types import ModelPoint

_ETA = np.diag([-1.0, 1.0])


class MinkowskiPlane(ModelSpace):
    """二维 Minkowski 空间 M_0"""

    ambient_dim = 2

    def __init__(self) -> None:
        super().__init__(0.0)

    @property
    def metric(self) -> np.ndarray:
        return _ETA

    def constraint_residual(self, coords: np.ndarray) -> float:
        return 0.0 if np.all(np.isfinite(coords)) else math.inf

    def origin(self) -> ModelPoint:
        return ModelPoint((0.0, 0.0), 0.0)

    def time_axis(self, s: float) -> ModelPoint:
        return ModelPoint((float(s), 0.0), 0.0)

    def log(self, p: ModelPoint, q: ModelPoint) -> np.ndarray:
        return q.vec - p.vec

    def exp(self, p: ModelPoint, v: np.ndarray) -> ModelPoint:
        return ModelPoint.from_array(p.vec + np.asarray(v, dtype=float), 0.0)

    def is_future(self, p: ModelPoint, v: np.ndarray) -> bool:
        return float(v[0]) > 0

    def tangent_frame(self, p: ModelPoint) -> Tuple[np.ndarray, np.ndarray]:
        return np.array([1.0, 0.0]), np.array([0.0, 1.0])

    def normal(self, p: ModelPoint, e: np.ndarray) -> np.ndarray:
        # (e0, e1) ⟂ (e1, e0)
        return self.unit(np.array([e[1], e[0]], dtype=float))

    def orientation(self, a: ModelPoint, b: ModelPoint, c: ModelPoint) -> float:
        u = b.vec - a.vec
        w = c.vec - a.vec
        return float(u[0] * w[1] - u[1] * w[0])

    def chart(self, t: float, s: float) -> ModelPoint:
        return ModelPoint((float(t), float(s)), 0.0)

    def pairwise(self, coords: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        coords = np.asarray(coords, dtype=float)
        dt = coords[None, :, 0] - coords[:, None, 0]
        dx = coords[None, :, 1] - coords[:, None, 1]
        q = dt * dt - dx * dx
        chron = (q > MEMBERSHIP_TOL) & (dt > 0)
        tau = np.where(chron, np.sqrt(np.where(chron, q, 0.0)), 0.0)
        same = (np.abs(dt) <= MEMBERSHIP_TOL) & (np.abs(dx) <= MEMBERSHIP_TOL)
        causal = same | ((q >= -MEMBERSHIP_TOL) & (dt > 0))
        return tau, chron, causal


def reverse_cauchy_schwarz_gap(v: np.ndarray, w: np.ndarray) -> float:
    """
    反向 Cauchy–Schwarz 间隙 ⟨v,w⟩² - ⟨v,v⟩⟨w,w⟩

    对类时的 v、w 非负。
    """
    vw = float(v @ _ETA @ w)
    return vw * vw - float(v @ _ETA @ v) * float(w @ _ETA @ w)
