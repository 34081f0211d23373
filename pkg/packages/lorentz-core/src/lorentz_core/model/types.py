"""
模型空间数据类型

ModelPoint / SignedValue / Hinge / SideLengths

@author Ysf
@date 2026-10-16
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class ModelPoint:
    """
    模型空间 M_K 中的点

    K=0 时坐标为 (t, x)；K≠0 时为三维环境空间中超二次曲面上的坐标。
    """

    ambient_coords: Tuple[float, ...]
    curvature: float

    @property
    def vec(self) -> np.ndarray:
        """环境坐标向量（副本）"""
        return np.array(self.ambient_coords, dtype=float)

    @classmethod
    def from_array(cls, coords: np.ndarray, curvature: float) -> "ModelPoint":
        return cls(tuple(float(c) for c in coords), float(curvature))

    def to_list(self) -> list[float]:
        return list(self.ambient_coords)


@dataclass(frozen=True)
class SignedValue:
    """
    带符号长度 |v|± 或带符号距离 |pq|±

    值 < 0 当且仅当类时；类光为 0，类空为正。
    """

    value: float

    @property
    def is_timelike(self) -> bool:
        return self.value < 0

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def sign(self) -> int:
        if self.value < 0:
            return -1
        return 1 if self.value > 0 else 0

    @property
    def squared(self) -> float:
        """sgn·|v|²，即 g(v, v)"""
        return self.sign * self.value * self.value


@dataclass(frozen=True)
class Hinge:
    """铰链：公共顶点处两条测地线及其夹角"""

    vertex: ModelPoint
    leg_a_signed: SignedValue
    leg_b_signed: SignedValue
    nn_angle: float
    angle: Optional[float] = None


@dataclass(frozen=True)
class SideLengths:
    """
    类时三角形 x ≪ y ≪ z 的三边 τ 长度

    a = τ(x,y), b = τ(y,z), c = τ(x,z)
    """

    a: float
    b: float
    c: float

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def reverse_gap(self) -> float:
        """c - (a + b)，非负时满足反向三角不等式"""
        return self.c - (self.a + self.b)
