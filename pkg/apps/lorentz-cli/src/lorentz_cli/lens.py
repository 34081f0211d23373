"""
宽透镜区域判定

在平直图坐标中使用光锥更宽的度量

    η⁺ = -(2 dx₀)² + Σ (dx_i)²

R = τ^{η⁺}(b₋, b₊)，透镜 L = {x : τ^{η⁺}(b₋, x) > R/3, τ^{η⁺}(x, b₊) > R/3}，
可选地再限制在欧氏球 |x| < S 内。

@author Ysf
@date 2026-10-16
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from lorentz_core.amalgamation import NotChronological

Coords = Tuple[float, ...]


def wide_tau(p: Sequence[float], q: Sequence[float]) -> float:
    """
    η⁺ 下的时间分离

    q - p 在 η⁺ 下为未来类时时取 sqrt(4 dx₀² - Σ dx_i²)，否则为 0
    """
    v = np.asarray(q, dtype=float) - np.asarray(p, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise ValueError(f"坐标至少需要一个时间分量和一个空间分量: {tuple(p)}")
    value = 4.0 * v[0] * v[0] - float(v[1:] @ v[1:])
    if v[0] > 0 and value > 0:
        return math.sqrt(value)
    return 0.0


@dataclass(frozen=True)
class Lens:
    """
    宽透镜

    Attributes:
        b_minus: 过去端点
        b_plus: 未来端点
        radius: 欧氏球半径 S，None 表示不限制
    """

    b_minus: Coords
    b_plus: Coords
    radius: Optional[float] = None

    def __post_init__(self) -> None:
        if len(self.b_minus) != len(self.b_plus):
            raise ValueError(f"端点维数不一致: {len(self.b_minus)} 与 {len(self.b_plus)}")
        if self.radius is not None and self.radius <= 0:
            raise ValueError(f"球半径必须为正: {self.radius}")
        if wide_tau(self.b_minus, self.b_plus) <= 0:
            raise NotChronological(f"b₋ = {self.b_minus} 与 b₊ = {self.b_plus} 在 η⁺ 下不时序相关")

    @classmethod
    def symmetric(cls, omega: float, leg: float, dim: int = 2, radius: Optional[float] = None) -> "Lens":
        """
        原点处夹双曲角 omega 的对称端点

        [b₋, 0] 与 [0, b₊] 的 Minkowski 长度均为 leg，关于 ∂₁ 方向对称，
        因而 [b₋, b₊] 平行于 ∂₀。
        """
        if omega < 0 or leg <= 0:
            raise ValueError(f"需要 omega ≥ 0、leg > 0: omega={omega}, leg={leg}")
        if dim < 2:
            raise ValueError(f"维数至少为 2: {dim}")
        h, s = leg * math.cosh(omega / 2), leg * math.sinh(omega / 2)
        pad = (0.0,) * (dim - 2)
        return cls((-h, s) + pad, (h, s) + pad, radius)

    @property
    def R(self) -> float:
        return wide_tau(self.b_minus, self.b_plus)

    def contains(self, x: Sequence[float]) -> bool:
        if len(x) != len(self.b_minus):
            raise ValueError(f"点的维数 {len(x)} 与端点维数 {len(self.b_minus)} 不一致")
        if self.radius is not None and float(np.linalg.norm(x)) >= self.radius:
            return False
        third = self.R / 3.0
        return wide_tau(self.b_minus, x) > third and wide_tau(x, self.b_plus) > third

    def report(self, x: Sequence[float]) -> Dict[str, Any]:
        """判定结果与两侧的 τ^{η⁺}"""
        return {
            "b_minus": list(self.b_minus),
            "b_plus": list(self.b_plus),
            "radius": self.radius,
            "x": [float(c) for c in x],
            "R": self.R,
            "tau_from_b_minus": wide_tau(self.b_minus, x),
            "tau_to_b_plus": wide_tau(x, self.b_plus),
            "member": self.contains(x),
        }


def lens_membership(
    b_minus: Sequence[float],
    b_plus: Sequence[float],
    x: Sequence[float],
    radius: Optional[float] = None,
) -> bool:
    """
    x 是否属于宽透镜

    Raises:
        NotChronological: b₋ 与 b₊ 在 η⁺ 下不时序相关
    """
    return Lens(tuple(map(float, b_minus)), tuple(map(float, b_plus)), radius).contains(x)
