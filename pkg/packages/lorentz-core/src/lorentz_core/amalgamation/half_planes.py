"""
沿竖直线或竖直带粘合的两个 Minkowski 半平面

X1 = {x ≤ w}，X2 = {x ≥ 0}，恒等映射粘合带 A = {0 ≤ x ≤ w}。
w = 0 时接缝为直线 x = 0。跨侧点对的 τ̃ 由线段与 x = 0 的交点解析给出。
点用图坐标 (t, x) 表示。

@author Ysf
@date 2026-10-16
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from ..model import MEMBERSHIP_TOL, ModelPoint, get_model
from ..space import FiniteLorentzSpace, minkowski_grid, restrict_space
from .types import DeclaredProperties, GluingSpec

logger = logging.getLogger(__name__)

Coord = Tuple[float, float]


def _flat_tau(p: Coord, q: Coord) -> float:
    dt, dx = q[0] - p[0], q[1] - p[1]
    value = dt * dt - dx * dx
    return math.sqrt(value) if dt > 0 and value > MEMBERSHIP_TOL else 0.0


@dataclass(frozen=True)
class GluedHalfPlanes:
    """
    粘合半平面

    Attributes:
        strip_width: 粘合带宽度 w ≥ 0
    """

    strip_width: float = 0.0

    def __post_init__(self) -> None:
        if self.strip_width < 0:
            raise ValueError(f"粘合带宽度必须非负: {self.strip_width}")

    def sheet(self, p: Coord) -> int:
        """点所在的部分：1 表示只在 X1，2 表示只在 X2，0 表示粘合带"""
        if p[1] < 0:
            return 1
        if p[1] > self.strip_width:
            return 2
        return 0

    def seam_point(self, p: Coord, q: Coord) -> Optional[Coord]:
        """跨侧时线段 [p,q] 与 x = 0 的交点，同侧返回 None"""
        sp, sq = self.sheet(p), self.sheet(q)
        if sp == 0 or sq == 0 or sp == sq:
            return None
        s = (0.0 - p[1]) / (q[1] - p[1])
        return (p[0] + s * (q[0] - p[0]), 0.0)

    def tau(self, p: Coord, q: Coord) -> float:
        """
        τ̃(p, q)

        同侧（或涉及粘合带）时为 Minkowski τ；跨侧时为 τ(p, a*) + τ(a*, q)，a* 为接缝交点。
        """
        a = self.seam_point(p, q)
        if a is None:
            return _flat_tau(p, q)
        if _flat_tau(p, q) <= 0:
            return 0.0
        return _flat_tau(p, a) + _flat_tau(a, q)

    def short_form_tau(self, p: Coord, q: Coord) -> Tuple[float, Optional[Coord]]:
        """短形式：返回 (τ̃, 取到上确界的接缝点)；非时序相关时为 (0, None)"""
        a = self.seam_point(p, q)
        if a is None or _flat_tau(p, q) <= 0:
            return (self.tau(p, q), None)
        return (self.tau(p, q), a)

    def segment_point(self, p: Coord, q: Coord, s: float) -> Coord:
        """
        τ-实现曲线上的点：经接缝交点的折线，在平坦情形即直线段
        """
        if not 0.0 <= s <= 1.0:
            raise ValueError(f"参数 s 必须在 [0,1] 内: {s}")
        a = self.seam_point(p, q)
        if a is None:
            return (p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1]))
        first = _flat_tau(p, a)
        total = first + _flat_tau(a, q)
        cut = first / total if total > 0 else 0.5
        if s <= cut:
            r = s / cut if cut > 0 else 0.0
            return (p[0] + r * (a[0] - p[0]), p[1] + r * (a[1] - p[1]))
        r = (s - cut) / (1.0 - cut)
        return (a[0] + r * (q[0] - a[0]), a[1] + r * (q[1] - a[1]))

    def model_point(self, p: Coord) -> ModelPoint:
        return get_model(0.0).chart(p[0], p[1])

    def to_spec(
        self,
        t_range: Tuple[float, float],
        x_range: Tuple[float, float],
        shape: Tuple[int, int],
    ) -> GluingSpec:
        """
        在矩形网格上采样为有限粘合规格

        X1 取 x ≤ w 的网格点，X2 取 x ≥ 0 的网格点，带内的点按坐标一一粘合。
        """
        grid = minkowski_grid(t_range, x_range, shape)
        x1 = _side(grid, lambda x: x <= self.strip_width + MEMBERSHIP_TOL)
        x2 = _side(grid, lambda x: x >= -MEMBERSHIP_TOL)
        in_strip = [
            p for p in x1.points if -MEMBERSHIP_TOL <= x1.coord_of(p).ambient_coords[1] <= self.strip_width + MEMBERSHIP_TOL
        ]
        declared = DeclaredProperties(
            tau_preserving=True, leq_preserving=True, ll_preserving=True, signed_distance_preserving=True
        )
        logger.debug("半平面采样: |X1|=%d, |X2|=%d, 粘合 %d 点", x1.size, x2.size, len(in_strip))
        return GluingSpec(x1, x2, tuple((p, p) for p in in_strip), declared)


def _side(grid: FiniteLorentzSpace, keep: Callable[[float], bool]) -> FiniteLorentzSpace:
    xs = np.array([grid.coord_of(p).ambient_coords[1] for p in grid.points])
    chosen = [grid.points[k] for k in range(grid.size) if keep(float(xs[k]))]
    return restrict_space(grid, chosen)
