"""
比较邻域

curvature_verdict 在区域上取三角形与边上的点。区域需要提供 τ、
τ-实现曲线上给定 τ-偏移的点，以及随机采点。

- ModelRegion: 模型空间图坐标矩形，边为测地线
- FiniteRegion: 有限空间，边由 τ-实现点组成的离散曲线
- QuotientRegion: 商空间，跨接缝的边以见证链为准
- HalfPlaneRegion: 粘合半平面，边为经接缝交点的折线

@author Ysf
@date 2026-10-16
"""

import itertools
import logging
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..amalgamation import Chain, GluedHalfPlanes, QuotientSpace
from ..model import METRIC_TOL, ModelSpace, SideLengths, size_bounds_check
from ..space import CurveDirection, DiscreteCausalCurve, FiniteLorentzSpace, NotCausal, realizing_points, tau_length
from .errors import ConfigInfeasible, NoRealizingCurve
from .types import RegionPoint, TimelikeTriangle

logger = logging.getLogger(__name__)

Box = Tuple[Tuple[float, float], Tuple[float, float]]


class Region(ABC):
    """比较邻域基类"""

    name: str = "region"

    @abstractmethod
    def tau(self, a: RegionPoint, b: RegionPoint) -> float:
        ...

    @abstractmethod
    def side_point(self, a: RegionPoint, b: RegionPoint, s: float) -> Tuple[RegionPoint, float]:
        """
        从 a 到 b 的 τ-实现曲线上 τ-偏移约为 s 的点

        Returns:
            (点, 实际偏移)：连续区域中实际偏移等于 s，离散区域取最近的样本点

        Raises:
            NoRealizingCurve: a、b 之间没有 τ-实现曲线
        """
        ...

    @abstractmethod
    def sample_point(self, rng: np.random.Generator) -> RegionPoint:
        ...

    def triangle(self, x: RegionPoint, y: RegionPoint, z: RegionPoint) -> TimelikeTriangle:
        """
        以区域中的 τ 构造类时三角形

        Raises:
            ConfigInfeasible: 顶点不满足 x ≪ y ≪ z
        """
        a, b, c = self.tau(x, y), self.tau(y, z), self.tau(x, z)
        if a <= 0 or b <= 0 or c <= 0:
            raise ConfigInfeasible(f"顶点不构成类时三角形: τ = ({a}, {b}, {c})")
        return TimelikeTriangle(x, y, z, SideLengths(a, b, c))

    def sample_triangles(
        self, rng: np.random.Generator, n: int, K: float, max_attempts: Optional[int] = None
    ) -> List[TimelikeTriangle]:
        """
        随机取三点并排成 x ≪ y ≪ z，保留满足 M_K 尺寸界的三角形
        """
        attempts = max_attempts if max_attempts is not None else 200 * max(n, 1)
        out: List[TimelikeTriangle] = []
        for _ in range(attempts):
            if len(out) >= n:
                break
            pts = [self.sample_point(rng) for _ in range(3)]
            for x, y, z in itertools.permutations(pts):
                a, b, c = self.tau(x, y), self.tau(y, z), self.tau(x, z)
                if a > 0 and b > 0 and c > 0:
                    sides = SideLengths(a, b, c)
                    if size_bounds_check(K, sides):
                        out.append(TimelikeTriangle(x, y, z, sides))
                    break
        if len(out) < n:
            logger.warning("%s: %d 次尝试只得到 %d/%d 个类时三角形", self.name, attempts, len(out), n)
        return out


class ModelRegion(Region):
    """模型空间中的图坐标矩形 box = ((t0, t1), (s0, s1))"""

    name = "model"

    def __init__(self, model: ModelSpace, box: Box = ((0.0, 1.0), (-0.5, 0.5))):
        self.model = model
        self.box = box

    def tau(self, a: RegionPoint, b: RegionPoint) -> float:
        return self.model.tau(a, b)

    def side_point(self, a: RegionPoint, b: RegionPoint, s: float) -> Tuple[RegionPoint, float]:
        length = self.model.tau(a, b)
        if length <= 0:
            raise NoRealizingCurve(f"{a} 与 {b} 不是时序相关的")
        return self.model.geodesic_point(a, b, min(max(s / length, 0.0), 1.0)), s

    def sample_point(self, rng: np.random.Generator) -> RegionPoint:
        (t0, t1), (s0, s1) = self.box
        return self.model.chart(float(rng.uniform(t0, t1)), float(rng.uniform(s0, s1)))


class FiniteRegion(Region):
    """
    有限空间

    (a, b) 边上的点取 τ-实现点，按到 a 的 τ 排序后必须构成 τ-长度为 τ(a,b) 的因果链。
    """

    name = "finite"

    def __init__(self, space: FiniteLorentzSpace, tol: float = METRIC_TOL):
        self.space = space
        self.tol = tol
        self._sides: Dict[Tuple[RegionPoint, RegionPoint], List[Tuple[float, RegionPoint]]] = {}

    def tau(self, a: RegionPoint, b: RegionPoint) -> float:
        return self.space.tau_of(a, b)

    def side(self, a: RegionPoint, b: RegionPoint) -> List[Tuple[float, RegionPoint]]:
        """(a, b) 边上的 (τ-偏移, 点) 序列"""
        key = (a, b)
        if key not in self._sides:
            self._sides[key] = self._build_side(a, b)
        return self._sides[key]

    def _build_side(self, a: RegionPoint, b: RegionPoint) -> List[Tuple[float, RegionPoint]]:
        total = self.tau(a, b)
        if total <= 0:
            raise NoRealizingCurve(f"{a} 与 {b} 不是时序相关的")
        points = sorted(realizing_points(self.space, a, b, self.tol), key=lambda w: self.tau(a, w))
        try:
            length = tau_length(self.space, DiscreteCausalCurve(tuple(points), direction=CurveDirection.FUTURE))
        except NotCausal as e:
            raise NoRealizingCurve(f"{a} → {b} 的实现点不构成因果曲线: {e}") from e
        if abs(length - total) > self.tol * (1.0 + total):
            raise NoRealizingCurve(f"{a} → {b} 的实现曲线长度 {length} ≠ τ = {total}")
        return [(self.tau(a, w), w) for w in points]

    def side_point(self, a: RegionPoint, b: RegionPoint, s: float) -> Tuple[RegionPoint, float]:
        side = self.side(a, b)
        offset, point = min(side, key=lambda item: abs(item[0] - s))
        return point, offset

    def sample_point(self, rng: np.random.Generator) -> RegionPoint:
        return self.space.points[int(rng.integers(self.space.size))]


class QuotientRegion(FiniteRegion):
    """商空间：边必须有取到 τ̃ 的见证链，点为类标签"""

    name = "quotient"

    def __init__(self, quotient: QuotientSpace, tol: float = METRIC_TOL):
        super().__init__(quotient.as_space(), tol)
        self.quotient = quotient

    def _build_side(self, a: RegionPoint, b: RegionPoint) -> List[Tuple[float, RegionPoint]]:
        witness = self.quotient.witness(a, b)
        if not isinstance(witness, Chain):
            raise NoRealizingCurve(f"τ̃({a},{b}) 没有有限的见证链")
        return super()._build_side(a, b)


class HalfPlaneRegion(Region):
    """粘合半平面中的图坐标矩形，点为 (t, x)"""

    name = "half-planes"

    def __init__(self, glued: GluedHalfPlanes, box: Box = ((0.0, 2.0), (-1.0, 1.0))):
        self.glued = glued
        self.box = box

    def tau(self, a: RegionPoint, b: RegionPoint) -> float:
        return self.glued.tau(a, b)

    def side_point(self, a: RegionPoint, b: RegionPoint, s: float) -> Tuple[RegionPoint, float]:
        length = self.glued.tau(a, b)
        if length <= 0:
            raise NoRealizingCurve(f"{a} 与 {b} 不是时序相关的")
        return self.glued.segment_point(a, b, min(max(s / length, 0.0), 1.0)), s

    def sample_point(self, rng: np.random.Generator) -> RegionPoint:
        (t0, t1), (s0, s1) = self.box
        return (float(rng.uniform(t0, t1)), float(rng.uniform(s0, s1)))
