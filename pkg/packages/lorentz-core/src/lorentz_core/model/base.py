"""
模型空间基类

定义常曲率二维 Lorentz 模型空间 M_K 的统一接口。子类只需实现
环境内积、指数/对数映射、时间定向与三角形放置，其余运算（时间分离、
带符号距离、角度、测地线插值）在基类中统一完成。

@author Ysf
@date 2026-10-16
"""

import logging
import math
from abc import ABC, abstractmethod
from typing import Sequence, Tuple

import numpy as np

from .errors import CoordinateOffModel, LegNotTimelike, NoUniqueGeodesic
from .types import Hinge, ModelPoint, SignedValue

logger = logging.getLogger(__name__)

# 容差阶梯
MEMBERSHIP_TOL = 1e-12
METRIC_TOL = 1e-9
COMPOSED_TOL = 1e-8
PIPELINE_TOL = 1e-7


class ModelSpace(ABC):
    """
    常曲率 Lorentz 模型空间 M_K 基类

    所有运算都是不可变输入上的纯函数，可在多线程中并发调用。
    """

    # 环境空间维数
    ambient_dim: int = 2

    def __init__(self, curvature: float):
        self.curvature = float(curvature)
        # 缩放半径 R = 1/√|K|，K=0 时取 1
        self.radius = 1.0 if self.curvature == 0 else 1.0 / math.sqrt(abs(self.curvature))

    # ==================== 子类实现 ====================

    @property
    @abstractmethod
    def metric(self) -> np.ndarray:
        """环境空间二次型对角矩阵"""
        ...

    @abstractmethod
    def constraint_residual(self, coords: np.ndarray) -> float:
        """超二次曲面约束残差（单位化后）"""
        ...

    @abstractmethod
    def origin(self) -> ModelPoint:
        """规范原点"""
        ...

    @abstractmethod
    def time_axis(self, s: float) -> ModelPoint:
        """从原点出发的未来类时单位速度测地线上固有时 s 处的点"""
        ...

    @abstractmethod
    def log(self, p: ModelPoint, q: ModelPoint) -> np.ndarray:
        """
        对数映射：连接 p 到 q 的测地线在 p 处的初速度

        Raises:
            NoUniqueGeodesic: 不存在唯一连接测地线
        """
        ...

    @abstractmethod
    def exp(self, p: ModelPoint, v: np.ndarray) -> ModelPoint:
        """指数映射"""
        ...

    @abstractmethod
    def is_future(self, p: ModelPoint, v: np.ndarray) -> bool:
        """p 处的因果切向量 v 是否指向未来"""
        ...

    @abstractmethod
    def tangent_frame(self, p: ModelPoint) -> Tuple[np.ndarray, np.ndarray]:
        """p 处的正交标架 (未来类时单位向量 e0, 类空单位向量 n)"""
        ...

    @abstractmethod
    def normal(self, p: ModelPoint, e: np.ndarray) -> np.ndarray:
        """p 处与非类光切向量 e 正交的单位切向量"""
        ...

    @abstractmethod
    def orientation(self, a: ModelPoint, b: ModelPoint, c: ModelPoint) -> float:
        """
        侧向判别：符号表示 c 位于过 a、b 的测地线的哪一侧，0 表示共线
        """
        ...

    @abstractmethod
    def pairwise(self, coords: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        批量计算点集两两之间的 (tau, chron, causal) 矩阵

        Args:
            coords: 形状 (n, ambient_dim) 的坐标数组

        Returns:
            (tau, chron, causal): tau[i, j] = τ(p_i, p_j)
        """
        ...

    # ==================== 通用运算 ====================

    def inner(self, u: np.ndarray, v: np.ndarray) -> float:
        """环境二次型 ⟨u, v⟩"""
        return float(np.asarray(u) @ self.metric @ np.asarray(v))

    def point(self, *coords: float) -> ModelPoint:
        """
        构造并校验模型点

        Raises:
            CoordinateOffModel: 坐标不满足约束
        """
        p = ModelPoint(tuple(float(c) for c in coords), self.curvature)
        self.check(p)
        return p

    def check(self, p: ModelPoint) -> None:
        """校验模型点"""
        if len(p.ambient_coords) != self.ambient_dim:
            raise CoordinateOffModel(
                f"坐标维数错误: 期望 {self.ambient_dim}，实际 {len(p.ambient_coords)}"
            )
        if not math.isclose(p.curvature, self.curvature, rel_tol=0.0, abs_tol=1e-15):
            raise CoordinateOffModel(
                f"曲率不匹配: 点属于 K={p.curvature}，模型为 K={self.curvature}"
            )
        residual = self.constraint_residual(p.vec)
        if residual > MEMBERSHIP_TOL:
            raise CoordinateOffModel(
                f"坐标 {p.ambient_coords} 偏离模型超二次曲面 (残差 {residual:.3e})"
            )

    def project(self, coords: np.ndarray) -> ModelPoint:
        """数值漂移后将坐标投影回模型"""
        return ModelPoint.from_array(coords, self.curvature)

    def _null_tol(self) -> float:
        return MEMBERSHIP_TOL * self.radius * self.radius

    def signed_distance(self, p: ModelPoint, q: ModelPoint) -> SignedValue:
        """
        带符号距离 |pq|± = |γ'_pq(0)|±

        Raises:
            NoUniqueGeodesic: 不存在唯一连接测地线
        """
        v = self.log(p, q)
        n = self.inner(v, v)
        if abs(n) <= self._null_tol():
            return SignedValue(0.0)
        return SignedValue(math.copysign(math.sqrt(abs(n)), n))

    def tau(self, p: ModelPoint, q: ModelPoint) -> float:
        """时间分离 τ(p, q)：p ≪ q 时为正，否则为 0"""
        try:
            v = self.log(p, q)
        except NoUniqueGeodesic:
            logger.debug("tau: %s 与 %s 无唯一测地线，按非时序相关处理", p, q)
            return 0.0
        n = self.inner(v, v)
        if n < -self._null_tol() and self.is_future(p, v):
            return math.sqrt(-n)
        return 0.0

    def chron(self, p: ModelPoint, q: ModelPoint) -> bool:
        return self.tau(p, q) > 0

    def causal(self, p: ModelPoint, q: ModelPoint) -> bool:
        """p ≤ q"""
        try:
            v = self.log(p, q)
        except NoUniqueGeodesic:
            return False
        if float(np.max(np.abs(v))) <= MEMBERSHIP_TOL * self.radius:
            return True
        n = self.inner(v, v)
        return n <= self._null_tol() and self.is_future(p, v)

    def nonnormalized_angle(self, p: ModelPoint, q: ModelPoint, r: ModelPoint) -> float:
        """非规范化角 ∠qpr = g_p(v, w)"""
        return self.inner(self.log(p, q), self.log(p, r))

    def hyperbolic_angle(self, p: ModelPoint, q: ModelPoint, r: ModelPoint) -> float:
        """
        双曲角 arcosh(|g_p(v,w)| / (|v||w|))

        Raises:
            LegNotTimelike: 任一腿非类时
        """
        v = self.log(p, q)
        w = self.log(p, r)
        nv = self.inner(v, v)
        nw = self.inner(w, w)
        if nv >= -self._null_tol() or nw >= -self._null_tol():
            raise LegNotTimelike(f"顶点 {p.ambient_coords} 处的腿不是类时的")
        ratio = abs(self.inner(v, w)) / math.sqrt(nv * nw)
        return math.acosh(max(1.0, ratio))

    def hinge(self, p: ModelPoint, q: ModelPoint, r: ModelPoint) -> Hinge:
        """构造 p 处由 [p,q]、[p,r] 组成的铰链"""
        leg_a = self.signed_distance(p, q)
        leg_b = self.signed_distance(p, r)
        angle = None
        if leg_a.is_timelike and leg_b.is_timelike:
            angle = self.hyperbolic_angle(p, q, r)
        return Hinge(
            vertex=p,
            leg_a_signed=leg_a,
            leg_b_signed=leg_b,
            nn_angle=self.nonnormalized_angle(p, q, r),
            angle=angle,
        )

    def geodesic_point(self, p: ModelPoint, q: ModelPoint, s: float) -> ModelPoint:
        """
        连接测地线 γ_pq:[0,1] 上参数 s 处的点

        Raises:
            NoUniqueGeodesic: 不存在唯一连接测地线
        """
        if s == 0.0:
            return p
        if s == 1.0:
            return q
        return self.exp(p, s * self.log(p, q))

    def chart(self, t: float, s: float) -> ModelPoint:
        """法坐标图：exp_o(t·e0 + s·n)"""
        o = self.origin()
        e0, n = self.tangent_frame(o)
        return self.exp(o, t * e0 + s * n)

    def boost(self, p: ModelPoint, theta: float, future: bool = True) -> np.ndarray:
        """p 处与 e0 夹双曲角 theta 的单位类时切向量"""
        e0, n = self.tangent_frame(p)
        v = math.cosh(theta) * e0 + math.sinh(theta) * n
        return v if future else -v

    def unit(self, v: np.ndarray) -> np.ndarray:
        """按 |⟨v,v⟩| 归一化"""
        n = self.inner(v, v)
        if abs(n) <= self._null_tol():
            raise NoUniqueGeodesic("类光向量无法归一化")
        return np.asarray(v, dtype=float) / math.sqrt(abs(n))

    def points_from_array(self, coords: Sequence[Sequence[float]]) -> list[ModelPoint]:
        return [ModelPoint.from_array(np.asarray(c, dtype=float), self.curvature) for c in coords]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(K={self.curvature})"
