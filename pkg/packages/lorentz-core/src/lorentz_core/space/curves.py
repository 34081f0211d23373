"""
离散因果曲线

@author Ysf
@date 2026-10-16
"""

from typing import List

from ..model import METRIC_TOL
from .errors import NotCausal
from .types import CurveDirection, DiscreteCausalCurve, FiniteLorentzSpace, PointId


def _ordered(curve: DiscreteCausalCurve) -> List[PointId]:
    """按未来方向排列的点序列"""
    pts = list(curve.points)
    if curve.direction == CurveDirection.PAST:
        pts.reverse()
    return pts


def check_curve(space: FiniteLorentzSpace, curve: DiscreteCausalCurve) -> None:
    """
    检查曲线相邻点的因果关系

    Raises:
        NotCausal: 相邻点不满足 ≤（timelike 曲线为 ≪）
        UnknownPoint: 点不在空间中
    """
    rel = space.chron if curve.timelike else space.causal
    symbol = "≪" if curve.timelike else "≤"
    idx = space.indices(_ordered(curve))
    for a, b in zip(idx, idx[1:]):
        if not rel[a, b]:
            raise NotCausal(f"{space.points[a]} {symbol} {space.points[b]} 不成立")


def tau_length(space: FiniteLorentzSpace, curve: DiscreteCausalCurve) -> float:
    """
    离散曲线的 τ-长度：相邻点 τ 之和

    反向三角不等式下加细不会增大和，全细分即取到下确界。

    Raises:
        NotCausal: 曲线在空间中无效
    """
    check_curve(space, curve)
    idx = space.indices(_ordered(curve))
    return float(sum(space.tau[a, b] for a, b in zip(idx, idx[1:])))


def realizing_points(
    space: FiniteLorentzSpace, x: PointId, y: PointId, tol: float = METRIC_TOL
) -> List[PointId]:
    """J(x,y) 中满足 τ(x,w) + τ(w,y) ≥ τ(x,y) - tol 的点，即位于 τ-实现曲线上的样本点"""
    i, j = space.index(x), space.index(y)
    target = space.tau[i, j]
    out = []
    for pid in space.diamond(x, y):
        k = space.index(pid)
        if space.tau[i, k] + space.tau[k, j] >= target - tol:
            out.append(pid)
    return out
