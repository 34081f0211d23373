"""
比较三角形与比较点

@author Ysf
@date 2026-10-16
"""

import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..model import METRIC_TOL, ModelPoint, get_model, realize_triangle
from .errors import OffSide
from .regions import Region
from .types import Bound, ModelTriangle, PairRecord, RegionPoint, Side, TimelikeTriangle, TriangleReport

logger = logging.getLogger(__name__)

# 9 个分层：有序边对
STRATA: Tuple[Tuple[Side, Side], ...] = tuple((s, t) for s in Side for t in Side)


def comparison_triangle(K: float, triangle: TimelikeTriangle, tol: float = METRIC_TOL) -> ModelTriangle:
    """
    M_K 中的比较三角形（规范放置）

    Raises:
        SizeBoundViolated: 超出尺寸界
        ReverseTriangleViolated: 边长违反反向三角不等式
    """
    return realize_triangle(K, triangle.sides, tol)


def comparison_point(
    K: float, comparison: ModelTriangle, side: Side, s: float, tol: float = METRIC_TOL
) -> ModelPoint:
    """
    比较三角形边上到过去端点 τ-距离为 s 的点

    Raises:
        OffSide: s 不在 [0, 边长] 内
    """
    model = get_model(K)
    i, j = side.ends
    past, future = comparison[i], comparison[j]
    length = model.tau(past, future)
    if s < -tol or s > length + tol:
        raise OffSide(f"边 {side.value} 的长度为 {length}，参数 s = {s} 越界")
    if length <= 0:
        return past
    return model.geodesic_point(past, future, min(max(s / length, 0.0), 1.0))


def _orient(
    region: Region,
    model_tau: Callable[[ModelPoint, ModelPoint], float],
    a: RegionPoint,
    b: RegionPoint,
    a_bar: ModelPoint,
    b_bar: ModelPoint,
) -> Optional[Tuple[bool, float, float]]:
    """选择点对的时间方向，返回 (是否交换, τ, τ̄)；两个方向都不相关时返回 None"""
    forward = (region.tau(a, b), model_tau(a_bar, b_bar))
    backward = (region.tau(b, a), model_tau(b_bar, a_bar))
    if max(forward) <= 0 and max(backward) <= 0:
        return None
    if max(forward) >= max(backward):
        return False, forward[0], forward[1]
    return True, backward[0], backward[1]


def sample_offsets(rng: np.random.Generator, triangle: TimelikeTriangle, n_pairs: int) -> List[Tuple[Side, Side, float, float]]:
    """按 9 个分层轮流取点对，各边上的 τ-参数均匀分布"""
    out = []
    for k in range(n_pairs):
        s, t = STRATA[k % len(STRATA)]
        out.append((s, t, float(rng.uniform(0.0, triangle.length(s))), float(rng.uniform(0.0, triangle.length(t)))))
    return out


def evaluate_triangle(
    region: Region,
    K: float,
    triangle: TimelikeTriangle,
    n_pairs: int,
    rng: np.random.Generator,
    bound: Bound = Bound.UPPER,
    tol: float = METRIC_TOL,
) -> TriangleReport:
    """
    单个三角形上的比较：在边上取点对，与比较三角形上的对应点比较 τ

    Raises:
        SizeBoundViolated / ReverseTriangleViolated: 比较三角形不存在
        NoRealizingCurve: 区域中某条边没有 τ-实现曲线
    """
    model = get_model(K)
    bar = comparison_triangle(K, triangle, tol)
    report = TriangleReport(K=K, bound=bound, tol=tol, triangles=[triangle], comparison=[bar])

    for s, t, u, v in sample_offsets(rng, triangle, n_pairs):
        a, ua = region.side_point(*triangle.endpoints(s), u)
        b, vb = region.side_point(*triangle.endpoints(t), v)
        a_bar = comparison_point(K, bar, s, ua, tol)
        b_bar = comparison_point(K, bar, t, vb, tol)
        oriented = _orient(region, model.tau, a, b, a_bar, b_bar)
        if oriented is None:
            report.skipped += 1
            continue
        swap, tau, tau_bar = oriented
        if swap:
            report.pairs.append(PairRecord(b, a, (t, s), (vb, ua), tau, tau_bar))
        else:
            report.pairs.append(PairRecord(a, b, (s, t), (ua, vb), tau, tau_bar))
    return report
