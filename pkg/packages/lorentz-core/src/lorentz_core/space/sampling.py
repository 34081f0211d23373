"""
模型空间采样

把 M_K 中的点集封装为带坐标标签的 FiniteLorentzSpace。
τ、≪、≤ 由模型闭式公式给出，d 取环境坐标的欧氏距离。

@author Ysf
@date 2026-10-16
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from ..model import ModelPoint, ModelSpace, get_model
from .types import FiniteLorentzSpace

logger = logging.getLogger(__name__)


def sample_model_points(
    model: ModelSpace,
    points: Sequence[ModelPoint],
    ids: Optional[Sequence[str]] = None,
) -> FiniteLorentzSpace:
    """
    由模型点构造有限空间

    Args:
        model: 模型空间
        points: 模型点（会逐一校验）
        ids: 点标识，默认 p0, p1, ...

    Returns:
        FiniteLorentzSpace: 带坐标标签的空间
    """
    for p in points:
        model.check(p)
    names = tuple(ids) if ids is not None else tuple(f"p{i}" for i in range(len(points)))
    if not points:
        return FiniteLorentzSpace.empty()
    coords = np.array([p.ambient_coords for p in points], dtype=float)
    tau, chron, causal = model.pairwise(coords)
    diff = coords[:, None, :] - coords[None, :, :]
    d = np.linalg.norm(diff, axis=-1)
    return FiniteLorentzSpace(
        points=names,
        d=d,
        chron=chron,
        causal=causal,
        tau=tau,
        coords=tuple(points),
        model_K=model.curvature,
    )


def minkowski_grid(
    t_range: Tuple[float, float],
    x_range: Tuple[float, float],
    shape: Tuple[int, int],
    prefix: str = "g",
) -> FiniteLorentzSpace:
    """
    Minkowski 平面矩形网格

    点标识为 {prefix}{i}_{j}，i 为时间下标，j 为空间下标。
    """
    model = get_model(0.0)
    ts = np.linspace(t_range[0], t_range[1], shape[0])
    xs = np.linspace(x_range[0], x_range[1], shape[1])
    pts, ids = [], []
    for i, t in enumerate(ts):
        for j, x in enumerate(xs):
            pts.append(model.chart(float(t), float(x)))
            ids.append(f"{prefix}{i}_{j}")
    return sample_model_points(model, pts, ids)


def diamond_sample(
    model: ModelSpace,
    n: int,
    seed: int,
    height: float = 2.0,
    include_tips: bool = True,
) -> FiniteLorentzSpace:
    """
    因果菱形 J(o, time_axis(height)) 中的随机样本

    在图坐标中按类光坐标 (u, v) ∈ [0, height]² 均匀采样，
    t = (u+v)/2，s = (u-v)/2。

    Args:
        model: 模型空间
        n: 点数（含两个顶点）
        seed: 随机种子
        height: 菱形高度
        include_tips: 是否包含两个顶点
    """
    rng = np.random.default_rng(seed)
    pts = []
    if include_tips:
        pts.extend([model.chart(0.0, 0.0), model.chart(height, 0.0)])
    while len(pts) < n:
        u, v = rng.uniform(0.0, height, size=2)
        pts.append(model.chart(float(u + v) / 2.0, float(u - v) / 2.0))
    logger.debug("菱形采样 %s: %d 点, 种子 %d", model, n, seed)
    return sample_model_points(model, pts[:n])


def line_sample(
    model: ModelSpace,
    start: Tuple[float, float],
    end: Tuple[float, float],
    n: int,
    prefix: str = "l",
) -> FiniteLorentzSpace:
    """图坐标中 start 到 end 线段上的 n 个等距点"""
    ts = np.linspace(start[0], end[0], n)
    ss = np.linspace(start[1], end[1], n)
    pts = [model.chart(float(t), float(s)) for t, s in zip(ts, ss)]
    return sample_model_points(model, pts, [f"{prefix}{i}" for i in range(n)])


def geodesic_midpoints(model: ModelSpace, p: ModelPoint, q: ModelPoint, depth: int) -> list[ModelPoint]:
    """从 p 到 q 的测地线二分加细，返回 2^depth + 1 个点"""
    fractions = np.linspace(0.0, 1.0, 2**depth + 1)
    return [model.geodesic_point(p, q, float(s)) for s in fractions]
