"""
单调性探针

铰链引理单调性、铰链行为探针，以及离散 Sturm 型比较检查。

@author Ysf
@date 2026-10-16
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union

import numpy as np

from .base import METRIC_TOL
from .errors import GridTooCoarse, SturmNotApplicable, UnrealizableTriple
from .factory import get_model
from .triangles import realize_signed_triangle
from .types import SignedValue

logger = logging.getLogger(__name__)

SignedLike = Union[SignedValue, float]


@dataclass
class HingeMonotonicityReport:
    """铰链引理探针报告（网格按 |pr|± 升序）"""

    K: float
    pq: float
    qr: float
    grid: List[float] = field(default_factory=list)
    angle_pqr: List[float] = field(default_factory=list)
    angle_qpr: List[float] = field(default_factory=list)
    angle_qrp: List[float] = field(default_factory=list)
    pqr_decreasing: bool = True
    qpr_increasing: bool = True
    qrp_increasing: bool = True

    @property
    def holds(self) -> bool:
        return self.pqr_decreasing and self.qpr_increasing and self.qrp_increasing


@dataclass
class HingeBehaviourReport:
    """铰链行为探针报告：固定短边与夹角，延长最长边时另一短边的变化"""

    K: float
    short_side: float
    omega: float
    long_sides: List[float] = field(default_factory=list)
    other_sides: List[float] = field(default_factory=list)
    non_decreasing: bool = True


def _value(v: SignedLike) -> float:
    return v.value if isinstance(v, SignedValue) else float(v)


def _weakly_monotone(values: Sequence[float], increasing: bool, tol: float) -> bool:
    diffs = np.diff(np.asarray(values, dtype=float))
    if increasing:
        return bool(np.all(diffs >= -tol))
    return bool(np.all(diffs <= tol))


def hinge_monotonicity_probe(
    K: float,
    fixed_sides: Tuple[SignedLike, SignedLike],
    third_side_grid: Sequence[SignedLike],
    tol: float = METRIC_TOL,
) -> HingeMonotonicityReport:
    """
    铰链引理探针：沿 |pr|± 网格计算三个顶点处的非规范化角

    ∠pqr 应随 |pr|± 递减，∠qpr、∠qrp 应随 |pr|± 递增。

    Args:
        K: 曲率
        fixed_sides: (|pq|±, |qr|±)
        third_side_grid: |pr|± 取值

    Returns:
        HingeMonotonicityReport

    Raises:
        UnrealizableTriple: 网格中某三元组无法实现
    """
    model = get_model(K)
    pq, qr = (_value(v) for v in fixed_sides)
    grid = sorted(_value(v) for v in third_side_grid)
    report = HingeMonotonicityReport(K=K, pq=pq, qr=qr, grid=list(grid))

    for pr in grid:
        p, q, r = realize_signed_triangle(K, pq, qr, pr)
        report.angle_pqr.append(model.nonnormalized_angle(q, p, r))
        report.angle_qpr.append(model.nonnormalized_angle(p, q, r))
        report.angle_qrp.append(model.nonnormalized_angle(r, q, p))

    report.pqr_decreasing = _weakly_monotone(report.angle_pqr, increasing=False, tol=tol)
    report.qpr_increasing = _weakly_monotone(report.angle_qpr, increasing=True, tol=tol)
    report.qrp_increasing = _weakly_monotone(report.angle_qrp, increasing=True, tol=tol)
    logger.debug("铰链探针 K=%s: %d 个网格点, 成立=%s", K, len(grid), report.holds)
    return report


def hinge_behaviour_probe(
    K: float,
    short_side: float,
    omega: float,
    long_side_grid: Sequence[float],
    tol: float = METRIC_TOL,
) -> HingeBehaviourReport:
    """
    铰链行为：顶点 z 处两条过去方向的腿 [z,x]、[z,y] 夹角为 omega，
    固定 τ(y,z) = short_side，沿网格延长 τ(x,z)，记录 τ(x,y)

    Raises:
        UnrealizableTriple: 某网格值下 x ≪ y 不成立
    """
    model = get_model(K)
    z = model.origin()
    leg_long = model.boost(z, omega / 2.0, future=False)
    leg_short = model.boost(z, -omega / 2.0, future=False)
    y = model.exp(z, short_side * leg_short)

    report = HingeBehaviourReport(K=K, short_side=short_side, omega=omega)
    for c in sorted(float(v) for v in long_side_grid):
        x = model.exp(z, c * leg_long)
        a = model.tau(x, y)
        if a <= 0:
            raise UnrealizableTriple(
                f"τ(x,z)={c} 时 x 与 y 非时序相关，不构成类时三角形"
            )
        report.long_sides.append(c)
        report.other_sides.append(a)
    report.non_decreasing = _weakly_monotone(report.other_sides, increasing=True, tol=tol)
    return report


def sturm_check(k: float, samples: Sequence[Tuple[float, float]], tol: float = 1e-6) -> bool:
    """
    离散 Sturm 型比较：f'' + kf <= 0 且端点非负 ⇒ f >= 0

    Args:
        k: 比较常数
        samples: 均匀网格 [0, L] 上的 (t, f(t))
        tol: 容差

    Returns:
        bool: 结论 f >= -tol 是否成立

    Raises:
        GridTooCoarse: 样本少于 8 个
        SturmNotApplicable: 网格非均匀、L >= π/√k、二阶差分条件或端点条件不成立
    """
    if len(samples) < 8:
        raise GridTooCoarse(f"至少需要 8 个样本，实际 {len(samples)}")
    pts = sorted((float(t), float(f)) for t, f in samples)
    t = np.array([p[0] for p in pts])
    f = np.array([p[1] for p in pts])
    L = float(t[-1] - t[0])
    h = np.diff(t)
    if L <= 0 or np.max(np.abs(h - h.mean())) > 1e-9 * max(1.0, L):
        raise SturmNotApplicable("采样网格必须是均匀的")
    if k > 0 and L >= math.pi / math.sqrt(k):
        raise SturmNotApplicable(f"区间长度 {L} 不满足 L < π/√k = {math.pi / math.sqrt(k)}")

    step = float(h.mean())
    second = (f[:-2] - 2.0 * f[1:-1] + f[2:]) / (step * step)
    defect = second + k * f[1:-1]
    worst = float(np.max(defect))
    if worst > tol:
        raise SturmNotApplicable(f"f'' + kf 的最大值 {worst:.3e} > {tol}")
    if f[0] < -tol or f[-1] < -tol:
        raise SturmNotApplicable(f"端点条件失败: f(0)={f[0]:.3e}, f(L)={f[-1]:.3e}")
    return bool(np.min(f) >= -tol)
