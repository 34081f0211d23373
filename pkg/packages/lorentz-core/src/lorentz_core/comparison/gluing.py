"""
粘合引理

大三角形 Δ(x,y,z) 在最长边上取分割点 p，得到子三角形 Δ(x,p,y) 与 Δ(p,y,z)。
两个子三角形满足上曲率界时，检查大三角形是否也满足。

比较构型：子三角形的比较三角形沿 [p̄,ȳ] 粘合成四边形 x̄p̄z̄ȳ，拉直 x̄-p̄-z̄
后得到大三角形的比较三角形 (x̄',ȳ',z̄')。

@author Ysf
@date 2026-10-16
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import brentq

from ..model import (
    METRIC_TOL,
    PIPELINE_TOL,
    ModelPoint,
    NoUniqueGeodesic,
    ReverseTriangleViolated,
    SideLengths,
    SignedValue,
    SizeBoundViolated,
    UnrealizableTriple,
    get_model,
    realize_adjacent_vertex,
    realize_signed_triangle,
    realize_triangle,
)
from .alexandrov import AlexandrovConfig, Constellation, Intersection
from .errors import ConfigInfeasible, ParameterOutOfRange, SideMismatch, SubtriangleDegenerate
from .regions import ModelRegion, Region
from .triangles import STRATA, _orient, sample_offsets
from .types import Bound, PairRecord, RegionPoint, Side, TimelikeTriangle, TriangleReport, point_to_json
from .verdict import curvature_verdict

logger = logging.getLogger(__name__)

# 求根时视为零的侧向判别值
_ROOT_EPS = 1e-12


class GluingCase(str, Enum):
    """点对在大三角形边上的位置"""

    SAME_SIDE = "same-side"
    A = "A"  # xy 与 yz
    B1 = "B.1"  # xy 与 [x,p]
    B2I = "B.2.i"  # xy 上 q̄ 之后与 [p,z]
    B2II = "B.2.ii"  # xy 上 q̄ 之前与 [p,z]
    C1 = "C.1"  # yz 与 [p,z]
    C2I = "C.2.i"  # yz 上 q̄* 之前与 [x,p]
    C2II = "C.2.ii"  # yz 上 q̄* 之后与 [x,p]


# ==================== 粘合构型 ====================


@dataclass(frozen=True)
class GluedComparison:
    """
    粘合的比较构型

    Attributes:
        K: 曲率
        x, p, y, z: 粘合四边形顶点
        straightened: 拉直三角形 (x', y', z')
        p_straight: [x',z'] 上 τ(x',p') = τxp 的点
        tau_xp, tau_pz, tau_xy, tau_yz: 边长
        intersection: [x̄,z̄] 与 [p̄,ȳ] 的交
        q_offset: [z̄,p̄] 向过去的延长线与 [x̄,ȳ] 交点 q̄ 的 τ(x̄,q̄)，不相交为 None
        q_star_offset: [x̄,p̄] 向未来的延长线与 [ȳ,z̄] 交点 q̄* 的 τ(ȳ,q̄*)，不相交为 None
    """

    K: float
    x: ModelPoint
    p: ModelPoint
    y: ModelPoint
    z: ModelPoint
    straightened: Tuple[ModelPoint, ModelPoint, ModelPoint]
    p_straight: ModelPoint
    tau_xp: float
    tau_pz: float
    tau_xy: float
    tau_yz: float
    intersection: Intersection
    q_offset: Optional[float] = None
    q_star_offset: Optional[float] = None

    @property
    def tau_xz(self) -> float:
        return self.tau_xp + self.tau_pz

    @property
    def q(self) -> Optional[ModelPoint]:
        if self.q_offset is None:
            return None
        return self.glued_point(Side.XY, self.q_offset)

    @property
    def q_star(self) -> Optional[ModelPoint]:
        if self.q_star_offset is None:
            return None
        return self.glued_point(Side.YZ, self.q_star_offset)

    def glued_point(self, side: Side, s: float) -> ModelPoint:
        """粘合四边形上大三角形边的点；xz 边为折线 x̄-p̄-z̄"""
        model = get_model(self.K)
        if side == Side.XY:
            return model.geodesic_point(self.x, self.y, _fraction(s, self.tau_xy))
        if side == Side.YZ:
            return model.geodesic_point(self.y, self.z, _fraction(s, self.tau_yz))
        if s <= self.tau_xp:
            return model.geodesic_point(self.x, self.p, _fraction(s, self.tau_xp))
        return model.geodesic_point(self.p, self.z, _fraction(s - self.tau_xp, self.tau_pz))

    def straight_point(self, side: Side, s: float) -> ModelPoint:
        model = get_model(self.K)
        x2, y2, z2 = self.straightened
        ends = {Side.XY: (x2, y2, self.tau_xy), Side.YZ: (y2, z2, self.tau_yz), Side.XZ: (x2, z2, self.tau_xz)}
        a, b, length = ends[side]
        return model.geodesic_point(a, b, _fraction(s, length))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "K": self.K,
            "glued": {k: point_to_json(v) for k, v in zip("xpyz", (self.x, self.p, self.y, self.z))},
            "straightened": [point_to_json(v) for v in self.straightened],
            "p_straight": point_to_json(self.p_straight),
            "sides": {"xp": self.tau_xp, "pz": self.tau_pz, "xy": self.tau_xy, "yz": self.tau_yz},
            "intersection": self.intersection.value,
            "q_offset": self.q_offset,
            "q_star_offset": self.q_star_offset,
        }


def _fraction(s: float, length: float) -> float:
    if length <= 0:
        return 0.0
    return min(max(s / length, 0.0), 1.0)


def _root(g: Callable[[float], float], length: float) -> Optional[float]:
    """[0, length] 上 g 的零点，端点无变号时为 None"""
    if length <= 0:
        return None
    g0, g1 = g(0.0), g(length)
    if abs(g0) <= _ROOT_EPS:
        return 0.0
    if abs(g1) <= _ROOT_EPS:
        return length
    if g0 * g1 > 0:
        return None
    return float(brentq(g, 0.0, length, xtol=1e-14))


def _assemble(
    K: float,
    x: ModelPoint,
    p: ModelPoint,
    y: ModelPoint,
    z: ModelPoint,
    tau_xp: float,
    tau_pz: float,
    tau_xy: float,
    tau_yz: float,
    tol: float,
) -> GluedComparison:
    model = get_model(K)

    # 1. 拉直三角形
    try:
        x2, y2, z2 = realize_triangle(K, SideLengths(tau_xy, tau_yz, tau_xp + tau_pz), tol)
    except (SizeBoundViolated, ReverseTriangleViolated) as e:
        raise ConfigInfeasible(f"拉直三角形不存在: {e}") from e
    p2 = model.geodesic_point(x2, z2, tau_xp / (tau_xp + tau_pz))

    # 2. 交的类型
    kind = AlexandrovConfig(K, x, p, y, z, Constellation.FIRST).intersection(tol)

    # 3. 延长线交点
    def on_xy(s: float) -> float:
        return model.orientation(z, p, model.geodesic_point(x, y, _fraction(s, tau_xy)))

    def on_yz(s: float) -> float:
        return model.orientation(x, p, model.geodesic_point(y, z, _fraction(s, tau_yz)))

    q_offset = _root(on_xy, tau_xy)
    q_star_offset = _root(on_yz, tau_yz)

    return GluedComparison(
        K=K,
        x=x,
        p=p,
        y=y,
        z=z,
        straightened=(x2, y2, z2),
        p_straight=p2,
        tau_xp=tau_xp,
        tau_pz=tau_pz,
        tau_xy=tau_xy,
        tau_yz=tau_yz,
        intersection=kind,
        q_offset=q_offset,
        q_star_offset=q_star_offset,
    )


def glue_comparison_triangles(
    K: float, first: SideLengths, second: SideLengths, tol: float = METRIC_TOL
) -> GluedComparison:
    """
    粘合两个类时子三角形的比较三角形

    Args:
        K: 曲率
        first: Δ(x,p,y) 的 (τxp, τpy, τxy)
        second: Δ(p,y,z) 的 (τpy, τyz, τpz)

    Raises:
        ConfigInfeasible: 公共边不一致、子三角形或拉直三角形不可实现
    """
    cfg = AlexandrovConfig.from_sides(K, first, second, Constellation.FIRST, tol)
    return _assemble(K, cfg.x, cfg.p, cfg.y, cfg.z, first.a, second.c, first.c, second.b, tol)


def glue_signed_triangles(
    K: float,
    s_xp: Union[SignedValue, float],
    s_py: Union[SignedValue, float],
    s_xy: Union[SignedValue, float],
    s_pz: Union[SignedValue, float],
    s_yz: Union[SignedValue, float],
    tol: float = METRIC_TOL,
) -> GluedComparison:
    """
    由带符号距离粘合，公共边 [p,y] 可以是类空或类光的

    [x,p]、[x,y]、[p,z]、[y,z] 必须是类时的（带符号距离为 -τ）。

    Raises:
        ConfigInfeasible: 边不是类时的或构型不可实现
    """
    values = [v.value if isinstance(v, SignedValue) else float(v) for v in (s_xp, s_xy, s_pz, s_yz)]
    if any(v >= 0 for v in values):
        raise ConfigInfeasible(f"[x,p]、[x,y]、[p,z]、[y,z] 必须是类时的: {values}")
    t_xp, t_xy, t_pz, t_yz = (-v for v in values)
    try:
        x, p, y = realize_signed_triangle(K, -t_xp, s_py, -t_xy, tol)
        z = realize_adjacent_vertex(K, p, y, -t_pz, -t_yz, opposite_to=x, tol=tol)
    except UnrealizableTriple as e:
        raise ConfigInfeasible(f"带符号比较三角形无法粘合: {e}") from e
    return _assemble(K, x, p, y, z, t_xp, t_pz, t_xy, t_yz, tol)


# ==================== 绕行函数 ====================


def detour_function(
    K: float, cfg: GluedComparison, t: float, b_offset: Optional[float] = None, tol: float = METRIC_TOL
) -> float:
    """
    绕行函数 f(t)

    ā 在 [x̄,ȳ] 上 τ(x̄,ā) = t，ā' 在 [x̄',ȳ'] 上同一偏移。比较经 p̄ 的折线长
    τ̄(ā,p̄) + τ̄(p̄,b̄) 与拉直后的 τ̄(ā',b̄')：

    K=0:  f = 和² - 直²
    K>0:  f = cosh(和/R) - cosh(直/R)
    K<0:  f = cos(直/R) - cos(和/R)

    f(0) = 0，且 f'' - K·f ≤ 0。

    Args:
        K: 曲率
        cfg: 粘合构型
        t: [0, τ(x̄,q̄)] 中的参数
        b_offset: None 时 b̄ = z̄；否则 b̄ 在 [p̄,z̄] 上 τ(p̄,b̄) = b_offset

    Raises:
        ParameterOutOfRange: q̄ 不存在，或 t、b_offset 越界
    """
    if cfg.q_offset is None:
        raise ParameterOutOfRange("[z̄,p̄] 的延长线不与 [x̄,ȳ] 相交")
    if t < -tol or t > cfg.q_offset + tol:
        raise ParameterOutOfRange(f"t = {t} 不在 [0, {cfg.q_offset}] 内")
    if b_offset is not None and (b_offset < -tol or b_offset > cfg.tau_pz + tol):
        raise ParameterOutOfRange(f"b_offset = {b_offset} 不在 [0, {cfg.tau_pz}] 内")

    model = get_model(K)
    t = min(max(t, 0.0), cfg.q_offset)
    along = cfg.tau_pz if b_offset is None else min(max(b_offset, 0.0), cfg.tau_pz)
    a = cfg.glued_point(Side.XY, t)
    a2 = cfg.straight_point(Side.XY, t)
    b = cfg.glued_point(Side.XZ, cfg.tau_xp + along)
    b2 = cfg.straight_point(Side.XZ, cfg.tau_xp + along)

    total = model.tau(a, cfg.p) + model.tau(cfg.p, b)
    direct = model.tau(a2, b2)
    if K == 0:
        return total * total - direct * direct
    R = model.radius
    if K > 0:
        return math.cosh(total / R) - math.cosh(direct / R)
    # cos 在 [0, π] 上递减，取相反数使 f ≥ 0
    return math.cos(direct / R) - math.cos(total / R)


def detour_samples(
    K: float, cfg: GluedComparison, n: int = 64, b_offset: Optional[float] = None
) -> List[Tuple[float, float]]:
    """均匀网格 [0, τ(x̄,q̄)] 上的 (t, f(t))，供 sturm_check 使用"""
    if cfg.q_offset is None:
        raise ParameterOutOfRange("[z̄,p̄] 的延长线不与 [x̄,ȳ] 相交")
    grid = np.linspace(0.0, cfg.q_offset, n)
    return [(float(t), detour_function(K, cfg, float(t), b_offset)) for t in grid]


# ==================== 报告 ====================


@dataclass
class IntermediateCheck:
    """粘合构型中的中间不等式 τ̄glued(ā,b̄) ≥ τ̄(ā',b̄')"""

    case: GluingCase
    pair: int
    glued: float
    straightened: float

    @property
    def holds(self) -> bool:
        return self.glued >= self.straightened

    def to_dict(self) -> Dict[str, Any]:
        return {"case": self.case.value, "pair": self.pair, "glued": self.glued, "straightened": self.straightened}


@dataclass
class SignedPairRecord:
    """带符号距离比较：|ab|± 与 |āb̄|±"""

    sides: Tuple[Tuple[int, int], Tuple[int, int]]
    params: Tuple[float, float]
    signed: float
    signed_bar: float

    @property
    def defect(self) -> float:
        """|āb̄|± - |ab|±，上曲率界时应 ≥ 0"""
        return self.signed_bar - self.signed


@dataclass
class SignedComparisonReport:
    """子三角形（任意因果类型）的带符号距离比较"""

    K: float
    tol: float
    vertices: Tuple[ModelPoint, ModelPoint, ModelPoint]
    records: List[SignedPairRecord] = field(default_factory=list)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return all(r.defect >= -self.tol for r in self.records)

    @property
    def max_abs_defect(self) -> float:
        return max((abs(r.defect) for r in self.records), default=0.0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "K": self.K,
            "verdict": "PASS" if self.passed else "FAIL",
            "vertices": [point_to_json(v) for v in self.vertices],
            "n_pairs": len(self.records),
            "skipped": self.skipped,
            "max_abs_defect": self.max_abs_defect,
        }


@dataclass
class GluingLemmaReport:
    """
    粘合引理检查报告

    Attributes:
        K: 曲率
        tol: 容差
        hypothesis: 两个子三角形的比较报告
        conclusion: 大三角形的比较报告，点对带情形标记
        glued: 粘合构型
        case_counts: 各情形的点对数
        intermediate_failures: 中间不等式不成立的点对
        intermediate_checked: 检查过的中间不等式数
        boundary_pairs: 落在情形分界容差带内的点对数
        reversed: 是否按时间反向处理（y ≪ p）
    """

    K: float
    tol: float
    hypothesis: List[Union[TriangleReport, SignedComparisonReport]]
    conclusion: TriangleReport
    glued: GluedComparison
    case_counts: Dict[str, int] = field(default_factory=dict)
    intermediate_failures: List[IntermediateCheck] = field(default_factory=list)
    intermediate_checked: int = 0
    boundary_pairs: int = 0
    reversed: bool = False

    @property
    def intersection(self) -> Intersection:
        return self.glued.intersection

    @property
    def already_comparison(self) -> bool:
        """p̄ 落在 [x̄,z̄] 上时，粘合构型本身就是大三角形的比较三角形"""
        return self.glued.intersection == Intersection.AT_P

    @property
    def hypothesis_passed(self) -> bool:
        return all(h.passed for h in self.hypothesis)

    @property
    def conclusion_passed(self) -> bool:
        return self.conclusion.passed

    @property
    def passed(self) -> bool:
        """前提成立则结论成立"""
        return not self.hypothesis_passed or self.conclusion_passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "K": self.K,
            "tol": self.tol,
            "verdict": "PASS" if self.passed else "FAIL",
            "hypothesis": [h.to_dict() for h in self.hypothesis],
            "hypothesis_passed": self.hypothesis_passed,
            "conclusion": self.conclusion.to_dict(),
            "conclusion_passed": self.conclusion_passed,
            "glued": self.glued.to_dict(),
            "intersection": self.intersection.value,
            "already_comparison": self.already_comparison,
            "case_counts": dict(self.case_counts),
            "intermediate_checked": self.intermediate_checked,
            "intermediate_failures": [c.to_dict() for c in self.intermediate_failures],
            "boundary_pairs": self.boundary_pairs,
            "reversed": self.reversed,
        }


# ==================== 情形划分 ====================


def classify_pair(
    glued: GluedComparison, sides: Tuple[Side, Side], offsets: Tuple[float, float], tol: float = METRIC_TOL
) -> Tuple[GluingCase, bool]:
    """
    点对的情形与是否落在分界容差带内

    Returns:
        (情形, 是否靠近分界)
    """
    s, t = sides
    if s == t:
        return GluingCase.SAME_SIDE, False
    where = dict(zip(sides, offsets))
    kinds = set(sides)

    if kinds == {Side.XY, Side.YZ}:
        return GluingCase.A, False

    if kinds == {Side.XY, Side.XZ}:
        u, v = where[Side.XY], where[Side.XZ]
        if v <= glued.tau_xp:
            return GluingCase.B1, abs(v - glued.tau_xp) <= tol
        m = glued.q_offset
        near = abs(v - glued.tau_xp) <= tol
        if m is None:
            return GluingCase.B2I, near
        near = near or abs(u - m) <= tol
        return (GluingCase.B2II if u < m else GluingCase.B2I), near

    # {YZ, XZ}
    u, v = where[Side.YZ], where[Side.XZ]
    if v >= glued.tau_xp:
        return GluingCase.C1, abs(v - glued.tau_xp) <= tol
    m = glued.q_star_offset
    near = abs(v - glued.tau_xp) <= tol
    if m is None:
        return GluingCase.C2I, near
    near = near or abs(u - m) <= tol
    return (GluingCase.C2II if u > m else GluingCase.C2I), near


# ==================== 区域 ====================


class _ReversedRegion(Region):
    """时间反向的区域：τ_r(a,b) = τ(b,a)"""

    def __init__(self, inner: Region):
        self.inner = inner
        self.name = f"{inner.name}-reversed"

    def tau(self, a: RegionPoint, b: RegionPoint) -> float:
        return self.inner.tau(b, a)

    def side_point(self, a: RegionPoint, b: RegionPoint, s: float) -> Tuple[RegionPoint, float]:
        length = self.inner.tau(b, a)
        point, offset = self.inner.side_point(b, a, length - s)
        return point, length - offset

    def sample_point(self, rng: np.random.Generator) -> RegionPoint:
        return self.inner.sample_point(rng)


def _side_point(
    region: Region, vertices: Tuple[RegionPoint, RegionPoint, RegionPoint], p: RegionPoint, tau_xp: float,
    side: Side, s: float,
) -> Tuple[RegionPoint, float]:
    """大三角形边上的点，xz 边经过 p"""
    x, y, z = vertices
    if side == Side.XY:
        return region.side_point(x, y, s)
    if side == Side.YZ:
        return region.side_point(y, z, s)
    if s <= tau_xp:
        return region.side_point(x, p, s)
    point, offset = region.side_point(p, z, s - tau_xp)
    return point, offset + tau_xp


# ==================== 结论检查 ====================


def _conclusion(
    region: Region,
    K: float,
    vertices: Tuple[RegionPoint, RegionPoint, RegionPoint],
    p: RegionPoint,
    glued: GluedComparison,
    n_pairs: int,
    rng: np.random.Generator,
    tol: float,
) -> Tuple[TriangleReport, Counter, List[IntermediateCheck], int, int]:
    model = get_model(K)
    x, y, z = vertices
    tau_xz = region.tau(x, z)
    triangle = TimelikeTriangle(x, y, z, SideLengths(glued.tau_xy, glued.tau_yz, tau_xz))
    report = TriangleReport(K=K, bound=Bound.UPPER, tol=tol, triangles=[triangle], comparison=[glued.straightened])
    counts: Counter = Counter()
    failures: List[IntermediateCheck] = []
    checked = 0
    boundary = 0

    for s, t, u, v in sample_offsets(rng, triangle, n_pairs):
        a, ua = _side_point(region, vertices, p, glued.tau_xp, s, u)
        b, vb = _side_point(region, vertices, p, glued.tau_xp, t, v)
        a2, b2 = glued.straight_point(s, ua), glued.straight_point(t, vb)
        oriented = _orient(region, model.tau, a, b, a2, b2)
        if oriented is None:
            report.skipped += 1
            continue
        swap, tau, tau_bar = oriented
        if swap:
            a, b, a2, b2 = b, a, b2, a2
            s, t, ua, vb = t, s, vb, ua

        case, near = classify_pair(glued, (s, t), (ua, vb), tol)
        counts[case.value] += 1
        boundary += int(near)
        report.pairs.append(PairRecord(a, b, (s, t), (ua, vb), tau, tau_bar, case=case.value))

        # 中间不等式：粘合构型中的 τ̄ 不小于拉直三角形中的 τ̄
        ag, bg = glued.glued_point(s, ua), glued.glued_point(t, vb)
        lhs = model.tau(ag, bg)
        if near or case in (GluingCase.B2I, GluingCase.B2II, GluingCase.C2I, GluingCase.C2II):
            lhs = max(lhs, model.tau(ag, glued.p) + model.tau(glued.p, bg))
        checked += 1
        if lhs < tau_bar - tol:
            failures.append(IntermediateCheck(case, len(report.pairs) - 1, lhs, tau_bar))

    return report, counts, failures, checked, boundary


def gluing_lemma_check(
    region: Region,
    K: float,
    triangle: Union[TimelikeTriangle, Sequence[RegionPoint]],
    p: RegionPoint,
    n_pairs: int = 36,
    seed: int = 0,
    tol: float = PIPELINE_TOL,
) -> GluingLemmaReport:
    """
    在区域中检查粘合引理

    Args:
        region: 比较邻域
        K: 比较曲率（上界）
        triangle: 大三角形 x ≪ y ≪ z
        p: [x,z] 上的分割点
        n_pairs: 每个三角形的点对数
        seed: 随机种子
        tol: 容差

    Returns:
        GluingLemmaReport: passed 表示前提成立时结论成立

    Raises:
        ConfigInfeasible: 顶点不构成类时三角形或比较构型不可实现
        SubtriangleDegenerate: p 不在 τ-实现的 [x,z] 上，或 p 与 y 不是时序相关的
    """
    x, y, z = triangle.vertices if isinstance(triangle, TimelikeTriangle) else tuple(triangle)
    region.triangle(x, y, z)

    # 1. 分割点
    tau_xz = region.tau(x, z)
    tau_xp, tau_pz = region.tau(x, p), region.tau(p, z)
    if tau_xp <= 0 or tau_pz <= 0 or abs(tau_xp + tau_pz - tau_xz) > tol * (1.0 + tau_xz):
        raise SubtriangleDegenerate(f"p 不在 [x,z] 的内部: τ(x,p) + τ(p,z) = {tau_xp + tau_pz}, τ(x,z) = {tau_xz}")

    # 2. y ≪ p 时按时间反向处理
    reversed_ = False
    if region.tau(p, y) <= 0:
        if region.tau(y, p) <= 0:
            raise SubtriangleDegenerate("p 与 y 不是时序相关的，子三角形不是类时的")
        region = _ReversedRegion(region)
        x, z = z, x
        tau_xp, tau_pz = tau_pz, tau_xp
        reversed_ = True
        logger.debug("粘合引理: y ≪ p，时间反向")

    tau_xy, tau_yz, tau_py = region.tau(x, y), region.tau(y, z), region.tau(p, y)
    t1 = TimelikeTriangle(x, p, y, SideLengths(tau_xp, tau_py, tau_xy))
    t2 = TimelikeTriangle(p, y, z, SideLengths(tau_py, tau_yz, tau_pz))

    # 3. 前提
    hypothesis = curvature_verdict(region, K, Bound.UPPER, n_pairs=n_pairs, seed=seed, tol=tol, triangles=[t1, t2])

    # 4. 粘合构型与结论
    glued = glue_comparison_triangles(K, t1.sides, t2.sides)
    rng = np.random.default_rng(np.random.SeedSequence(seed).spawn(3)[2])
    conclusion, counts, failures, checked, boundary = _conclusion(region, K, (x, y, z), p, glued, n_pairs, rng, tol)
    conclusion.seed = seed

    report = GluingLemmaReport(
        K=K,
        tol=tol,
        hypothesis=[hypothesis],
        conclusion=conclusion,
        glued=glued,
        case_counts=dict(counts),
        intermediate_failures=failures,
        intermediate_checked=checked,
        boundary_pairs=boundary,
        reversed=reversed_,
    )
    logger.info(
        "粘合引理 K=%s: 交=%s, 前提 %s, 结论 %s",
        K,
        glued.intersection.value,
        "PASS" if report.hypothesis_passed else "FAIL",
        "PASS" if report.conclusion_passed else "FAIL",
    )
    return report


# ==================== 流形情形 ====================


@dataclass(frozen=True)
class ManifoldPiece:
    """
    子三角形所在的模型片

    Attributes:
        region: 模型区域
        vertices: 第一片为 (x¹, p¹, y¹)，第二片为 (p², y², z²)
    """

    region: ModelRegion
    vertices: Tuple[ModelPoint, ModelPoint, ModelPoint]


_PIECE_SIDES: Tuple[Tuple[int, int], ...] = ((0, 1), (1, 2), (0, 2))


def signed_comparison(
    K: float, piece: ManifoldPiece, n_pairs: int, rng: np.random.Generator, tol: float = PIPELINE_TOL
) -> SignedComparisonReport:
    """
    任意因果类型三角形的带符号距离比较 |ab|± ≤ |āb̄|±

    边上的点按仿射参数均匀取样。

    Raises:
        ConfigInfeasible: 比较三角形不可实现
    """
    model = piece.region.model
    u = piece.vertices
    signed = [model.signed_distance(u[i], u[j]).value for i, j in _PIECE_SIDES]
    try:
        bar = realize_signed_triangle(K, *signed, tol=METRIC_TOL)
    except UnrealizableTriple as e:
        raise ConfigInfeasible(f"子三角形的比较三角形不存在: {e}") from e
    target = get_model(K)
    report = SignedComparisonReport(K=K, tol=tol, vertices=u)

    for k in range(n_pairs):
        si, ti = STRATA[k % len(STRATA)]
        e, f = si.ends, ti.ends
        la, lb = float(rng.uniform(0.0, 1.0)), float(rng.uniform(0.0, 1.0))
        try:
            a = model.geodesic_point(u[e[0]], u[e[1]], la)
            b = model.geodesic_point(u[f[0]], u[f[1]], lb)
            a_bar = target.geodesic_point(bar[e[0]], bar[e[1]], la)
            b_bar = target.geodesic_point(bar[f[0]], bar[f[1]], lb)
            d = model.signed_distance(a, b).value
            d_bar = target.signed_distance(a_bar, b_bar).value
        except NoUniqueGeodesic:
            report.skipped += 1
            continue
        report.records.append(SignedPairRecord((e, f), (la, lb), d, d_bar))
    return report


def gluing_lemma_manifold_check(
    region: Region,
    K: float,
    triangle: Union[TimelikeTriangle, Sequence[RegionPoint]],
    p: RegionPoint,
    first: ManifoldPiece,
    second: ManifoldPiece,
    n_pairs: int = 36,
    seed: int = 0,
    tol: float = PIPELINE_TOL,
    match_tol: float = METRIC_TOL,
) -> GluingLemmaReport:
    """
    分片给出的子三角形，公共边 [p,y] 可以是类空或类光的

    第一片的 τ(x¹,p¹)、τ(x¹,y¹) 与第二片的 τ(p²,z²)、τ(y²,z²) 必须与大三角形一致，
    两片中公共边的带符号长度必须相等。

    Raises:
        SideMismatch: 边长不匹配
        SubtriangleDegenerate: p 不在 [x,z] 的内部
        ConfigInfeasible: 比较构型不可实现
    """
    x, y, z = triangle.vertices if isinstance(triangle, TimelikeTriangle) else tuple(triangle)
    region.triangle(x, y, z)
    tau_xz = region.tau(x, z)
    tau_xp, tau_pz = region.tau(x, p), region.tau(p, z)
    if tau_xp <= 0 or tau_pz <= 0 or abs(tau_xp + tau_pz - tau_xz) > tol * (1.0 + tau_xz):
        raise SubtriangleDegenerate(f"p 不在 [x,z] 的内部: τ(x,p) + τ(p,z) = {tau_xp + tau_pz}, τ(x,z) = {tau_xz}")

    # 1. 边长匹配
    m1, m2 = first.region.model, second.region.model
    x1, p1, y1 = first.vertices
    p2, y2, z2 = second.vertices
    checks = (
        ("τ(x,p)", m1.tau(x1, p1), tau_xp),
        ("τ(x,y)", m1.tau(x1, y1), region.tau(x, y)),
        ("τ(p,z)", m2.tau(p2, z2), tau_pz),
        ("τ(y,z)", m2.tau(y2, z2), region.tau(y, z)),
        ("|py|±", m1.signed_distance(p1, y1).value, m2.signed_distance(p2, y2).value),
    )
    for name, got, want in checks:
        if abs(got - want) > match_tol:
            raise SideMismatch(f"{name} 不匹配: {got} ≠ {want}")

    # 2. 前提
    streams = np.random.SeedSequence(seed).spawn(3)
    hypothesis = [
        signed_comparison(K, first, n_pairs, np.random.default_rng(streams[0]), tol),
        signed_comparison(K, second, n_pairs, np.random.default_rng(streams[1]), tol),
    ]

    # 3. 粘合构型与结论
    glued = glue_signed_triangles(
        K,
        -tau_xp,
        m1.signed_distance(p1, y1).value,
        -m1.tau(x1, y1),
        -tau_pz,
        -m2.tau(y2, z2),
    )
    rng = np.random.default_rng(streams[2])
    conclusion, counts, failures, checked, boundary = _conclusion(region, K, (x, y, z), p, glued, n_pairs, rng, tol)
    conclusion.seed = seed

    report = GluingLemmaReport(
        K=K,
        tol=tol,
        hypothesis=hypothesis,
        conclusion=conclusion,
        glued=glued,
        case_counts=dict(counts),
        intermediate_failures=failures,
        intermediate_checked=checked,
        boundary_pairs=boundary,
    )
    logger.info(
        "流形粘合 K=%s: 交=%s, 前提 %s, 结论 %s",
        K,
        glued.intersection.value,
        "PASS" if report.hypothesis_passed else "FAIL",
        "PASS" if report.conclusion_passed else "FAIL",
    )
    return report
