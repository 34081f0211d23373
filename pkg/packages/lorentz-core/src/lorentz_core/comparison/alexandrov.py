"""
Alexandrov 构型

两个比较三角形沿公共边粘合成四边形，与把折边拉直后得到的三角形比较。
两种构型：

- FIRST: Δ(x,p,y) 与 Δ(p,y,z) 沿 [p,y] 粘合，拉直 x-p-z，第三顶点 y
- OTHER: Δ(x,p,z) 与 Δ(p,y,z) 沿 [p,z] 粘合，拉直 x-p-y，第三顶点 z

角度为非规范化角 ∠qpr = g_p(v, w)。整角与铰链引理给出的第三边关系一致；
OTHER 中的 ∠pzy 随 τ(p,z) 增大而减小，方向由交的类型决定。

@author Ysf
@date 2026-10-16
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..model import (
    COMPOSED_TOL,
    METRIC_TOL,
    LegNotTimelike,
    ModelPoint,
    NoUniqueGeodesic,
    ReverseTriangleViolated,
    SideLengths,
    SizeBoundViolated,
    UnrealizableTriple,
    get_model,
    realize_adjacent_vertex,
    realize_triangle,
)
from .errors import ConfigInfeasible
from .types import point_to_json

logger = logging.getLogger(__name__)


class Constellation(str, Enum):
    """粘合方式"""

    FIRST = "first"  # 公共边 [p,y]
    OTHER = "other"  # 公共边 [p,z]


class Intersection(str, Enum):
    """被细分的边与公共边的交"""

    EMPTY = "empty"
    AT_P = "at_p"
    CROSSING = "crossing"


class Relation(str, Enum):
    GE = ">="
    LE = "<="
    EQ = "=="


# ==================== 比较表 ====================

# (名称, 总成立的关系, 交为空时的关系)；交点跨越时后者取反，交于 p 时全部取等
_FIRST_TABLE: Tuple[Tuple[str, Optional[Relation], Optional[Relation]], ...] = (
    ("angle_xyz", Relation.GE, None),
    ("signed_xz", Relation.LE, None),
    ("angle_pzy", None, Relation.GE),
    ("angle_pxy", None, Relation.GE),
    ("signed_py", None, Relation.LE),
)

_OTHER_TABLE: Tuple[Tuple[str, Optional[Relation], Optional[Relation]], ...] = (
    ("angle_xzy", Relation.GE, None),
    ("signed_xy", Relation.LE, None),
    ("angle_pxz", None, Relation.GE),
    ("angle_pyz", None, Relation.GE),
    ("signed_pz", None, Relation.LE),
    ("angle_pzy", None, Relation.LE),
)

_FLIP = {Relation.GE: Relation.LE, Relation.LE: Relation.GE, Relation.EQ: Relation.EQ}


@dataclass(frozen=True)
class AlexandrovConfig:
    """
    M_K 中的四点构型

    Attributes:
        K: 曲率
        x, p, y, z: 模型点
        constellation: 粘合方式
    """

    K: float
    x: ModelPoint
    p: ModelPoint
    y: ModelPoint
    z: ModelPoint
    constellation: Constellation = Constellation.FIRST

    @classmethod
    def from_points(
        cls, K: float, x: ModelPoint, p: ModelPoint, y: ModelPoint, z: ModelPoint,
        constellation: Constellation = Constellation.FIRST,
    ) -> "AlexandrovConfig":
        return cls(K, x, p, y, z, constellation)

    @classmethod
    def from_sides(
        cls, K: float, first: SideLengths, second: SideLengths,
        constellation: Constellation = Constellation.FIRST, tol: float = METRIC_TOL,
    ) -> "AlexandrovConfig":
        """
        由两个子三角形的边长粘合

        FIRST: first = Δ(x,p,y) 的 (τxp, τpy, τxy)，second = Δ(p,y,z) 的 (τpy, τyz, τpz)
        OTHER: first = Δ(x,p,z) 的 (τxp, τpz, τxz)，second = Δ(p,y,z) 的 (τpy, τyz, τpz)

        Raises:
            ConfigInfeasible: 公共边长度不一致或子三角形不可实现
        """
        shared = (first.b, second.a) if constellation == Constellation.FIRST else (first.b, second.c)
        if abs(shared[0] - shared[1]) > tol * (1.0 + abs(shared[0])):
            raise ConfigInfeasible(f"公共边长度不一致: {shared[0]} ≠ {shared[1]}")
        try:
            a, b, c = realize_triangle(K, first, tol)
            if constellation == Constellation.FIRST:
                # a=x, b=p, c=y
                z = realize_adjacent_vertex(K, b, c, -second.c, -second.b, opposite_to=a, tol=tol)
                return cls(K, a, b, c, z, constellation)
            # a=x, b=p, c=z
            y = realize_adjacent_vertex(K, b, c, -second.a, -second.b, opposite_to=a, tol=tol)
            return cls(K, a, b, y, c, constellation)
        except (SizeBoundViolated, ReverseTriangleViolated, UnrealizableTriple) as e:
            raise ConfigInfeasible(f"子三角形无法粘合: {e}") from e

    # ==================== 角色 ====================

    @property
    def roles(self) -> Tuple[ModelPoint, ModelPoint, ModelPoint]:
        """(被细分边的过去端点, 未来端点, 公共边上 p 以外的顶点)"""
        if self.constellation == Constellation.FIRST:
            return self.x, self.z, self.y
        return self.x, self.y, self.z

    def intersection(self, tol: float = METRIC_TOL) -> Intersection:
        """被细分的边与公共边 [p, apex] 的交"""
        model = get_model(self.K)
        start, end, apex = self.roles
        total = model.tau(start, end)
        via = model.tau(start, self.p) + model.tau(self.p, end)
        if abs(via - total) <= tol * (1.0 + total):
            return Intersection.AT_P
        side_p = model.orientation(start, end, self.p)
        side_apex = model.orientation(start, end, apex)
        return Intersection.CROSSING if side_p * side_apex < 0 else Intersection.EMPTY

    def validate(self, tol: float = METRIC_TOL) -> None:
        """
        检查构型前提

        Raises:
            ConfigInfeasible: 边不是类时的、两侧顶点不在公共边两侧，或拉直三角形不存在
        """
        model = get_model(self.K)
        x, p, y, z = self.x, self.p, self.y, self.z
        if self.constellation == Constellation.FIRST:
            chains = ((x, p), (p, z), (x, y), (y, z))
            line, sides = (p, y), (x, z)
        else:
            chains = ((x, p), (p, y), (x, z), (y, z))
            line, sides = (p, z), (x, y)
        for a, b in chains:
            if model.tau(a, b) <= 0:
                raise ConfigInfeasible(f"{a.ambient_coords} ≪ {b.ambient_coords} 不成立")
        if model.orientation(*line, sides[0]) * model.orientation(*line, sides[1]) >= 0:
            raise ConfigInfeasible("两个子三角形不在公共边的两侧")
        if self.constellation == Constellation.FIRST:
            if model.tau(x, y) + model.tau(y, z) >= model.tau(x, p) + model.tau(p, z):
                raise ConfigInfeasible("τ(x,y) + τ(y,z) < τ(x,p) + τ(p,z) 不成立")
        self.straightened(tol)

    def straightened(self, tol: float = METRIC_TOL) -> Tuple[ModelPoint, ModelPoint, ModelPoint, ModelPoint]:
        """
        拉直后的三角形 (x', y', z') 与细分点 p'

        Raises:
            ConfigInfeasible: 拉直三角形违反尺寸界
        """
        model = get_model(self.K)
        x, p, y, z = self.x, self.p, self.y, self.z
        t_xp = model.tau(x, p)
        if self.constellation == Constellation.FIRST:
            t_pz = model.tau(p, z)
            sides = SideLengths(model.tau(x, y), model.tau(y, z), t_xp + t_pz)
            frac = t_xp / (t_xp + t_pz)
        else:
            t_py = model.tau(p, y)
            sides = SideLengths(t_xp + t_py, model.tau(y, z), model.tau(x, z))
            frac = t_xp / (t_xp + t_py)
        try:
            x2, y2, z2 = realize_triangle(self.K, sides, tol)
        except (SizeBoundViolated, ReverseTriangleViolated) as e:
            raise ConfigInfeasible(f"拉直三角形不存在: {e}") from e
        if self.constellation == Constellation.FIRST:
            p2 = model.geodesic_point(x2, z2, frac)
        else:
            p2 = model.geodesic_point(x2, y2, frac)
        return x2, y2, z2, p2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "K": self.K,
            "constellation": self.constellation.value,
            "x": point_to_json(self.x),
            "p": point_to_json(self.p),
            "y": point_to_json(self.y),
            "z": point_to_json(self.z),
        }


@dataclass
class Inequality:
    """一项比较：original 与 straightened 之间应满足 relation"""

    name: str
    original: float
    straightened: float
    relation: Relation
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "original": self.original,
            "straightened": self.straightened,
            "relation": self.relation.value,
            "holds": self.holds,
        }


@dataclass
class AlexandrovReport:
    """
    Alexandrov 比较报告

    Attributes:
        config: 构型
        intersection: 交的类型
        straightened: (x', y', z', p')
        inequalities: 各项比较
        hinge_consistent: 第三边关系与顶角关系一致
    """

    config: AlexandrovConfig
    intersection: Intersection
    straightened: Tuple[ModelPoint, ModelPoint, ModelPoint, ModelPoint]
    inequalities: List[Inequality] = field(default_factory=list)
    hinge_consistent: bool = True

    @property
    def holds(self) -> bool:
        return self.hinge_consistent and all(q.holds for q in self.inequalities)

    def failures(self) -> List[Inequality]:
        return [q for q in self.inequalities if not q.holds]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "intersection": self.intersection.value,
            "straightened": [point_to_json(v) for v in self.straightened],
            "inequalities": [q.to_dict() for q in self.inequalities],
            "hinge_consistent": self.hinge_consistent,
            "holds": self.holds,
        }


def _compare(lhs: float, rhs: float, relation: Relation, tol: float) -> bool:
    if relation == Relation.GE:
        return lhs >= rhs - tol
    if relation == Relation.LE:
        return lhs <= rhs + tol
    return abs(lhs - rhs) <= tol


def _quantities(cfg: AlexandrovConfig, pts: Tuple[ModelPoint, ...]) -> Dict[str, float]:
    """pts = (x, p, y, z) 上的比较量"""
    model = get_model(cfg.K)
    x, p, y, z = pts
    if cfg.constellation == Constellation.FIRST:
        return {
            "angle_xyz": model.nonnormalized_angle(y, x, z),
            "signed_xz": model.signed_distance(x, z).value,
            "angle_pzy": model.nonnormalized_angle(z, p, y),
            "angle_pxy": model.nonnormalized_angle(x, p, y),
            "signed_py": model.signed_distance(p, y).value,
        }
    return {
        "angle_xzy": model.nonnormalized_angle(z, x, y),
        "signed_xy": model.signed_distance(x, y).value,
        "angle_pxz": model.nonnormalized_angle(x, p, z),
        "angle_pyz": model.nonnormalized_angle(y, p, z),
        "signed_pz": model.signed_distance(p, z).value,
        "angle_pzy": model.nonnormalized_angle(z, p, y),
    }


def _check(cfg: AlexandrovConfig, tol: float) -> AlexandrovReport:
    # 1. 前提与拉直
    cfg.validate(tol)
    kind = cfg.intersection(tol)
    x2, y2, z2, p2 = cfg.straightened(tol)

    # 2. 比较量
    original = _quantities(cfg, (cfg.x, cfg.p, cfg.y, cfg.z))
    straight = _quantities(cfg, (x2, p2, y2, z2))
    table = _FIRST_TABLE if cfg.constellation == Constellation.FIRST else _OTHER_TABLE

    report = AlexandrovReport(config=cfg, intersection=kind, straightened=(x2, y2, z2, p2))
    for name, always, when_empty in table:
        if kind == Intersection.AT_P:
            relation, slack = Relation.EQ, COMPOSED_TOL
        elif always is not None:
            relation, slack = always, tol
        else:
            relation = when_empty if kind == Intersection.EMPTY else _FLIP[when_empty]
            slack = tol
        lhs, rhs = original[name], straight[name]
        report.inequalities.append(Inequality(name, lhs, rhs, relation, _compare(lhs, rhs, relation, slack)))

    # 3. 铰链一致性：第三边 ≤ 时顶角满足总成立的关系
    side_name, angle_name = table[1][0], table[0][0]
    if original[side_name] <= straight[side_name] + tol:
        report.hinge_consistent = _compare(original[angle_name], straight[angle_name], table[0][1], tol)

    logger.debug("Alexandrov %s/%s: %s", cfg.constellation.value, kind.value, "成立" if report.holds else "不成立")
    return report


def alexandrov_check(cfg: AlexandrovConfig, tol: float = METRIC_TOL) -> AlexandrovReport:
    """
    公共边为 [p,y] 的构型比较

    拉直三角形边长为 (τxy, τyz, τxp + τpz)，p' 在 [x',z'] 上且 τ(x',p') = τxp。

    Raises:
        ValueError: 构型不是 FIRST
        ConfigInfeasible: 前提不满足或拉直三角形违反尺寸界
    """
    if cfg.constellation != Constellation.FIRST:
        raise ValueError("alexandrov_check 需要公共边为 [p,y] 的构型")
    return _check(cfg, tol)


def alexandrov_check_other(cfg: AlexandrovConfig, tol: float = METRIC_TOL) -> AlexandrovReport:
    """
    公共边为 [p,z] 的构型比较

    拉直三角形边长为 (τxp + τpy, τyz, τxz)，p' 在 [x',y'] 上且 τ(x',p') = τxp。

    Raises:
        ValueError: 构型不是 OTHER
        ConfigInfeasible: 前提不满足或拉直三角形违反尺寸界
    """
    if cfg.constellation != Constellation.OTHER:
        raise ValueError("alexandrov_check_other 需要公共边为 [p,z] 的构型")
    return _check(cfg, tol)


def sample_alexandrov_configs(
    K: float,
    n: int,
    seed: int = 0,
    constellation: Constellation = Constellation.FIRST,
    intersection: Optional[Intersection] = None,
    scale: float = 0.5,
    max_attempts: Optional[int] = None,
) -> List[AlexandrovConfig]:
    """
    在法坐标图中拒绝采样满足前提的构型

    Args:
        K: 曲率
        n: 构型数
        seed: 随机种子
        constellation: 粘合方式
        intersection: 只保留该交类型；AT_P 时 p 直接取在被细分的边上
        scale: 坐标尺度，K≠0 时需使三角形远离尺寸界
        max_attempts: 尝试上限

    Returns:
        List[AlexandrovConfig]: 可能少于 n 个
    """
    model = get_model(K)
    rng = np.random.default_rng(seed)
    attempts = max_attempts if max_attempts is not None else 500 * max(n, 1)
    h = 2.0 * scale
    out: List[AlexandrovConfig] = []

    def chart(t: float, s: float) -> ModelPoint:
        return model.chart(t, s)

    for _ in range(attempts):
        if len(out) >= n:
            break
        try:
            if constellation == Constellation.FIRST:
                x, z = chart(0.0, 0.0), chart(h, 0.0)
                y = chart(float(rng.uniform(0.0, h)), float(rng.uniform(-h / 2, h / 2)))
                if intersection == Intersection.AT_P:
                    p = model.geodesic_point(x, z, float(rng.uniform(0.1, 0.9)))
                else:
                    p = chart(float(rng.uniform(0.0, h)), float(rng.uniform(-h / 2, h / 2)))
            else:
                x, y = chart(0.0, 0.0), chart(h / 2, 0.0)
                z = chart(float(rng.uniform(h / 2, 1.25 * h)), float(rng.uniform(-h / 2, h / 2)))
                if intersection == Intersection.AT_P:
                    p = model.geodesic_point(x, y, float(rng.uniform(0.1, 0.9)))
                else:
                    p = chart(float(rng.uniform(0.0, h / 2)), float(rng.uniform(-h / 4, h / 4)))
            cfg = AlexandrovConfig(K, x, p, y, z, constellation)
            cfg.validate()
        except ConfigInfeasible:
            continue
        except (NoUniqueGeodesic, LegNotTimelike) as e:
            logger.debug("跳过构型: %s", e)
            continue
        if intersection is not None and cfg.intersection() != intersection:
            continue
        out.append(cfg)

    if len(out) < n:
        logger.warning("K=%s %s: %d 次尝试只得到 %d/%d 个构型", K, constellation.value, attempts, len(out), n)
    return out


def angle_gap(report: AlexandrovReport) -> float:
    """各项比较量差值的最大绝对值，交于 p 时应为 0"""
    return max((abs(q.original - q.straightened) for q in report.inequalities), default=0.0)


__all__ = [
    "Constellation",
    "Intersection",
    "Relation",
    "AlexandrovConfig",
    "Inequality",
    "AlexandrovReport",
    "alexandrov_check",
    "alexandrov_check_other",
    "sample_alexandrov_configs",
    "angle_gap",
]
