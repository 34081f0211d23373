"""
三角比较数据模型

@author Ysf
@date 2026-10-16
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from ..model import ModelPoint, SideLengths

# 区域中的点：模型点、有限空间点标识、商空间类标签或半平面图坐标
RegionPoint = Any
ModelTriangle = Tuple[ModelPoint, ModelPoint, ModelPoint]


class Bound(str, Enum):
    """曲率界方向"""

    UPPER = "upper"  # τ ≥ τ̄
    LOWER = "lower"  # τ ≤ τ̄


class Side(str, Enum):
    """三角形 x ≪ y ≪ z 的边"""

    XY = "xy"
    YZ = "yz"
    XZ = "xz"

    @property
    def ends(self) -> Tuple[int, int]:
        """(过去端点, 未来端点) 在 (x, y, z) 中的下标"""
        return {"xy": (0, 1), "yz": (1, 2), "xz": (0, 2)}[self.value]


def point_to_json(p: RegionPoint) -> Any:
    if isinstance(p, ModelPoint):
        return list(p.ambient_coords)
    if isinstance(p, tuple):
        return list(p)
    return p


@dataclass(frozen=True)
class TimelikeTriangle:
    """
    类时三角形 x ≪ y ≪ z

    Attributes:
        x, y, z: 区域中的顶点
        sides: 三边 τ 长度
    """

    x: RegionPoint
    y: RegionPoint
    z: RegionPoint
    sides: SideLengths

    @property
    def vertices(self) -> Tuple[RegionPoint, RegionPoint, RegionPoint]:
        return (self.x, self.y, self.z)

    def endpoints(self, side: Side) -> Tuple[RegionPoint, RegionPoint]:
        i, j = side.ends
        return self.vertices[i], self.vertices[j]

    def length(self, side: Side) -> float:
        return {Side.XY: self.sides.a, Side.YZ: self.sides.b, Side.XZ: self.sides.c}[side]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": [point_to_json(v) for v in self.vertices],
            "sides": list(self.sides.as_tuple()),
        }


@dataclass
class PairRecord:
    """
    一对边上的点及其比较点的时间分离

    Attributes:
        a, b: 区域中的点，a 在前
        sides: a、b 所在的边
        offsets: a、b 到所在边过去端点的 τ-距离
        tau: τ(a, b)
        tau_bar: τ̄(ā, b̄)
        case: 粘合引理中的情形标记
        triangle: 所属三角形在报告中的下标
    """

    a: RegionPoint
    b: RegionPoint
    sides: Tuple[Side, Side]
    offsets: Tuple[float, float]
    tau: float
    tau_bar: float
    case: Optional[str] = None
    triangle: int = 0

    @property
    def defect(self) -> float:
        """τ - τ̄"""
        return self.tau - self.tau_bar

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": point_to_json(self.a),
            "b": point_to_json(self.b),
            "sides": [s.value for s in self.sides],
            "offsets": list(self.offsets),
            "tau": self.tau,
            "tau_bar": self.tau_bar,
            "defect": self.defect,
            "case": self.case,
            "triangle": self.triangle,
        }


@dataclass
class TriangleReport:
    """
    三角比较报告

    upper 界要求每个缺陷 τ - τ̄ ≥ -tol，lower 界要求 ≤ tol。
    """

    K: float
    bound: Bound
    tol: float
    triangles: List[TimelikeTriangle] = field(default_factory=list)
    comparison: List[ModelTriangle] = field(default_factory=list)
    pairs: List[PairRecord] = field(default_factory=list)
    skipped: int = 0
    seed: Optional[int] = None

    def respects(self, defect: float) -> bool:
        if self.bound == Bound.UPPER:
            return defect >= -self.tol
        return defect <= self.tol

    def violations(self) -> List[PairRecord]:
        return [r for r in self.pairs if not self.respects(r.defect)]

    @property
    def passed(self) -> bool:
        return not self.violations()

    @property
    def max_abs_defect(self) -> float:
        return max((abs(r.defect) for r in self.pairs), default=0.0)

    def worst(self) -> Optional[PairRecord]:
        """违反方向上最差的点对"""
        if not self.pairs:
            return None
        if self.bound == Bound.UPPER:
            return min(self.pairs, key=lambda r: r.defect)
        return max(self.pairs, key=lambda r: r.defect)

    def merge(self, other: "TriangleReport") -> "TriangleReport":
        """
        合并两份报告（结合律成立：三角形与点对按顺序拼接）

        Raises:
            ValueError: K 或界方向不同
        """
        if not math.isclose(self.K, other.K) or self.bound != other.bound:
            raise ValueError(f"无法合并 K={self.K}/{self.bound.value} 与 K={other.K}/{other.bound.value} 的报告")
        shift = len(self.triangles)
        moved = [
            PairRecord(r.a, r.b, r.sides, r.offsets, r.tau, r.tau_bar, r.case, r.triangle + shift)
            for r in other.pairs
        ]
        return TriangleReport(
            K=self.K,
            bound=self.bound,
            tol=max(self.tol, other.tol),
            triangles=self.triangles + other.triangles,
            comparison=self.comparison + other.comparison,
            pairs=self.pairs + moved,
            skipped=self.skipped + other.skipped,
            seed=self.seed if self.seed == other.seed else None,
        )

    def to_dict(self) -> Dict[str, Any]:
        worst = self.worst()
        return {
            "K": self.K,
            "bound": self.bound.value,
            "tol": self.tol,
            "seed": self.seed,
            "verdict": "PASS" if self.passed else "FAIL",
            "max_abs_defect": self.max_abs_defect,
            "n_triangles": len(self.triangles),
            "n_pairs": len(self.pairs),
            "skipped": self.skipped,
            "worst": None
            if worst is None
            else {
                **worst.to_dict(),
                "triangle_data": self.triangles[worst.triangle].to_dict(),
                "comparison": [point_to_json(v) for v in self.comparison[worst.triangle]],
            },
            "triangles": [t.to_dict() for t in self.triangles],
            "pairs": [r.to_dict() for r in self.pairs],
        }
