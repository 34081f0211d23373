"""
有限 Lorentz 预长度空间数据模型

FiniteLorentzSpace 以稠密矩阵保存 (d, ≪, ≤, τ)，构造后只读。
+∞ 用 math.inf 表示，加法吸收。

@author Ysf
@date 2026-10-16
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..model import ModelPoint
from .errors import MalformedSpace, UnknownPoint

logger = logging.getLogger(__name__)

INF = math.inf

# 稠密矩阵推荐上限
DENSE_LIMIT = 4096

PointId = str
Pair = Tuple[PointId, PointId]


def _frozen(array: np.ndarray, dtype: type) -> np.ndarray:
    out = np.array(array, dtype=dtype, copy=True)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class FiniteLorentzSpace:
    """
    有限 Lorentz 预长度空间 (X, d, ≪, ≤, τ)

    Attributes:
        points: 有序点标识
        d: 对称距离矩阵，取值 [0, ∞]
        chron: ≪ 关系矩阵
        causal: ≤ 关系矩阵
        tau: 时间分离矩阵，取值 [0, ∞]
        coords: 流形采样时每个点的模型坐标
        model_K: 坐标所属模型的曲率
    """

    points: Tuple[PointId, ...]
    d: np.ndarray
    chron: np.ndarray
    causal: np.ndarray
    tau: np.ndarray
    coords: Optional[Tuple[ModelPoint, ...]] = None
    model_K: Optional[float] = None
    _index: Dict[PointId, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        n = len(self.points)
        if len(set(self.points)) != n:
            raise MalformedSpace("点标识必须唯一")
        for name in ("d", "chron", "causal", "tau"):
            arr = np.asarray(getattr(self, name))
            if arr.shape != (n, n):
                raise MalformedSpace(f"矩阵 {name} 形状应为 ({n}, {n})，实际 {arr.shape}")
        if self.coords is not None and len(self.coords) != n:
            raise MalformedSpace(f"坐标数量 {len(self.coords)} 与点数 {n} 不一致")
        if n > DENSE_LIMIT:
            logger.warning("空间含 %d 个点，超过稠密矩阵上限 %d", n, DENSE_LIMIT)

        object.__setattr__(self, "points", tuple(str(p) for p in self.points))
        object.__setattr__(self, "d", _frozen(self.d, float))
        object.__setattr__(self, "tau", _frozen(self.tau, float))
        object.__setattr__(self, "chron", _frozen(self.chron, bool))
        object.__setattr__(self, "causal", _frozen(self.causal, bool))
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.points)})

    # ==================== 构造 ====================

    @classmethod
    def empty(cls) -> "FiniteLorentzSpace":
        z = np.zeros((0, 0))
        return cls((), z, z.astype(bool), z.astype(bool), z)

    @classmethod
    def from_relations(
        cls,
        points: Sequence[PointId],
        tau: Mapping[Pair, float],
        causal: Iterable[Pair],
        chron: Optional[Iterable[Pair]] = None,
        d: Optional[Mapping[Pair, float]] = None,
    ) -> "FiniteLorentzSpace":
        """
        由稀疏关系构造空间

        ≤ 自动补全自反性；未给出 ≪ 时取 τ > 0；未给出 d 时使用离散度量。
        """
        index = {p: i for i, p in enumerate(points)}
        n = len(points)

        def idx(pair: Pair) -> Tuple[int, int]:
            try:
                return index[pair[0]], index[pair[1]]
            except KeyError as e:
                raise UnknownPoint(f"未知点: {e.args[0]}") from e

        tau_m = np.zeros((n, n))
        for pair, value in tau.items():
            tau_m[idx(pair)] = value
        causal_m = np.eye(n, dtype=bool)
        for pair in causal:
            causal_m[idx(pair)] = True
        if chron is None:
            chron_m = tau_m > 0
        else:
            chron_m = np.zeros((n, n), dtype=bool)
            for pair in chron:
                chron_m[idx(pair)] = True
        if d is None:
            d_m = np.ones((n, n)) - np.eye(n)
        else:
            d_m = np.zeros((n, n))
            for pair, value in d.items():
                i, j = idx(pair)
                d_m[i, j] = d_m[j, i] = value
        return cls(tuple(points), d_m, chron_m, causal_m, tau_m)

    # ==================== 访问 ====================

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, pid: object) -> bool:
        return pid in self._index

    @property
    def size(self) -> int:
        return len(self.points)

    def index(self, pid: PointId) -> int:
        try:
            return self._index[pid]
        except KeyError as e:
            raise UnknownPoint(f"未知点: {pid}") from e

    def indices(self, pids: Iterable[PointId]) -> List[int]:
        return [self.index(p) for p in pids]

    def tau_of(self, x: PointId, y: PointId) -> float:
        return float(self.tau[self.index(x), self.index(y)])

    def d_of(self, x: PointId, y: PointId) -> float:
        return float(self.d[self.index(x), self.index(y)])

    def leq(self, x: PointId, y: PointId) -> bool:
        return bool(self.causal[self.index(x), self.index(y)])

    def ll(self, x: PointId, y: PointId) -> bool:
        return bool(self.chron[self.index(x), self.index(y)])

    def coord_of(self, pid: PointId) -> ModelPoint:
        if self.coords is None:
            raise UnknownPoint("该空间没有坐标标签")
        return self.coords[self.index(pid)]

    def nearest(self, coords: Sequence[float]) -> PointId:
        """坐标最接近给定值的点（仅限带坐标的空间）"""
        if self.coords is None or not self.points:
            raise UnknownPoint("该空间没有坐标标签")
        arr = np.array([c.ambient_coords for c in self.coords])
        dist = np.linalg.norm(arr - np.asarray(coords, dtype=float), axis=1)
        return self.points[int(np.argmin(dist))]

    def future(self, pid: PointId) -> List[PointId]:
        """I⁺(x)"""
        row = self.chron[self.index(pid)]
        return [self.points[j] for j in np.flatnonzero(row)]

    def past(self, pid: PointId) -> List[PointId]:
        """I⁻(x)"""
        col = self.chron[:, self.index(pid)]
        return [self.points[i] for i in np.flatnonzero(col)]

    def diamond(self, x: PointId, y: PointId) -> List[PointId]:
        """因果菱形 J(x, y)"""
        i, j = self.index(x), self.index(y)
        mask = self.causal[i, :] & self.causal[:, j]
        return [self.points[k] for k in np.flatnonzero(mask)]


class CurveDirection(str, Enum):
    """曲线时间方向"""

    FUTURE = "future"
    PAST = "past"


@dataclass(frozen=True)
class DiscreteCausalCurve:
    """
    离散因果曲线

    future 方向要求 γ(i) ≤ γ(i+1)（timelike 时为 ≪），past 方向相反。
    """

    points: Tuple[PointId, ...]
    timelike: bool = False
    direction: CurveDirection = CurveDirection.FUTURE


@dataclass
class PointIsolation:
    """单点的局部类时孤立判定"""

    has_future: bool
    has_past: bool
    future_witness: Dict[float, Optional[PointId]] = field(default_factory=dict)
    past_witness: Dict[float, Optional[PointId]] = field(default_factory=dict)


@dataclass
class IsolationReport:
    """非类时局部孤立报告"""

    scales: List[float] = field(default_factory=list)
    entries: Dict[PointId, PointIsolation] = field(default_factory=dict)

    def passes_future(self, scale: float) -> bool:
        return all(e.future_witness.get(scale) is not None for e in self.entries.values() if e.has_future)

    def passes_past(self, scale: float) -> bool:
        return all(e.past_witness.get(scale) is not None for e in self.entries.values() if e.has_past)

    def passes(self, scale: float) -> bool:
        return self.passes_future(scale) and self.passes_past(scale)

    def failures(self, scale: float) -> List[PointId]:
        """尺度 scale 下缺少见证点的点"""
        out = []
        for pid, e in self.entries.items():
            if (e.has_future and e.future_witness.get(scale) is None) or (
                e.has_past and e.past_witness.get(scale) is None
            ):
                out.append(pid)
        return out
