"""
采样空间诊断

下半连续缺陷与非类时局部孤立检查。二者只对带度量的采样连续空间有意义。

@author Ysf
@date 2026-10-16
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .types import FiniteLorentzSpace, IsolationReport, Pair, PointId, PointIsolation

logger = logging.getLogger(__name__)

PairDefect = Tuple[Pair, float]


def _ball_min(tau: np.ndarray, ball: np.ndarray, i: int, cols: np.ndarray) -> np.ndarray:
    """对固定 i，返回 min{τ(x',y') : x' ∈ B(x_i), y' ∈ B(y_j)}，j 取 cols"""
    rows_min = tau[ball[i]].min(axis=0)
    masked = np.where(ball[cols], rows_min[None, :], np.inf)
    out: np.ndarray = masked.min(axis=1)
    return out


def _ball_max(tau: np.ndarray, ball: np.ndarray, i: int, cols: np.ndarray) -> np.ndarray:
    rows_max = tau[ball[i]].max(axis=0)
    masked = np.where(ball[cols], rows_max[None, :], -np.inf)
    out: np.ndarray = masked.max(axis=1)
    return out


def _group_pairs(space: FiniteLorentzSpace, pairs: Optional[Iterable[Pair]]) -> List[Tuple[int, np.ndarray]]:
    n = space.size
    if pairs is None:
        return [(i, np.arange(n)) for i in range(n)]
    grouped: dict[int, List[int]] = {}
    for x, y in pairs:
        grouped.setdefault(space.index(x), []).append(space.index(y))
    return [(i, np.array(js, dtype=int)) for i, js in grouped.items()]


def _difference(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # ∞ - ∞ 记为 0
    with np.errstate(invalid="ignore"):
        diff = a - b
    return np.where(np.isnan(diff), 0.0, diff)


def lsc_defect(
    space: FiniteLorentzSpace, scale: float, pairs: Optional[Iterable[Pair]] = None
) -> List[PairDefect]:
    """
    下半连续缺陷

    对每个有序对 (x,y)：defect = τ(x,y) - min{τ(x',y') : d(x,x') ≤ ε, d(y,y') ≤ ε}。
    正缺陷在采样加密、ε 缩小时仍不消失，即标志 τ 不下半连续。

    Args:
        space: 带度量的空间
        scale: 邻域半径 ε
        pairs: 仅计算这些有序对；默认全部

    Returns:
        [((x, y), defect), ...]，按点序排列
    """
    ball = space.d <= scale
    out: List[PairDefect] = []
    for i, cols in _group_pairs(space, pairs):
        low = _ball_min(space.tau, ball, i, cols)
        defects = _difference(space.tau[i, cols], low)
        for j, value in zip(cols, defects):
            out.append(((space.points[i], space.points[int(j)]), float(value)))
    return out


def max_lsc_defect(space: FiniteLorentzSpace, scale: float, pairs: Optional[Iterable[Pair]] = None) -> PairDefect:
    """最大缺陷及其所在对"""
    defects = lsc_defect(space, scale, pairs)
    if not defects:
        return (("", ""), 0.0)
    return max(defects, key=lambda item: item[1])


def sampling_modulus(space: FiniteLorentzSpace, scale: float, pairs: Optional[Iterable[Pair]] = None) -> float:
    """
    采样模：ε-邻域内 τ 的最大振幅 max |τ(x',y') - τ(x,y)|

    对连续 τ 的精确采样，lsc 缺陷不超过此值。
    """
    ball = space.d <= scale
    worst = 0.0
    for i, cols in _group_pairs(space, pairs):
        base = space.tau[i, cols]
        hi = _difference(_ball_max(space.tau, ball, i, cols), base)
        lo = _difference(base, _ball_min(space.tau, ball, i, cols))
        if cols.size:
            worst = max(worst, float(hi.max()), float(lo.max()))
    return worst


def isolation_report(
    space: FiniteLorentzSpace, subset: Sequence[PointId], scales: Sequence[float]
) -> IsolationReport:
    """
    非类时局部孤立报告

    对 A 中每个点 a 与尺度 ε，在 A 内寻找 a ≪ b₊ 且 d(a,b₊) ≤ ε 的见证点（取最近者），
    过去方向同理。I⁺(a) 在整个空间中为空时未来条件自动成立。

    Args:
        space: 宿主空间
        subset: 子集 A
        scales: 尺度列表

    Returns:
        IsolationReport
    """
    idx = np.array(space.indices(subset), dtype=int)
    report = IsolationReport(scales=[float(s) for s in scales])

    for a in idx:
        pid = space.points[a]
        entry = PointIsolation(
            has_future=bool(space.chron[a].any()),
            has_past=bool(space.chron[:, a].any()),
        )
        fut = idx[space.chron[a, idx]]
        pst = idx[space.chron[idx, a]]
        for eps in report.scales:
            entry.future_witness[eps] = _nearest_within(space, a, fut, eps)
            entry.past_witness[eps] = _nearest_within(space, a, pst, eps)
        report.entries[pid] = entry

    for eps in report.scales:
        logger.debug("孤立检查 ε=%s: 通过=%s", eps, report.passes(eps))
    return report


def _nearest_within(space: FiniteLorentzSpace, a: int, candidates: np.ndarray, eps: float) -> Optional[PointId]:
    if candidates.size == 0:
        return None
    dist = space.d[a, candidates]
    k = int(np.argmin(dist))
    if dist[k] > eps:
        return None
    return space.points[int(candidates[k])]
