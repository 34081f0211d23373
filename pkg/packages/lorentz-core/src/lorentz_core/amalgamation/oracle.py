"""
穷举式商空间预言机

不依赖接缝化简与强连通分量，直接在完整不相交并上按跳数逐步松弛所有链。
一跳 = 一个 ≤ 环节 x_i ≤ y_i，之后可选一次粘合等同 y_i ∼ x_{i+1}。
只用于小规模交叉验证。

@author Ysf
@date 2026-10-16
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..model import METRIC_TOL
from .errors import TooLarge
from .quotient import max_plus, min_plus
from .types import GluingSpec
from .union import GluingIndex

logger = logging.getLogger(__name__)

# 穷举上限（不相交并点数）
MAX_POINTS = 12


@dataclass
class BruteForceResult:
    """
    穷举结果（类级矩阵）

    Attributes:
        tau: 跳数上限内的最长链长度，增长的项记为 ∞
        reach: 跳数上限内是否存在链
        hops: 使用的跳数上限
        unbounded: 存在正环，链长随跳数无界增长
        growing: 经过正环的类对
    """

    tau: np.ndarray
    reach: np.ndarray
    hops: int
    unbounded: bool = False
    growing: Tuple[Tuple[str, str], ...] = ()


def _guard(spec: GluingSpec) -> GluingIndex:
    idx = spec.index
    if idx.union.size > MAX_POINTS:
        raise TooLarge(f"穷举至多支持 {MAX_POINTS} 个点，实际 {idx.union.size}")
    return idx


def _identification(idx: GluingIndex, unit: float, zero: float) -> np.ndarray:
    """y ∼ x 步骤矩阵：对角与粘合对为 unit，其余为 zero"""
    n = idx.union.size
    out = np.full((n, n), zero)
    np.fill_diagonal(out, unit)
    for i, j in enumerate(idx.partner):
        if j >= 0:
            out[i, j] = unit
    return out


def _class_matrix(idx: GluingIndex, node: np.ndarray) -> np.ndarray:
    reps = np.array([m[0] for m in idx.classes], dtype=int)
    out: np.ndarray = node[np.ix_(reps, reps)]
    return out


def brute_force_quotient_tau(
    spec: GluingSpec, max_chain_hops: Optional[int] = None, tol: float = METRIC_TOL
) -> BruteForceResult:
    """
    穷举所有不超过 max_chain_hops 跳的链，求 τ̃

    Args:
        spec: 粘合规格（不相交并至多 12 个点）
        max_chain_hops: 跳数上限，默认等于类数
        tol: 判断正环的容差

    Raises:
        TooLarge: 点数超过上限
    """
    idx = _guard(spec)
    union = idx.union
    n_classes = len(idx.classes)
    hops = n_classes if max_chain_hops is None else max_chain_hops

    link = np.where(union.causal, union.tau, -np.inf)
    step = max_plus(link, _identification(idx, 0.0, -np.inf))
    best = _identification(idx, 0.0, -np.inf)
    for _ in range(hops):
        best = np.fmax(best, max_plus(best, step))
    reach = best > -np.inf

    # 回到自身且长度为正的链可以重复绕行，经过它的链长随跳数无界增长
    on_cycle = np.diag(best) > tol
    through = reach[:, on_cycle].astype(np.int64) @ reach[on_cycle, :].astype(np.int64)
    grow = (through > 0) & reach

    tau_node = np.where(grow | np.isposinf(best), np.inf, np.where(reach, best, 0.0))
    tau_cls = _class_matrix(idx, tau_node)
    growing: List[Tuple[str, str]] = []
    grow_cls = _class_matrix(idx, grow)
    for i, j in np.argwhere(grow_cls):
        growing.append((idx.labels[i], idx.labels[j]))
    if growing:
        logger.debug("穷举 (%d 跳): %d 对经过正环", hops, len(growing))
    return BruteForceResult(
        tau=tau_cls,
        reach=_class_matrix(idx, reach),
        hops=hops,
        unbounded=bool(on_cycle.any()),
        growing=tuple(growing),
    )


def brute_force_quotient_distance(spec: GluingSpec, max_chain_hops: Optional[int] = None) -> np.ndarray:
    """
    穷举商半度量 d̃：不超过跳数上限的链上 Σ d(p_i, q_i) 的最小值

    Raises:
        TooLarge: 点数超过上限
    """
    idx = _guard(spec)
    hops = len(idx.classes) if max_chain_hops is None else max_chain_hops
    step = min_plus(idx.union.d, _identification(idx, 0.0, np.inf))
    best = _identification(idx, 0.0, np.inf)
    for _ in range(hops):
        best = np.fmin(best, min_plus(best, step))
    out = _class_matrix(idx, best)
    np.fill_diagonal(out, 0.0)
    return out
