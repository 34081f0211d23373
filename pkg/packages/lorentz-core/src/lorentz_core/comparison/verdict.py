"""
时间曲率界判定

@author Ysf
@date 2026-10-16
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from typing import Optional, Sequence

import numpy as np

from ..model import METRIC_TOL
from .regions import Region
from .triangles import evaluate_triangle
from .types import Bound, TimelikeTriangle, TriangleReport

logger = logging.getLogger(__name__)


def curvature_verdict(
    region: Region,
    K: float,
    bound: Bound = Bound.UPPER,
    n_triangles: int = 20,
    n_pairs: int = 36,
    seed: int = 0,
    tol: float = METRIC_TOL,
    triangles: Optional[Sequence[TimelikeTriangle]] = None,
    jobs: int = 1,
) -> TriangleReport:
    """
    在区域上抽样三角形并检查曲率界

    每个三角形使用由 seed 派生的独立随机流，结果与 jobs 无关。

    Args:
        region: 比较邻域
        K: 比较曲率
        bound: upper 要求 τ ≥ τ̄，lower 要求 τ ≤ τ̄
        n_triangles: 抽样三角形数（给出 triangles 时忽略）
        n_pairs: 每个三角形的点对数
        seed: 随机种子
        tol: 容差
        triangles: 指定的三角形
        jobs: 并行线程数

    Returns:
        TriangleReport: 聚合报告，verdict 与最差点对

    Raises:
        NoRealizingCurve: 某个三角形的边在区域中没有 τ-实现曲线
    """
    # 1. 三角形
    if triangles is None:
        triangles = region.sample_triangles(np.random.default_rng(seed), n_triangles, K)
    streams = np.random.SeedSequence(seed).spawn(len(triangles))

    # 2. 逐个比较
    def run(k: int) -> TriangleReport:
        return evaluate_triangle(region, K, triangles[k], n_pairs, np.random.default_rng(streams[k]), bound, tol)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(run, range(len(triangles))))
    else:
        parts = [run(k) for k in range(len(triangles))]

    # 3. 合并
    empty = TriangleReport(K=K, bound=bound, tol=tol, seed=seed)
    report = reduce(TriangleReport.merge, parts, empty)
    report.seed = seed
    logger.info(
        "曲率判定 %s K=%s %s: %d 个三角形, %d 对, 最大缺陷 %.3e, %s",
        region.name,
        K,
        bound.value,
        len(report.triangles),
        len(report.pairs),
        report.max_abs_defect,
        "PASS" if report.passed else "FAIL",
    )
    return report
