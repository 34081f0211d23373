"""
子空间限制与时间反转

@author Ysf
@date 2026-10-16
"""

from typing import Iterable

import numpy as np

from .types import FiniteLorentzSpace, PointId


def restrict_space(space: FiniteLorentzSpace, subset: Iterable[PointId]) -> FiniteLorentzSpace:
    """
    将 (d, ≪, ≤, τ) 限制到子集，保持原有点序

    Raises:
        UnknownPoint: 子集含未知点
    """
    wanted = set(space.indices(subset))
    idx = np.array(sorted(wanted), dtype=int)
    grid = np.ix_(idx, idx)
    coords = None if space.coords is None else tuple(space.coords[i] for i in idx)
    return FiniteLorentzSpace(
        points=tuple(space.points[i] for i in idx),
        d=space.d[grid],
        chron=space.chron[grid],
        causal=space.causal[grid],
        tau=space.tau[grid],
        coords=coords,
        model_K=space.model_K,
    )


def time_reversed(space: FiniteLorentzSpace) -> FiniteLorentzSpace:
    """反转时间定向：≤、≪、τ 取转置，d 与坐标不变"""
    return FiniteLorentzSpace(
        points=space.points,
        d=space.d,
        chron=space.chron.T,
        causal=space.causal.T,
        tau=space.tau.T,
        coords=space.coords,
        model_K=space.model_K,
    )
