"""
场景共用的采样与探测工具

@author Ysf
@date 2026-10-16
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from lorentz_core.amalgamation import QuotientSpace
from lorentz_core.space import FiniteLorentzSpace, Pair, lsc_defect, minkowski_grid, sampling_modulus

logger = logging.getLogger(__name__)

# ε 取网格步长的倍数，使对角相邻点落在邻域内
SCALE_FACTOR = 1.5

Coord = Tuple[float, float]


def grid_around(center: Coord, half_width: float, size: int, prefix: str = "g") -> FiniteLorentzSpace:
    """以 center 为中心、半宽 half_width 的 size × size Minkowski 网格"""
    t, s = center
    return minkowski_grid((t - half_width, t + half_width), (s - half_width, s + half_width), (size, size), prefix)


def grid_step(extent: float, size: int) -> float:
    return extent / (size - 1)


def probe_scale(step: float) -> float:
    return SCALE_FACTOR * step


@dataclass
class LscProbe:
    """
    商空间中单个点对的下半连续探测

    Attributes:
        pair: 商空间中的 (p, q)
        tau: τ̃(p, q)
        defect: lsc 缺陷
        modulus: 参考空间在对应点对处的采样模
        neighbour: p 的 ε-邻域中使 τ̃(·, q) 最小的点
        neighbour_tau: τ̃(neighbour, q)
        scale: ε
    """

    pair: Pair
    tau: float
    defect: float
    modulus: float
    neighbour: str
    neighbour_tau: float
    scale: float

    def fails(self, margin: float, tol: float) -> bool:
        """缺陷超过 margin 倍采样模且超过容差，即判定 τ̃ 不下半连续"""
        return self.defect > tol and self.defect > margin * self.modulus

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.pair[0],
            "q": self.pair[1],
            "tau": self.tau,
            "defect": self.defect,
            "sampling_modulus": self.modulus,
            "neighbour": self.neighbour,
            "neighbour_tau": self.neighbour_tau,
            "scale": self.scale,
        }


def probe_lsc(
    quotient: QuotientSpace,
    pair: Pair,
    scale: float,
    reference: FiniteLorentzSpace,
    reference_pair: Pair,
) -> LscProbe:
    """
    探测 τ̃ 在 (p, q) 处的下半连续性

    采样模取自参考空间（未粘合的一份平面）中 τ̃(p, q) 的连续部分所在的点对，
    它界定了仅由采样造成的缺陷。
    """
    space = quotient.as_space()
    p, q = pair
    ((_, defect),) = lsc_defect(space, scale, [pair])
    modulus = sampling_modulus(reference, scale, [reference_pair])

    i, j = space.index(p), space.index(q)
    ball = np.flatnonzero(space.d[i] <= scale)
    k = int(ball[np.argmin(space.tau[ball, j])])
    probe = LscProbe(
        pair=(p, q),
        tau=float(space.tau[i, j]),
        defect=defect,
        modulus=modulus,
        neighbour=space.points[k],
        neighbour_tau=float(space.tau[k, j]),
        scale=scale,
    )
    logger.debug("lsc 探测 %s: 缺陷 %.6g, 采样模 %.6g", pair, defect, modulus)
    return probe
