"""
模型空间工厂

@author Ysf
@date 2026-10-16
"""

import math
from functools import lru_cache

from .anti_de_sitter import AntiDeSitterPlane
from .base import ModelSpace
from .de_sitter import DeSitterPlane
from .minkowski import MinkowskiPlane


@lru_cache(maxsize=64)
def get_model(K: float) -> ModelSpace:
    """
    获取曲率为 K 的模型空间 M_K（缓存，实例不可变）

    Args:
        K: 截面曲率

    Returns:
        ModelSpace: K=0 为 Minkowski，K>0 为 de Sitter，K<0 为 anti-de Sitter
    """
    K = float(K)
    if not math.isfinite(K):
        raise ValueError(f"曲率必须有限: {K}")
    if K == 0:
        return MinkowskiPlane()
    if K > 0:
        return DeSitterPlane(K)
    return AntiDeSitterPlane(K)


def timelike_diameter(K: float) -> float:
    """比较三角形最长边的上界 π/√|K|（K=0 时为 ∞）"""
    if K == 0:
        return math.inf
    return math.pi / math.sqrt(abs(K))
