"""
以曲率 K 为参数的模型空间运算

对 get_model(K) 的薄封装，同时校验输入点属于该模型。

@author Ysf
@date 2026-10-16
"""

from .factory import get_model
from .types import ModelPoint, SignedValue


def tau_K(K: float, p: ModelPoint, q: ModelPoint) -> float:
    """
    M_K 中的时间分离 τ(p, q)

    Raises:
        CoordinateOffModel: 坐标偏离模型
    """
    model = get_model(K)
    model.check(p)
    model.check(q)
    return model.tau(p, q)


def signed_distance(K: float, p: ModelPoint, q: ModelPoint) -> SignedValue:
    """带符号距离 |pq|±"""
    model = get_model(K)
    model.check(p)
    model.check(q)
    return model.signed_distance(p, q)


def nonnormalized_angle(K: float, p: ModelPoint, q: ModelPoint, r: ModelPoint) -> float:
    """p 处的非规范化角 ∠qpr"""
    model = get_model(K)
    for x in (p, q, r):
        model.check(x)
    return model.nonnormalized_angle(p, q, r)


def hyperbolic_angle(K: float, p: ModelPoint, q: ModelPoint, r: ModelPoint) -> float:
    """p 处的双曲角"""
    model = get_model(K)
    for x in (p, q, r):
        model.check(x)
    return model.hyperbolic_angle(p, q, r)


def geodesic_point(K: float, p: ModelPoint, q: ModelPoint, s: float) -> ModelPoint:
    """测地线 γ_pq 上参数 s ∈ [0, 1] 处的点"""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"参数 s 必须在 [0, 1] 内: {s}")
    model = get_model(K)
    model.check(p)
    model.check(q)
    return model.geodesic_point(p, q, s)
