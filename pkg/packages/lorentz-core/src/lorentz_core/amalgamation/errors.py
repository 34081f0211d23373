"""
粘合构造异常定义

@author Ysf
@date 2026-10-16
"""


class AmalgamationError(Exception):
    """粘合错误基类"""
    pass


class NotABijection(AmalgamationError):
    """粘合对不构成双射"""
    pass


class TooLarge(AmalgamationError):
    """规模超出穷举上限"""
    pass


class InvalidChain(AmalgamationError):
    """链不满足交替的 ∼ / ≤ 结构"""
    pass


class NotChronological(AmalgamationError):
    """两类之间不存在类时链"""
    pass


class UnboundedSeparation(AmalgamationError):
    """τ̃ = ∞，只有正环证书没有最优链"""
    pass


class HypothesesNotMet(AmalgamationError):
    """粘合映射不满足所需的保持性质"""
    pass
