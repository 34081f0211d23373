"""
有限 Lorentz 空间异常定义

@author Ysf
@date 2026-10-16
"""


class SpaceError(Exception):
    """有限空间错误基类"""
    pass


class MalformedSpace(SpaceError):
    """矩阵形状或点标识不一致"""
    pass


class UnknownPoint(SpaceError):
    """点标识不存在"""
    pass


class NotCausal(SpaceError):
    """离散曲线相邻点不满足因果关系"""
    pass
