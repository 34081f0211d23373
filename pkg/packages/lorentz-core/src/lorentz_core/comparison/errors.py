"""
三角比较异常定义

@author Ysf
@date 2026-10-16
"""


class ComparisonError(Exception):
    """三角比较错误基类"""
    pass


class OffSide(ComparisonError):
    """参数超出边的 τ-长度"""
    pass


class NoRealizingCurve(ComparisonError):
    """时序相关的点对之间没有 τ-实现曲线"""
    pass


class ConfigInfeasible(ComparisonError):
    """比较构型不满足前提或拉直三角形违反尺寸界"""
    pass


class ParameterOutOfRange(ComparisonError):
    """辅助函数的参数超出定义区间"""
    pass


class SubtriangleDegenerate(ComparisonError):
    """分割点不能给出两个类时子三角形"""
    pass


class SideMismatch(ComparisonError):
    """两个子三角形与大三角形的边长不匹配"""
    pass
