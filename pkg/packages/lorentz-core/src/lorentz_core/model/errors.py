"""
模型空间异常定义

@author Ysf
@date 2026-10-16
"""


class ModelSpaceError(Exception):
    """模型空间计算错误基类"""
    pass


class CoordinateOffModel(ModelSpaceError):
    """坐标不在模型超二次曲面上"""
    pass


class NoUniqueGeodesic(ModelSpaceError):
    """两点之间不存在唯一测地线（对径点或超出法邻域）"""
    pass


class LegNotTimelike(ModelSpaceError):
    """双曲角要求两条腿都是类时的"""
    pass


class SizeBoundViolated(ModelSpaceError):
    """三角形违反 M_K 的尺寸界"""
    pass


class ReverseTriangleViolated(ModelSpaceError):
    """边长违反反向三角不等式 c >= a + b"""
    pass


class UnrealizableTriple(ModelSpaceError):
    """带符号边长三元组无法在 M_K 中实现"""
    pass


class GridTooCoarse(ModelSpaceError):
    """采样网格过粗"""
    pass


class SturmNotApplicable(ModelSpaceError):
    """Sturm 型引理的前提不成立 (f'' + kf <= 0 或端点条件失败)"""
    pass
