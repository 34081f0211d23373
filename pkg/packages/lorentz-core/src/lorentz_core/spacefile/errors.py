"""
空间文件异常

@author Ysf
@date 2026-10-16
"""


class SpaceFileError(Exception):
    """空间文件错误基类"""

    pass


class SpaceFileNotFoundError(SpaceFileError):
    """文件不存在"""

    pass


class SpaceFileLoadError(SpaceFileError):
    """文件解析或结构错误"""

    pass
