"""
lorentz-glue 命令行

@author Ysf
@date 2026-10-16
"""

__version__ = "0.1.0"
