"""
空间文件 Schema 定义

SpaceFile:
    {"points": [{"id": str, "coords": [...]?}],
     "tau": [[i, j, v]], "causal": [[i, j]], "chron": [[i, j]]?,
     "d": [[i, j, v]]?, "model": {"K": real}?}

i、j 为点下标或点标识；v 可以是 "inf"。

GluingFile:
    {"x1": SpaceFile | 路径, "x2": SpaceFile | 路径,
     "pairs": [[a, b]], "declared": {...}?}

@author Ysf
@date 2026-10-16
"""

import math
from typing import Annotated, Any, List, Optional, Tuple, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer

from ..amalgamation import DeclaredProperties


def _parse_extended(value: Any) -> Any:
    if isinstance(value, str) and value.strip().lower() in ("inf", "+inf", "infinity"):
        return math.inf
    return value


def _dump_extended(value: float) -> Union[float, str]:
    return "inf" if math.isinf(value) and value > 0 else value


# [0, ∞] 取值，JSON 中 ∞ 写作 "inf"
ExtendedFloat = Annotated[
    float,
    BeforeValidator(_parse_extended),
    PlainSerializer(_dump_extended),
]

# 点引用：下标或标识
PointRef = Union[int, str]


class PointEntry(BaseModel):
    """点条目"""

    id: str = Field(..., description="点标识")
    coords: Optional[List[float]] = Field(None, description="模型空间环境坐标")


class ModelTag(BaseModel):
    """坐标所属模型空间"""

    K: float = Field(..., description="曲率")


class SpaceDocument(BaseModel):
    """有限 Lorentz 预长度空间文件"""

    model_config = ConfigDict(extra="ignore")

    points: List[PointEntry] = Field(default_factory=list, description="有序点列表")
    tau: List[Tuple[PointRef, PointRef, ExtendedFloat]] = Field(
        default_factory=list, description="非零时间分离 τ(i, j) = v"
    )
    causal: List[Tuple[PointRef, PointRef]] = Field(
        default_factory=list, description="因果关系 i ≤ j，自反性自动补全"
    )
    chron: Optional[List[Tuple[PointRef, PointRef]]] = Field(
        None, description="时序关系 i ≪ j，省略时取 τ > 0"
    )
    d: Optional[List[Tuple[PointRef, PointRef, ExtendedFloat]]] = Field(
        None, description="对称距离，省略时由坐标推出（需要模型标签）或取离散度量"
    )
    model: Optional[ModelTag] = Field(None, description="模型标签")


class GluingDocument(BaseModel):
    """粘合规格文件"""

    model_config = ConfigDict(extra="ignore")

    x1: Union[SpaceDocument, str] = Field(..., description="第一个空间（内嵌或相对路径）")
    x2: Union[SpaceDocument, str] = Field(..., description="第二个空间（内嵌或相对路径）")
    pairs: List[Tuple[str, str]] = Field(default_factory=list, description="粘合对 (X1 点, X2 点)")
    declared: DeclaredProperties = Field(default_factory=DeclaredProperties)
