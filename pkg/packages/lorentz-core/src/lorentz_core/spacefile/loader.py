"""
空间文件加载器 - 读写 JSON/YAML 格式的空间与粘合规格

@author Ysf
@date 2026-10-16
"""

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np
import yaml
from pydantic import BaseModel, ValidationError

from ..amalgamation import GluingSpec
from ..space import FiniteLorentzSpace
from .codec import document_to_space, document_to_spec, space_to_document, spec_to_document
from .errors import SpaceFileLoadError, SpaceFileNotFoundError
from .schema import GluingDocument, SpaceDocument

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def read_document(path: PathLike) -> Dict[str, Any]:
    """
    解析 YAML 或 JSON 文件

    Args:
        path: 文件路径，按扩展名选择解析器（.yaml/.yml 为 YAML，其余按 JSON）

    Returns:
        解析后的字典

    Raises:
        SpaceFileNotFoundError: 文件不存在
        SpaceFileLoadError: 解析失败或根节点不是对象
    """
    file_path = Path(path)
    if not file_path.exists():
        raise SpaceFileNotFoundError(f"文件不存在: {file_path}")

    try:
        content = file_path.read_text(encoding="utf-8")
        if file_path.suffix in (".yaml", ".yml"):
            data = yaml.safe_load(content)
        else:
            data = json.loads(content)
    except yaml.YAMLError as e:
        raise SpaceFileLoadError(f"YAML 解析失败: {file_path.name}, 错误: {e}") from e
    except json.JSONDecodeError as e:
        raise SpaceFileLoadError(f"JSON 解析失败: {file_path.name}, 错误: {e}") from e
    except OSError as e:
        raise SpaceFileLoadError(f"文件读取失败: {file_path.name}, 错误: {e}") from e

    if not isinstance(data, dict):
        raise SpaceFileLoadError(f"文件根节点必须是对象，实际类型: {type(data).__name__}")
    return data


def _validate(model: type[BaseModel], data: Dict[str, Any], source: str) -> Any:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        messages = "; ".join(
            f"{'.'.join(str(x) for x in err['loc'])}: {err['msg']}" for err in e.errors()
        )
        raise SpaceFileLoadError(f"{source} 结构错误: {messages}") from e


def parse_space(data: Dict[str, Any], source: str = "<memory>") -> FiniteLorentzSpace:
    """由已解析的字典构造空间"""
    return document_to_space(_validate(SpaceDocument, data, source))


def load_space(path: PathLike) -> FiniteLorentzSpace:
    """
    加载空间文件

    Raises:
        SpaceFileNotFoundError: 文件不存在
        SpaceFileLoadError: 解析或结构错误
    """
    space = parse_space(read_document(path), str(path))
    logger.debug("已加载空间 %s: %d 个点", path, space.size)
    return space


def load_gluing(path: PathLike) -> GluingSpec:
    """
    加载粘合规格文件

    以路径给出的 x1/x2 相对于规格文件所在目录解析。
    """
    base = Path(path).parent
    doc = _validate(GluingDocument, read_document(path), str(path))

    def load_ref(ref: str) -> SpaceDocument:
        target = base / ref
        result: SpaceDocument = _validate(SpaceDocument, read_document(target), str(target))
        return result

    return document_to_spec(doc, load_ref)


def dump_space(space: FiniteLorentzSpace) -> Dict[str, Any]:
    """空间的 JSON 字典，省略可恢复的字段"""
    return space_to_document(space).model_dump(mode="json", exclude_none=True)


def dump_gluing(spec: GluingSpec) -> Dict[str, Any]:
    return spec_to_document(spec).model_dump(mode="json", exclude_none=True)


def write_json(data: Dict[str, Any], path: PathLike, pretty: bool = False) -> None:
    """写出 JSON 报告（键按插入顺序，保证相同输入得到相同字节）"""
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(to_json(data, pretty) + "\n", encoding="utf-8")


def sanitize(data: Any) -> Any:
    """递归地把 ±∞ 写成 "inf" / "-inf"，元组转为列表，numpy 标量转为 Python 标量"""
    if isinstance(data, np.generic):
        return sanitize(data.item())
    if isinstance(data, float) and math.isinf(data):
        return "inf" if data > 0 else "-inf"
    if isinstance(data, dict):
        return {key: sanitize(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [sanitize(value) for value in data]
    return data


def to_json(data: Any, pretty: bool = False) -> str:
    """
    序列化为 JSON 文本

    ∞ 写作 "inf"；NaN 不允许出现。
    """
    data = sanitize(data)
    if pretty:
        return json.dumps(data, ensure_ascii=False, indent=2, allow_nan=False)
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"), allow_nan=False)
