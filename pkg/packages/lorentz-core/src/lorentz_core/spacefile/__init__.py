"""
空间文件

SpaceFile / 粘合规格文件的 Schema、编解码、加载器与报告序列化。

@author Ysf
@date 2026-10-16
"""

from .codec import (
    document_to_space,
    document_to_spec,
    euclidean_distances,
    space_to_document,
    spec_to_document,
)
from .errors import SpaceFileError, SpaceFileLoadError, SpaceFileNotFoundError
from .loader import (
    dump_gluing,
    dump_space,
    load_gluing,
    load_space,
    parse_space,
    read_document,
    sanitize,
    to_json,
    write_json,
)
from .reports import (
    diamond_to_dict,
    json_float,
    properties_to_dict,
    quotient_to_dict,
    short_form_to_dict,
    validation_to_dict,
    witness_to_dict,
)
from .schema import GluingDocument, ModelTag, PointEntry, SpaceDocument

__all__ = [
    # Schema
    "SpaceDocument",
    "GluingDocument",
    "PointEntry",
    "ModelTag",
    # 编解码
    "document_to_space",
    "space_to_document",
    "document_to_spec",
    "spec_to_document",
    "euclidean_distances",
    # 加载
    "read_document",
    "sanitize",
    "parse_space",
    "load_space",
    "load_gluing",
    "dump_space",
    "dump_gluing",
    "to_json",
    "write_json",
    # 报告
    "json_float",
    "validation_to_dict",
    "witness_to_dict",
    "quotient_to_dict",
    "short_form_to_dict",
    "diamond_to_dict",
    "properties_to_dict",
    # 异常
    "SpaceFileError",
    "SpaceFileNotFoundError",
    "SpaceFileLoadError",
]
