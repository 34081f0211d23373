"""
空间文件编解码

SpaceDocument ↔ FiniteLorentzSpace，GluingDocument ↔ GluingSpec。

@author Ysf
@date 2026-10-16
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..amalgamation import GluingSpec
from ..model import ModelPoint
from ..space import FiniteLorentzSpace, SpaceError
from .errors import SpaceFileLoadError
from .schema import GluingDocument, ModelTag, PointEntry, PointRef, SpaceDocument

logger = logging.getLogger(__name__)


def euclidean_distances(coords: np.ndarray) -> np.ndarray:
    """环境坐标的欧氏距离矩阵，与采样构造使用相同的运算"""
    diff = coords[:, None, :] - coords[None, :, :]
    out: np.ndarray = np.linalg.norm(diff, axis=-1)
    return out


def _resolver(ids: Sequence[str]) -> Callable[[PointRef], int]:
    index = {p: i for i, p in enumerate(ids)}

    def resolve(ref: PointRef) -> int:
        if isinstance(ref, int):
            if not 0 <= ref < len(ids):
                raise SpaceFileLoadError(f"点下标越界: {ref}")
            return ref
        if ref not in index:
            raise SpaceFileLoadError(f"未知点: {ref}")
        return index[ref]

    return resolve


def _coords(doc: SpaceDocument) -> Optional[np.ndarray]:
    given = [p.coords for p in doc.points]
    if not given or all(c is None for c in given):
        return None
    if any(c is None for c in given):
        raise SpaceFileLoadError("坐标必须对所有点给出或全部省略")
    lengths = {len(c) for c in given if c is not None}
    if len(lengths) != 1:
        raise SpaceFileLoadError(f"坐标维数不一致: {sorted(lengths)}")
    return np.array(given, dtype=float)


def document_to_space(doc: SpaceDocument) -> FiniteLorentzSpace:
    """
    由文件文档构造空间

    Raises:
        SpaceFileLoadError: 引用未知点、坐标不完整或空间结构非法
    """
    ids = [p.id for p in doc.points]
    n = len(ids)
    resolve = _resolver(ids)

    tau = np.zeros((n, n))
    for i, j, v in doc.tau:
        tau[resolve(i), resolve(j)] = v
    causal = np.eye(n, dtype=bool)
    for i, j in doc.causal:
        causal[resolve(i), resolve(j)] = True
    if doc.chron is None:
        chron = tau > 0
    else:
        chron = np.zeros((n, n), dtype=bool)
        for i, j in doc.chron:
            chron[resolve(i), resolve(j)] = True

    coords = _coords(doc)
    K = doc.model.K if doc.model is not None else None
    if doc.d is not None:
        d = np.zeros((n, n))
        for i, j, v in doc.d:
            a, b = resolve(i), resolve(j)
            d[a, b] = d[b, a] = v
    elif coords is not None and K is not None:
        d = euclidean_distances(coords)
    else:
        d = np.ones((n, n)) - np.eye(n)

    points = None
    if coords is not None:
        points = tuple(ModelPoint.from_array(row, K if K is not None else 0.0) for row in coords)
    try:
        return FiniteLorentzSpace(tuple(ids), d, chron, causal, tau, coords=points, model_K=K)
    except SpaceError as e:
        raise SpaceFileLoadError(f"空间结构非法: {e}") from e


def space_to_document(space: FiniteLorentzSpace) -> SpaceDocument:
    """
    将空间写成文件文档

    只写出能由省略规则恢复之外的部分：≪ 等于 τ > 0 时省略，
    d 可由坐标或离散度量恢复时省略。
    """
    n = space.size
    coords = None if space.coords is None else np.array([c.ambient_coords for c in space.coords], dtype=float)
    points = [
        PointEntry(id=p, coords=None if coords is None else [float(c) for c in coords[i]])
        for i, p in enumerate(space.points)
    ]
    tau = [(int(i), int(j), float(space.tau[i, j])) for i, j in np.argwhere(space.tau != 0)]
    off = ~np.eye(n, dtype=bool)
    causal: List[Tuple[PointRef, PointRef]] = [(int(i), int(j)) for i, j in np.argwhere(space.causal & off)]

    chron: Optional[List[Tuple[PointRef, PointRef]]] = None
    if not np.array_equal(space.chron, space.tau > 0):
        chron = [(int(i), int(j)) for i, j in np.argwhere(space.chron)]

    if coords is not None and space.model_K is not None:
        implied = euclidean_distances(coords)
    else:
        implied = np.ones((n, n)) - np.eye(n)
    d: Optional[List[Tuple[PointRef, PointRef, float]]] = None
    if not np.array_equal(space.d, implied):
        d = [(i, j, float(space.d[i, j])) for i in range(n) for j in range(i + 1, n)]

    model = ModelTag(K=space.model_K) if space.model_K is not None else None
    return SpaceDocument(points=points, tau=tau, causal=causal, chron=chron, d=d, model=model)


def document_to_spec(
    doc: GluingDocument, load_ref: Optional[Callable[[str], SpaceDocument]] = None
) -> GluingSpec:
    """
    由粘合文档构造粘合规格

    Args:
        doc: 粘合文档
        load_ref: 以路径引用空间时的加载函数

    Raises:
        SpaceFileLoadError: 引用无法解析
    """
    spaces: Dict[str, FiniteLorentzSpace] = {}
    for name in ("x1", "x2"):
        part = getattr(doc, name)
        if isinstance(part, str):
            if load_ref is None:
                raise SpaceFileLoadError(f"{name} 以路径 {part!r} 给出，但没有可用的加载器")
            part = load_ref(part)
        spaces[name] = document_to_space(part)
    logger.debug("粘合文档: |X1|=%d, |X2|=%d, %d 对", spaces["x1"].size, spaces["x2"].size, len(doc.pairs))
    return GluingSpec(spaces["x1"], spaces["x2"], tuple((a, b) for a, b in doc.pairs), doc.declared)


def spec_to_document(spec: GluingSpec) -> GluingDocument:
    return GluingDocument(
        x1=space_to_document(spec.x1),
        x2=space_to_document(spec.x2),
        pairs=[(a, b) for a, b in spec.pairs],
        declared=spec.declared,
    )
