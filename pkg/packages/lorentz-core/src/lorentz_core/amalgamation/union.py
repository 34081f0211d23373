"""
Lorentz 不相交并与粘合索引

@author Ysf
@date 2026-10-16
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..space import FiniteLorentzSpace, UnknownPoint
from .errors import NotABijection
from .types import ClassLabel, GluingSpec, NodeId

logger = logging.getLogger(__name__)


def node_id(side: int, pid: str) -> NodeId:
    """不相交并中的点标识，side 取 1 或 2"""
    return f"{side}.{pid}"


def disjoint_union(x1: FiniteLorentzSpace, x2: FiniteLorentzSpace) -> FiniteLorentzSpace:
    """
    Lorentz 不相交并 X1 ⊔ X2

    ≪、≤、τ 为分块对角，d 在块内取原度量、跨块为 +∞。
    点标识加前缀 "1." / "2."。
    """
    n1, n2 = x1.size, x2.size
    n = n1 + n2

    d = np.full((n, n), np.inf)
    tau = np.zeros((n, n))
    chron = np.zeros((n, n), dtype=bool)
    causal = np.zeros((n, n), dtype=bool)
    for offset, space in ((0, x1), (n1, x2)):
        block = slice(offset, offset + space.size)
        d[block, block] = space.d
        tau[block, block] = space.tau
        chron[block, block] = space.chron
        causal[block, block] = space.causal

    coords = None
    if x1.coords is not None and x2.coords is not None:
        coords = x1.coords + x2.coords
    model_K = x1.model_K if x1.model_K == x2.model_K else None
    points = tuple(node_id(1, p) for p in x1.points) + tuple(node_id(2, p) for p in x2.points)
    return FiniteLorentzSpace(points, d, chron, causal, tau, coords=coords, model_K=model_K)


def check_bijection(spec: GluingSpec) -> None:
    """
    检查粘合对构成 A₁ ↔ A₂ 的双射

    Raises:
        NotABijection: 点重复或不在对应空间中
    """
    for side, space, ids in ((1, spec.x1, spec.seam1), (2, spec.x2, spec.seam2)):
        dup = [p for p, c in Counter(ids).items() if c > 1]
        if dup:
            raise NotABijection(f"X{side} 中的点 {dup[0]} 出现在多个粘合对中")
        missing = [p for p in ids if p not in space]
        if missing:
            raise NotABijection(f"粘合点 {missing[0]} 不在 X{side} 中")


@dataclass(frozen=True, eq=False)
class GluingIndex:
    """
    不相交并上的等价类索引

    Attributes:
        union: 不相交并
        side: 每个点所属空间（0 或 1）
        partner: 粘合伙伴下标，-1 表示未粘合
        seam: 接缝点下标（先 A₁ 按粘合对顺序，再 A₂）
        class_of: 每个点所属类下标
        classes: 每个类的成员下标
        labels: 类标签
    """

    union: FiniteLorentzSpace
    side: np.ndarray
    partner: np.ndarray
    seam: np.ndarray
    class_of: np.ndarray
    classes: Tuple[Tuple[int, ...], ...]
    labels: Tuple[ClassLabel, ...]

    @classmethod
    def build(cls, spec: GluingSpec) -> "GluingIndex":
        check_bijection(spec)
        union = disjoint_union(spec.x1, spec.x2)
        n1 = spec.x1.size
        n = union.size

        side = np.zeros(n, dtype=int)
        side[n1:] = 1
        partner = np.full(n, -1, dtype=int)
        seam1, seam2 = [], []
        for a, b in spec.pairs:
            i, j = spec.x1.index(a), n1 + spec.x2.index(b)
            partner[i], partner[j] = j, i
            seam1.append(i)
            seam2.append(j)

        class_of = np.full(n, -1, dtype=int)
        classes: List[Tuple[int, ...]] = []
        labels: List[ClassLabel] = []
        for i in range(n):
            if class_of[i] >= 0:
                continue
            members = (i,) if partner[i] < 0 else (i, int(partner[i]))
            for m in members:
                class_of[m] = len(classes)
            classes.append(members)
            labels.append("~".join(union.points[m] for m in members))

        logger.debug("粘合索引: %d 个点, %d 对粘合, %d 个类", n, len(spec.pairs), len(classes))
        return cls(
            union=union,
            side=side,
            partner=partner,
            seam=np.array(seam1 + seam2, dtype=int),
            class_of=class_of,
            classes=tuple(classes),
            labels=tuple(labels),
        )

    def node(self, nid: NodeId) -> int:
        try:
            return self.union.index(nid)
        except UnknownPoint:
            raise UnknownPoint(f"未知的不相交并点: {nid}（应为 '1.<id>' 或 '2.<id>'）") from None

    def same_class(self, a: int, b: int) -> bool:
        return bool(self.class_of[a] == self.class_of[b])

    def is_seam(self, i: int) -> bool:
        return bool(self.partner[i] >= 0)

    def member_on_side(self, cls_index: int, side: int) -> Optional[int]:
        for m in self.classes[cls_index]:
            if self.side[m] == side:
                return m
        return None

    def label_map(self) -> Dict[NodeId, ClassLabel]:
        return {self.union.points[i]: self.labels[c] for i, c in enumerate(self.class_of)}
