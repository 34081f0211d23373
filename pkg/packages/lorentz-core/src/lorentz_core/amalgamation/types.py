"""
粘合数据模型

@author Ysf
@date 2026-10-16
"""

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..space import FiniteLorentzSpace, PointId

if TYPE_CHECKING:
    from .quotient import CompiledChains
    from .union import GluingIndex

# 不相交并中的点标识："1.<id>" 或 "2.<id>"
NodeId = str
ClassLabel = str


class DeclaredProperties(BaseModel):
    """粘合映射声明的保持性质"""

    model_config = ConfigDict(frozen=True)

    tau_preserving: bool = Field(default=False, description="τ 保持")
    leq_preserving: bool = Field(default=False, description="≤ 保持（双向）")
    ll_preserving: bool = Field(default=False, description="≪ 保持（双向）")
    signed_distance_preserving: bool = Field(default=False, description="带符号距离保持")

    def declared(self) -> List[str]:
        return [name for name, value in self.model_dump().items() if value]


@dataclass(frozen=True, eq=False)
class GluingSpec:
    """
    粘合规格

    Attributes:
        x1: 第一个空间
        x2: 第二个空间
        pairs: (X1 中的点, X2 中的点)，定义双射 f: A₁ → A₂
        declared: 声明的映射性质
    """

    x1: FiniteLorentzSpace
    x2: FiniteLorentzSpace
    pairs: Tuple[Tuple[PointId, PointId], ...] = ()
    declared: DeclaredProperties = field(default_factory=DeclaredProperties)

    @cached_property
    def index(self) -> "GluingIndex":
        """不相交并及等价类索引"""
        from .union import GluingIndex

        return GluingIndex.build(self)

    @property
    def seam1(self) -> List[PointId]:
        return [a for a, _ in self.pairs]

    @property
    def seam2(self) -> List[PointId]:
        return [b for _, b in self.pairs]

    def inverse(self) -> "GluingSpec":
        """交换两侧得到 f⁻¹ 的规格"""
        return GluingSpec(self.x2, self.x1, tuple((b, a) for a, b in self.pairs), self.declared)


@dataclass(frozen=True)
class Chain:
    """
    链 x ∼ x₁ ≤ y₁ ∼ x₂ ≤ … ≤ y_n ∼ y

    Attributes:
        start: 起点（不相交并标识）
        end: 终点
        pairs: (x_i, y_i) 序列，每对位于同一空间且 x_i ≤ y_i
        length: Σ τ(x_i, y_i)
    """

    start: NodeId
    end: NodeId
    pairs: Tuple[Tuple[NodeId, NodeId], ...]
    length: float = 0.0

    @property
    def hops(self) -> int:
        return len(self.pairs)

    def nodes(self) -> List[NodeId]:
        """展开为交替点序列 x₁, y₁, …, x_n, y_n"""
        return [p for pair in self.pairs for p in pair]


@dataclass(frozen=True)
class CycleCertificate:
    """
    正环证书：闭合的 ≤ / ∼ 环，总 τ 为正，沿环可任意次绕行

    Attributes:
        cycle: 闭合点序列，首尾相同
        weight: 环上 τ 之和
    """

    cycle: Tuple[NodeId, ...]
    weight: float

    def verify(self, spec: GluingSpec) -> bool:
        """逐步检查环：每一步是同一空间内的 ≤ 或一次粘合等同，且总权为正"""
        idx = spec.index
        if len(self.cycle) < 2 or self.cycle[0] != self.cycle[-1]:
            return False
        total = 0.0
        for a, b in zip(self.cycle, self.cycle[1:]):
            i, j = idx.node(a), idx.node(b)
            if idx.side[i] == idx.side[j]:
                if not idx.union.causal[i, j]:
                    return False
                total += float(idx.union.tau[i, j])
            elif idx.partner[i] != j:
                return False
        return total > 0 and math.isclose(total, self.weight, rel_tol=1e-9, abs_tol=1e-12)


@dataclass(frozen=True)
class TimelikeChainWitness:
    """类时链见证：链与它到 τ̃ 的差距"""

    chain: Chain
    gap: float


Witness = Union[Chain, CycleCertificate, None]


@dataclass(frozen=True, eq=False)
class QuotientSpace:
    """
    商空间 (X̃, d̃, ≪̃, ≤̃, τ̃)

    类按点序排列：先 X1（与其粘合伙伴合并），再 X2 中未粘合的点。
    """

    spec: GluingSpec
    labels: Tuple[ClassLabel, ...]
    classes: Tuple[Tuple[NodeId, ...], ...]
    tilde_d: np.ndarray
    tilde_tau: np.ndarray
    tilde_chron: np.ndarray
    tilde_causal: np.ndarray
    warnings: Tuple[str, ...] = ()
    _chains: Optional["CompiledChains"] = field(default=None, repr=False)
    _label_index: Dict[ClassLabel, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        for name in ("tilde_d", "tilde_tau", "tilde_chron", "tilde_causal"):
            getattr(self, name).flags.writeable = False
        object.__setattr__(self, "_label_index", {lbl: i for i, lbl in enumerate(self.labels)})

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: ClassLabel) -> int:
        """类标签或其中任一成员标识对应的类下标"""
        if label in self._label_index:
            return self._label_index[label]
        idx = self.spec.index
        return int(idx.class_of[idx.node(label)])

    def label_of(self, node: NodeId) -> ClassLabel:
        return self.labels[self.index(node)]

    def tau(self, x: ClassLabel, y: ClassLabel) -> float:
        return float(self.tilde_tau[self.index(x), self.index(y)])

    def d(self, x: ClassLabel, y: ClassLabel) -> float:
        return float(self.tilde_d[self.index(x), self.index(y)])

    def leq(self, x: ClassLabel, y: ClassLabel) -> bool:
        return bool(self.tilde_causal[self.index(x), self.index(y)])

    def ll(self, x: ClassLabel, y: ClassLabel) -> bool:
        return bool(self.tilde_chron[self.index(x), self.index(y)])

    def witness(self, x: ClassLabel, y: ClassLabel) -> Witness:
        """
        τ̃([x],[y]) 的见证：有限时为取到上确界的链，∞ 时为正环证书，无链时为 None
        """
        if self._chains is None:
            return None
        i, j = self.index(x), self.index(y)
        return self._chains.witness(self.classes[i][0], self.classes[j][0])

    def as_space(self) -> FiniteLorentzSpace:
        """以类标签为点的有限空间，供公理验证与诊断使用"""
        return FiniteLorentzSpace(
            points=self.labels,
            d=self.tilde_d,
            chron=self.tilde_chron,
            causal=self.tilde_causal,
            tau=self.tilde_tau,
        )
