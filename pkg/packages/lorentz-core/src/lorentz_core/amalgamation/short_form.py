"""
商时间分离的短形式

映射 τ 保持且 ≤ 保持时，跨空间的 τ̃ 只需一次穿越接缝：

    τ̃([x],[y]) = sup_{[a] ∈ J([x],[y]) ∩ A} τ_i(x, a^i) + τ_j(a^j, y)

@author Ysf
@date 2026-10-16
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..model import METRIC_TOL
from .errors import HypothesesNotMet
from .properties import MapPropertyReport, check_map_properties
from .types import ClassLabel, GluingSpec, NodeId

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShortFormResult:
    """短形式结果；没有接缝类落在菱形内时 value = 0，seam_class 为 None"""

    value: float
    seam_class: Optional[ClassLabel]


def short_form_tau(
    spec: GluingSpec,
    x: NodeId,
    y: NodeId,
    report: Optional[MapPropertyReport] = None,
    tol: float = METRIC_TOL,
) -> ShortFormResult:
    """
    用短形式计算跨空间的 τ̃

    Args:
        spec: 粘合规格
        x: 一侧的非接缝点（不相交并标识）
        y: 另一侧的非接缝点
        report: 已有的映射性质报告，省略时重新检查

    Raises:
        HypothesesNotMet: 映射不是 τ 保持或 ≤ 保持，或 x、y 不在两侧的非接缝部分
    """
    report = report or check_map_properties(spec, tol=tol)
    missing = [p for p in ("tau_preserving", "leq_preserving") if not report.passed(p)]
    if missing:
        raise HypothesesNotMet(f"短形式要求映射满足: {', '.join(missing)}")

    idx = spec.index
    u, v = idx.node(x), idx.node(y)
    if idx.is_seam(u) or idx.is_seam(v) or idx.side[u] == idx.side[v]:
        raise HypothesesNotMet(f"{x} 与 {y} 必须是两侧不同空间中的非接缝点")

    union = idx.union
    seam = idx.seam
    half = len(seam) // 2
    own = seam[:half] if idx.side[u] == 0 else seam[half:]
    other = idx.partner[own]

    ok = union.causal[u, own] & union.causal[other, v]
    if not ok.any():
        return ShortFormResult(0.0, None)
    values = np.where(ok, union.tau[u, own] + union.tau[other, v], -np.inf)
    k = int(np.argmax(values))
    return ShortFormResult(float(values[k]), idx.labels[idx.class_of[own[k]]])
