"""
粘合空间中的因果菱形

@author Ysf
@date 2026-10-16
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Set

import numpy as np

from .properties import check_map_properties
from .types import ClassLabel, QuotientSpace

logger = logging.getLogger(__name__)


class DiamondCase(str, Enum):
    """分解情形"""

    SEAM = "seam"  # 两端都是接缝类
    INTERIOR = "interior"  # 两端在同一空间且原菱形不碰接缝
    NONE = "none"


@dataclass
class DiamondReport:
    """
    因果菱形报告

    Attributes:
        diamond: J([x],[y]) 中的类
        case: 分解情形
        expected: 分解式给出的类集合
        holds: 分解是否成立，NONE 情形为 None
        leq_preserving: 映射是否 ≤ 保持（分解的前提）
    """

    diamond: List[ClassLabel] = field(default_factory=list)
    case: DiamondCase = DiamondCase.NONE
    expected: List[ClassLabel] = field(default_factory=list)
    holds: Optional[bool] = None
    leq_preserving: bool = False


def causal_diamond(quotient: QuotientSpace, x: ClassLabel, y: ClassLabel) -> DiamondReport:
    """
    J([x],[y]) 及其分解检查

    情形 (i)：两端都是接缝类时，J = π(J₁(x¹,y¹) ⊔ J₂(x²,y²))
    情形 (ii)：两端在 X_i 的非接缝部分且 J_i(x,y) ∩ A_i = ∅ 时，J = π(J_i(x,y))
    """
    spec = quotient.spec
    idx = spec.index
    union = idx.union
    i, j = quotient.index(x), quotient.index(y)
    mask = quotient.tilde_causal[i, :] & quotient.tilde_causal[:, j]
    report = DiamondReport(diamond=[quotient.labels[k] for k in np.flatnonzero(mask)])
    report.leq_preserving = check_map_properties(spec).passed("leq_preserving")

    ci, cj = idx.classes[i], idx.classes[j]

    def projected(a: int, b: int) -> Set[ClassLabel]:
        inside = union.causal[a, :] & union.causal[:, b]
        return {idx.labels[idx.class_of[k]] for k in np.flatnonzero(inside)}

    if len(ci) == 2 and len(cj) == 2:
        report.case = DiamondCase.SEAM
        expected: Set[ClassLabel] = set()
        for side in (0, 1):
            a, b = idx.member_on_side(i, side), idx.member_on_side(j, side)
            if a is not None and b is not None:
                expected |= projected(a, b)
    elif len(ci) == 1 and len(cj) == 1 and idx.side[ci[0]] == idx.side[cj[0]]:
        a, b = ci[0], cj[0]
        inside = union.causal[a, :] & union.causal[:, b]
        if (inside & (idx.partner >= 0)).any():
            return report
        report.case = DiamondCase.INTERIOR
        expected = projected(a, b)
    else:
        return report

    report.expected = [lbl for lbl in quotient.labels if lbl in expected]
    report.holds = set(report.diamond) == expected
    logger.debug("菱形 %s → %s: 情形 %s, 成立=%s", x, y, report.case.value, report.holds)
    return report
