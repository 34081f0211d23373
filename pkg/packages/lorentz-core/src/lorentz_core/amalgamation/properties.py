"""
粘合映射性质检查

在 A₁ × A₁ 上检查 f 的 τ / ≤ / ≪ 保持、因果相容性、局部双 Lipschitz 常数，
带坐标的空间还检查带符号距离保持。逆映射 f⁻¹ 单独再检查一遍。

@author Ysf
@date 2026-10-16
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..model import METRIC_TOL, get_model
from ..space import FiniteLorentzSpace
from .types import GluingSpec
from .union import check_bijection

logger = logging.getLogger(__name__)

PROPERTY_NAMES = (
    "tau_preserving",
    "leq_preserving",
    "ll_preserving",
    "causal_compatible",
    "bi_lipschitz",
    "signed_distance_preserving",
)


@dataclass
class PropertyCheck:
    """单项性质检查结果，passed 为 None 表示不适用"""

    name: str
    passed: Optional[bool]
    witness: Tuple[str, ...] = ()
    detail: str = ""


@dataclass
class MapPropertyReport:
    """映射性质报告"""

    checks: Dict[str, PropertyCheck] = field(default_factory=dict)
    inverse: Dict[str, Optional[bool]] = field(default_factory=dict)
    lipschitz_constant: float = 1.0
    scale: Optional[float] = None
    warnings: List[str] = field(default_factory=list)

    def passed(self, name: str) -> bool:
        check = self.checks.get(name)
        return bool(check is not None and check.passed)

    def failures(self) -> List[PropertyCheck]:
        return [c for c in self.checks.values() if c.passed is False]


def _first(mask: np.ndarray, ids1: List[str], ids2: List[str]) -> Tuple[str, ...]:
    """mask 中第一个违例对应的 (a, b, f(a), f(b))"""
    i, j = (int(k) for k in np.argwhere(mask)[0])
    return (ids1[i], ids1[j], ids2[i], ids2[j])


def _iff_check(name: str, m1: np.ndarray, m2: np.ndarray, ids1: List[str], ids2: List[str], symbol: str) -> PropertyCheck:
    bad = m1 != m2
    if not bad.any():
        return PropertyCheck(name, True)
    w = _first(bad, ids1, ids2)
    return PropertyCheck(name, False, w, f"{w[0]} {symbol} {w[1]} 与 {w[2]} {symbol} {w[3]} 不等价")


def _tau_check(t1: np.ndarray, t2: np.ndarray, ids1: List[str], ids2: List[str], tol: float) -> PropertyCheck:
    both_inf = np.isinf(t1) & np.isinf(t2)
    with np.errstate(invalid="ignore"):
        bad = ~both_inf & ~(np.abs(t1 - t2) <= tol * (1.0 + np.abs(t1)))
    if not bad.any():
        return PropertyCheck("tau_preserving", True)
    w = _first(bad, ids1, ids2)
    i, j = ids1.index(w[0]), ids1.index(w[1])
    return PropertyCheck(
        "tau_preserving", False, w, f"τ₁({w[0]},{w[1]}) = {t1[i, j]} ≠ τ₂({w[2]},{w[3]}) = {t2[i, j]}"
    )


def _compatibility(x1: FiniteLorentzSpace, x2: FiniteLorentzSpace, i1: np.ndarray, i2: np.ndarray, ids1: List[str]) -> PropertyCheck:
    fut1, fut2 = x1.chron[i1].any(axis=1), x2.chron[i2].any(axis=1)
    past1, past2 = x1.chron[:, i1].any(axis=0), x2.chron[:, i2].any(axis=0)
    for label, a, b in (("I⁺", fut1, fut2), ("I⁻", past1, past2)):
        bad = np.flatnonzero(a != b)
        if bad.size:
            k = int(bad[0])
            return PropertyCheck(
                "causal_compatible",
                False,
                (ids1[k], x2.points[i2[k]]),
                f"{label}₁({ids1[k]}) {'≠' if a[k] else '='} ∅ 但 {label}₂({x2.points[i2[k]]}) {'≠' if b[k] else '='} ∅",
            )
    return PropertyCheck("causal_compatible", True)


def _lipschitz(d1: np.ndarray, d2: np.ndarray, ids1: List[str], ids2: List[str], scale: Optional[float]) -> Tuple[PropertyCheck, float]:
    off = ~np.eye(d1.shape[0], dtype=bool)
    near = off & np.isfinite(d1) & ((d1 <= scale) if scale is not None else True)
    if not near.any():
        return PropertyCheck("bi_lipschitz", True, detail="尺度内没有点对"), 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.maximum(d2 / d1, d1 / d2)
    ratio = np.where(near, ratio, 1.0)
    ratio = np.where(np.isnan(ratio), np.inf, ratio)
    constant = float(ratio.max())
    if np.isfinite(constant):
        return PropertyCheck("bi_lipschitz", True, detail=f"常数 {constant:.6g}"), constant
    w = _first(np.isinf(ratio), ids1, ids2)
    return PropertyCheck("bi_lipschitz", False, w, "距离比无界"), constant


def _signed_distance(spec: GluingSpec, i1: np.ndarray, i2: np.ndarray, ids1: List[str], ids2: List[str], tol: float) -> PropertyCheck:
    x1, x2 = spec.x1, spec.x2
    if x1.coords is None or x2.coords is None or x1.model_K is None or x2.model_K is None:
        return PropertyCheck("signed_distance_preserving", None, detail="空间没有坐标标签")
    m1, m2 = get_model(x1.model_K), get_model(x2.model_K)
    for a in range(len(i1)):
        for b in range(len(i1)):
            s1 = m1.signed_distance(x1.coords[i1[a]], x1.coords[i1[b]]).value
            s2 = m2.signed_distance(x2.coords[i2[a]], x2.coords[i2[b]]).value
            if abs(s1 - s2) > tol * (1.0 + abs(s1)):
                return PropertyCheck(
                    "signed_distance_preserving",
                    False,
                    (ids1[a], ids1[b], ids2[a], ids2[b]),
                    f"|{ids1[a]}{ids1[b]}|± = {s1:.6g} ≠ {s2:.6g}",
                )
    return PropertyCheck("signed_distance_preserving", True)


def _check_direction(spec: GluingSpec, scale: Optional[float], tol: float) -> Tuple[Dict[str, PropertyCheck], float]:
    x1, x2 = spec.x1, spec.x2
    ids1, ids2 = spec.seam1, spec.seam2
    i1 = np.array(x1.indices(ids1), dtype=int)
    i2 = np.array(x2.indices(ids2), dtype=int)
    g1, g2 = np.ix_(i1, i1), np.ix_(i2, i2)

    checks = {
        "tau_preserving": _tau_check(x1.tau[g1], x2.tau[g2], ids1, ids2, tol),
        "leq_preserving": _iff_check("leq_preserving", x1.causal[g1], x2.causal[g2], ids1, ids2, "≤"),
        "ll_preserving": _iff_check("ll_preserving", x1.chron[g1], x2.chron[g2], ids1, ids2, "≪"),
        "causal_compatible": _compatibility(x1, x2, i1, i2, ids1),
    }
    lip, constant = _lipschitz(x1.d[g1], x2.d[g2], ids1, ids2, scale)
    checks["bi_lipschitz"] = lip
    checks["signed_distance_preserving"] = _signed_distance(spec, i1, i2, ids1, ids2, tol)
    return checks, constant


def check_map_properties(
    spec: GluingSpec, scale: Optional[float] = None, tol: float = METRIC_TOL
) -> MapPropertyReport:
    """
    检查粘合映射 f: A₁ → A₂ 的性质

    Args:
        spec: 粘合规格
        scale: 双 Lipschitz 常数的邻域尺度 ε，None 表示全部点对
        tol: 数值容差

    Returns:
        MapPropertyReport: 每项性质的结论与违例见证；声明但未通过的性质记为警告

    Raises:
        NotABijection: 粘合对不构成双射
    """
    check_bijection(spec)
    checks, constant = _check_direction(spec, scale, tol)
    inverse_checks, _ = _check_direction(spec.inverse(), scale, tol)

    report = MapPropertyReport(
        checks=checks,
        inverse={name: c.passed for name, c in inverse_checks.items()},
        lipschitz_constant=constant,
        scale=scale,
    )
    for name in spec.declared.declared():
        check = checks.get(name)
        if check is not None and check.passed is False:
            message = f"声明的性质 {name} 不成立: {check.detail}"
            report.warnings.append(message)
            logger.warning(message)
    return report
