"""
有限空间公理验证器

验证 FiniteLorentzSpace 是否满足 Lorentz 预长度空间公理，
违例作为数据返回，不抛出异常。

@author Ysf
@date 2026-10-16
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ..model import METRIC_TOL
from .types import FiniteLorentzSpace, PointId

logger = logging.getLogger(__name__)


@dataclass
class AxiomViolation:
    """公理违例"""

    axiom: str
    message: str
    witness: Tuple[PointId, ...] = ()


@dataclass
class ValidationWarning:
    """验证警告"""

    field: str
    message: str


@dataclass
class ValidationResult:
    """验证结果"""

    success: bool
    errors: List[AxiomViolation] = field(default_factory=list)
    warnings: List[ValidationWarning] = field(default_factory=list)

    def axioms(self) -> List[str]:
        """出现违例的公理名称（去重保序）"""
        seen: List[str] = []
        for e in self.errors:
            if e.axiom not in seen:
                seen.append(e.axiom)
        return seen


class SpaceValidator:
    """
    空间公理验证器

    验证内容：
    - 度量：d(x,x)=0、对称、非负、三角不等式
    - 因果结构：≤ 自反传递，≪ 传递，≪ ⊆ ≤
    - 时间分离：τ ≥ 0，τ > 0 ⟺ ≪
    - 反向三角不等式
    """

    def __init__(self, tol: float = METRIC_TOL, max_witnesses: int = 10):
        """
        初始化验证器

        Args:
            tol: 数值容差
            max_witnesses: 每条公理最多报告的违例数
        """
        self.tol = tol
        self.max_witnesses = max_witnesses

    def validate(self, space: FiniteLorentzSpace) -> ValidationResult:
        """
        验证空间

        Args:
            space: 待验证空间

        Returns:
            ValidationResult: 验证结果
        """
        errors: List[AxiomViolation] = []
        warnings: List[ValidationWarning] = []

        if space.size == 0:
            warnings.append(ValidationWarning(field="points", message="空间没有点"))
            return ValidationResult(success=True, warnings=warnings)

        # 1. 度量
        errors.extend(self._validate_metric(space))

        # 2. 因果结构
        errors.extend(self._validate_causal_structure(space))

        # 3. 时间分离
        errors.extend(self._validate_time_separation(space))

        # 4. 反向三角不等式
        errors.extend(self._validate_reverse_triangle(space))

        if np.isinf(space.tau).any():
            warnings.append(ValidationWarning(field="tau", message="τ 含 +∞ 值"))

        success = len(errors) == 0
        logger.debug("验证 %d 点空间: %d 个违例", space.size, len(errors))
        return ValidationResult(success=success, errors=errors, warnings=warnings)

    def _pairs(self, mask: np.ndarray) -> List[Tuple[int, int]]:
        idx = np.argwhere(mask)[: self.max_witnesses]
        return [(int(i), int(j)) for i, j in idx]

    def _validate_metric(self, space: FiniteLorentzSpace) -> List[AxiomViolation]:
        errors = []
        d = space.d
        pts = space.points
        tol = self.tol

        for i in np.flatnonzero(np.abs(np.diag(d)) > tol)[: self.max_witnesses]:
            errors.append(AxiomViolation("metric_zero", f"d({pts[i]},{pts[i]}) = {d[i, i]} ≠ 0", (pts[i],)))

        with np.errstate(invalid="ignore"):
            asym = ~np.isclose(d, d.T, atol=tol, rtol=0.0) & ~(np.isinf(d) & np.isinf(d.T))
        for i, j in self._pairs(np.triu(asym)):
            errors.append(AxiomViolation("metric_symmetry", f"d({pts[i]},{pts[j]}) ≠ d({pts[j]},{pts[i]})", (pts[i], pts[j])))

        for i, j in self._pairs(d < -tol):
            errors.append(AxiomViolation("metric_nonnegative", f"d({pts[i]},{pts[j]}) = {d[i, j]} < 0", (pts[i], pts[j])))

        # 三角不等式 d(x,z) ≤ d(x,y) + d(y,z)，逐个中间点检查
        found = 0
        for k in range(space.size):
            via = d[:, k][:, None] + d[k, :][None, :]
            bad = d > via + tol
            if not bad.any():
                continue
            for i, j in self._pairs(bad):
                errors.append(
                    AxiomViolation(
                        "metric_triangle",
                        f"d({pts[i]},{pts[j]}) = {d[i, j]} > d({pts[i]},{pts[k]}) + d({pts[k]},{pts[j]})",
                        (pts[i], pts[k], pts[j]),
                    )
                )
                found += 1
            if found >= self.max_witnesses:
                break
        return errors

    def _transitivity(self, rel: np.ndarray, name: str, space: FiniteLorentzSpace) -> List[AxiomViolation]:
        errors = []
        pts = space.points
        r = rel.astype(np.int64)
        composed = (r @ r) > 0
        for i, j in self._pairs(composed & ~rel):
            k = int(np.flatnonzero(rel[i, :] & rel[:, j])[0])
            errors.append(
                AxiomViolation(
                    f"{name}_transitive",
                    f"{pts[i]} {name} {pts[k]} {name} {pts[j]}，但 {pts[i]} {name} {pts[j]} 不成立",
                    (pts[i], pts[k], pts[j]),
                )
            )
        return errors

    def _validate_causal_structure(self, space: FiniteLorentzSpace) -> List[AxiomViolation]:
        errors = []
        pts = space.points

        for i in np.flatnonzero(~np.diag(space.causal))[: self.max_witnesses]:
            errors.append(AxiomViolation("causal_reflexive", f"{pts[i]} ≤ {pts[i]} 不成立", (pts[i],)))

        errors.extend(self._transitivity(space.causal, "≤", space))
        errors.extend(self._transitivity(space.chron, "≪", space))

        for i, j in self._pairs(space.chron & ~space.causal):
            errors.append(
                AxiomViolation("chron_in_causal", f"{pts[i]} ≪ {pts[j]} 但 {pts[i]} ≤ {pts[j]} 不成立", (pts[i], pts[j]))
            )
        return errors

    def _validate_time_separation(self, space: FiniteLorentzSpace) -> List[AxiomViolation]:
        errors = []
        pts = space.points
        tau = space.tau

        for i, j in self._pairs(tau < 0):
            errors.append(AxiomViolation("tau_nonnegative", f"τ({pts[i]},{pts[j]}) = {tau[i, j]} < 0", (pts[i], pts[j])))

        for i, j in self._pairs((tau > 0) & ~space.chron):
            errors.append(
                AxiomViolation("tau_chron", f"τ({pts[i]},{pts[j]}) = {tau[i, j]} > 0 但 {pts[i]} ≪ {pts[j]} 不成立", (pts[i], pts[j]))
            )
        for i, j in self._pairs((tau <= 0) & space.chron):
            errors.append(
                AxiomViolation("tau_chron", f"{pts[i]} ≪ {pts[j]} 但 τ({pts[i]},{pts[j]}) = 0", (pts[i], pts[j]))
            )
        return errors

    def _validate_reverse_triangle(self, space: FiniteLorentzSpace) -> List[AxiomViolation]:
        errors: List[AxiomViolation] = []
        pts = space.points
        tau = space.tau
        causal = space.causal
        slack = self.tol * (1.0 + np.where(np.isfinite(tau), tau, 0.0))

        for k in range(space.size):
            mask = causal[:, k][:, None] & causal[k, :][None, :]
            if not mask.any():
                continue
            via = tau[:, k][:, None] + tau[k, :][None, :]
            # ∞ - ∞ 记为 nan，不计违例
            with np.errstate(invalid="ignore"):
                bad = mask & (via - tau > slack)
            for i, j in self._pairs(bad):
                errors.append(
                    AxiomViolation(
                        "reverse_triangle",
                        f"τ({pts[i]},{pts[j]}) = {tau[i, j]} < τ({pts[i]},{pts[k]}) + τ({pts[k]},{pts[j]}) = {via[i, j]}",
                        (pts[i], pts[k], pts[j]),
                    )
                )
            if len(errors) >= self.max_witnesses:
                break
        return errors


def validate_space(space: FiniteLorentzSpace, tol: float = METRIC_TOL) -> ValidationResult:
    """验证空间公理的便捷入口"""
    return SpaceValidator(tol=tol).validate(space)
