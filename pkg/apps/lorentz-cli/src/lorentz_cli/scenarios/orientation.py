"""
反转时间定向后粘合

闭正方形变体：两份闭正方形，第二份反转时间定向，粘合两者的上边中点 a。
a¹ 在 X1 中没有未来，a² 在反向的 X2 中却有，因果相容性不成立，
τ̃ 在 ∂J⁻(a¹) 上不下半连续。

全平面变体：两份平面沿竖直线 s = 0 粘合，其中一份反转时间定向。
接缝上任意两类之间都有正环，τ̃ ≡ ∞，商空间不是时序的。

@author Ysf
@date 2026-10-16
"""

import logging
from typing import Any, Dict, Tuple

import numpy as np

from lorentz_core.amalgamation import (
    CycleCertificate,
    GluingSpec,
    build_quotient,
    check_map_properties,
    node_id,
)
from lorentz_core.space import minkowski_grid, time_reversed
from lorentz_core.spacefile import properties_to_dict, witness_to_dict

from .base import Scenario, ScenarioResult
from .probes import grid_step, probe_lsc, probe_scale
from .registry import ScenarioRegistry

logger = logging.getLogger(__name__)


@ScenarioRegistry.register("orientation-reversal")
class ReversedOrientationScenario(Scenario):
    description = "反转一侧时间定向后粘合：闭正方形 lsc 失效，全平面 τ̃ ≡ ∞"

    def run(self) -> ScenarioResult:
        square_ok, square_numbers, square_reports = self._square()
        plane_ok, plane_numbers, plane_reports = self._plane()

        expected = square_ok and plane_ok
        parameters = self.base_parameters()
        parameters.update(
            {
                "grid_size": self.config.sampling.grid_size,
                "validation_grid_size": self.config.sampling.validation_grid_size,
                "geometry": self.config.scenarios.orientation_reversal.model_dump(mode="json"),
            }
        )
        verdict = f"square: {'lsc fails' if square_ok else 'unexpected'}; plane: {'not chronological' if plane_ok else 'unexpected'}"
        return self.finish(
            verdict,
            expected,
            parameters=parameters,
            numbers={"square": square_numbers, "plane": plane_numbers},
            reports={**square_reports, **plane_reports},
        )

    def _square(self) -> Tuple[bool, Dict[str, Any], Dict[str, Dict[str, Any]]]:
        params = self.config.scenarios.orientation_reversal
        size = self.config.sampling.grid_size
        tol = self.config.tolerances.metric
        side = params.square_side

        # 1. 同一正方形网格，第二份反转定向，粘合上边中点
        x1 = minkowski_grid((0.0, side), (0.0, side), (size, size))
        x2 = time_reversed(x1)
        a = x1.nearest((side, side / 2))
        spec = GluingSpec(x1, x2, ((a, a),))
        properties = check_map_properties(spec, tol=tol)

        # 2. lsc 探测
        quotient = build_quotient(spec, tol)
        p = x1.nearest((params.p_fraction[0] * side, params.p_fraction[1] * side))
        q = x2.nearest((params.q_fraction[0] * side, params.q_fraction[1] * side))
        pair = (quotient.label_of(node_id(1, p)), quotient.label_of(node_id(2, q)))
        probe = probe_lsc(quotient, pair, probe_scale(grid_step(side, size)), x2, (a, q))

        incompatible = not properties.passed("causal_compatible")
        fails = probe.fails(params.margin, tol)
        numbers = probe.to_dict()
        numbers.update(
            {
                "glued": a,
                "causal_compatible": properties.checks["causal_compatible"].passed,
                "compatibility_detail": properties.checks["causal_compatible"].detail,
                "infinite_pairs": int(np.isinf(quotient.tilde_tau).sum()),
                "margin": params.margin,
            }
        )
        return incompatible and fails, numbers, {"square_properties": properties_to_dict(properties)}

    def _plane(self) -> Tuple[bool, Dict[str, Any], Dict[str, Dict[str, Any]]]:
        params = self.config.scenarios.orientation_reversal
        size = self.config.sampling.validation_grid_size
        tol = self.config.tolerances.metric
        hw = params.plane_half_width

        # 1. 沿 s = 0 粘合正向与反向平面
        x1 = minkowski_grid((-hw, hw), (-hw, hw), (size, size))
        x2 = time_reversed(x1)
        column = int(np.argmin(np.abs(np.linspace(-hw, hw, size))))
        pairs = tuple((f"g{i}_{column}", f"g{i}_{column}") for i in range(size))
        spec = GluingSpec(x1, x2, pairs)
        quotient = build_quotient(spec, tol)

        # 2. 接缝类之间的 τ̃ 与正环证书
        seam = [quotient.index(node_id(1, a)) for a, _ in pairs]
        seam_tau = quotient.tilde_tau[np.ix_(seam, seam)]
        all_infinite = bool(np.isinf(seam_tau).all())
        chronological = not bool(np.diag(quotient.tilde_chron).any())

        first, last = quotient.labels[seam[0]], quotient.labels[seam[-1]]
        certificate = quotient.witness(first, last)
        verified = isinstance(certificate, CycleCertificate) and certificate.verify(spec)
        if not verified:
            logger.warning("全平面变体: %s → %s 的见证不是可验证的正环", first, last)

        numbers = {
            "seam_classes": len(seam),
            "seam_all_infinite": all_infinite,
            "infinite_fraction": float(np.isinf(quotient.tilde_tau).mean()),
            "chronological": chronological,
            "certificate_verified": verified,
        }
        reports = {
            "plane_certificate": {"from": first, "to": last, "witness": witness_to_dict(certificate)},
        }
        return all_infinite and verified and not chronological, numbers, reports
