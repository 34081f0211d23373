"""
两点粘合：τ̃ 不下半连续

两份 Minkowski 平面采样，把第一份中的 x 与第二份中的 y 粘合。
p 在 ∂J⁻(x) 上，q 在 I⁺(y) 中，于是 τ̃(p,q) = τ(y,q) > 0；
而 p 附近 J⁻(x) 之外的点 p_n 满足 τ̃(p_n,q) = 0。

@author Ysf
@date 2026-10-16
"""

from lorentz_core.amalgamation import GluingSpec, build_quotient, node_id
from lorentz_core.spacefile import witness_to_dict

from .base import Scenario, ScenarioResult
from .probes import grid_around, grid_step, probe_lsc, probe_scale
from .registry import ScenarioRegistry


@ScenarioRegistry.register("lsc-failure-point-gluing")
class PointGluingScenario(Scenario):
    description = "粘合两个类空分离点，τ̃ 在 ∂J⁻(x) 上不下半连续"

    def run(self) -> ScenarioResult:
        params = self.config.scenarios.lsc_failure
        size = self.config.sampling.grid_size
        tol = self.config.tolerances.metric

        # 1. 采样并粘合
        x1 = grid_around(params.x, params.half_width, size)
        x2 = grid_around(params.y, params.half_width, size)
        x_id, y_id = x1.nearest(params.x), x2.nearest(params.y)
        spec = GluingSpec(x1, x2, ((x_id, y_id),))
        quotient = build_quotient(spec, tol)

        # 2. 探测 (p, q)
        p_id, q_id = x1.nearest(params.p), x2.nearest(params.q)
        p_label = quotient.label_of(node_id(1, p_id))
        q_label = quotient.label_of(node_id(2, q_id))
        step = grid_step(2 * params.half_width, size)
        probe = probe_lsc(quotient, (p_label, q_label), probe_scale(step), x2, (y_id, q_id))

        # 3. 结论
        fails = probe.fails(params.margin, tol)
        numbers = probe.to_dict()
        numbers.update({"margin": params.margin, "grid_step": step, "glued": [x_id, y_id]})
        parameters = self.base_parameters()
        parameters.update({"grid_size": size, "geometry": params.model_dump(mode="json")})
        witness = {
            "from": p_label,
            "to": q_label,
            "witness": witness_to_dict(quotient.witness(p_label, q_label)),
        }
        return self.finish(
            "lsc fails" if fails else "lsc holds",
            fails,
            parameters=parameters,
            numbers=numbers,
            reports={"witness": witness},
        )
