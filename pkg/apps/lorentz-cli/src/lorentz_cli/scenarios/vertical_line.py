"""
沿竖直线粘合：得到 Lorentz 预长度空间

第一份平面中的 s = first_line 与第二份平面中的 s = second_line 按相同的 t 粘合，
两侧使用同一 t 网格，粘合对是精确的点对。

@author Ysf
@date 2026-10-16
"""

import numpy as np

from lorentz_core.amalgamation import GluingSpec, build_quotient, check_map_properties
from lorentz_core.space import isolation_report, max_lsc_defect, validate_space
from lorentz_core.spacefile import properties_to_dict, validation_to_dict

from .base import Scenario, ScenarioResult
from .probes import grid_around, grid_step, probe_scale
from .registry import ScenarioRegistry


@ScenarioRegistry.register("vertical-line-gluing")
class VerticalLineGluingScenario(Scenario):
    description = "按相同 t 粘合两条竖直线，商空间满足全部预长度空间公理"

    def run(self) -> ScenarioResult:
        params = self.config.scenarios.vertical_line
        size = self.config.sampling.validation_grid_size
        tol = self.config.tolerances.metric

        # 1. 两侧网格，中间一列为粘合线
        x1 = grid_around((0.0, params.first_line), params.half_width, size)
        x2 = grid_around((0.0, params.second_line), params.half_width, size)
        column = int(np.argmin(np.abs(np.linspace(-1.0, 1.0, size))))
        pairs = tuple((f"g{i}_{column}", f"g{i}_{column}") for i in range(size))
        spec = GluingSpec(x1, x2, pairs)

        # 2. 商空间与公理
        quotient = build_quotient(spec, tol)
        space = quotient.as_space()
        validation = validate_space(space, tol)
        scale = probe_scale(grid_step(2 * params.half_width, size))
        isolation = isolation_report(space, space.points, [scale])
        properties = check_map_properties(spec, scale=scale, tol=tol)
        (worst_pair, worst_defect) = max_lsc_defect(space, scale)

        # 3. 结论
        holds = validation.success and isolation.passes(scale)
        numbers = {
            "classes": quotient.size,
            "seam_points": len(pairs),
            "axiom_errors": len(validation.errors),
            "isolation_failures": isolation.failures(scale),
            "scale": scale,
            "max_lsc_defect": worst_defect,
            "max_lsc_pair": list(worst_pair),
            "infinite_pairs": int(np.isinf(quotient.tilde_tau).sum()),
            "map_failures": [c.name for c in properties.failures()],
        }
        parameters = self.base_parameters()
        parameters.update({"grid_size": size, "geometry": params.model_dump(mode="json")})
        return self.finish(
            "pre-length space" if holds else "axioms violated",
            holds,
            parameters=parameters,
            numbers=numbers,
            reports={
                "validation": validation_to_dict(validation),
                "properties": properties_to_dict(properties),
            },
        )
