"""
平坦样本的曲率界

Minkowski 平面的时间曲率以 0 和 -1 为上界（后者缺陷单侧非负），
但不以 1 为上界；反过来以 1 为下界。所有判定都在同一组种子三角形上进行。

@author Ysf
@date 2026-10-16
"""

from typing import Any, Dict

from lorentz_core.comparison import Bound, ModelRegion, curvature_verdict
from lorentz_core.model import get_model

from .base import Scenario, ScenarioResult
from .registry import ScenarioRegistry

# K → 是否应通过上界判定
EXPECTED_UPPER = {0.0: True, -1.0: True, 1.0: False}

# K → 是否应通过下界判定
EXPECTED_LOWER = {1.0: True}


@ScenarioRegistry.register("flat-curvature-bounds")
class FlatCurvatureScenario(Scenario):
    description = "平坦样本：K = 0、-1 上界通过，K = 1 上界失败，K = 1 下界通过"

    def run(self) -> ScenarioResult:
        sampling = self.config.sampling
        tol = self.config.tolerances.pipeline
        region = ModelRegion(get_model(0.0))

        numbers: Dict[str, Any] = {}
        reports: Dict[str, Dict[str, Any]] = {}
        matches = []
        cases = [(Bound.UPPER, K, ok, f"K={K:g}") for K, ok in EXPECTED_UPPER.items()]
        cases += [(Bound.LOWER, K, ok, f"lower-K={K:g}") for K, ok in EXPECTED_LOWER.items()]
        for bound, K, should_pass, key in cases:
            report = curvature_verdict(
                region,
                K,
                bound,
                n_triangles=sampling.triangles,
                n_pairs=sampling.pairs_per_triangle,
                seed=self.seed,
                tol=tol,
                jobs=self.jobs,
            )
            defects = [r.defect for r in report.pairs]
            numbers[key] = {
                "passed": report.passed,
                "expected_pass": should_pass,
                "min_defect": min(defects, default=0.0),
                "max_defect": max(defects, default=0.0),
                "triangles": len(report.triangles),
            }
            reports[key] = report.to_dict()
            matches.append(report.passed == should_pass)

        expected = all(matches)
        parameters = self.base_parameters()
        parameters.update({"triangles": sampling.triangles, "pairs_per_triangle": sampling.pairs_per_triangle})
        return self.finish(
            "flat bounds as expected" if expected else "unexpected curvature verdict",
            expected,
            parameters=parameters,
            numbers=numbers,
            reports=reports,
        )
