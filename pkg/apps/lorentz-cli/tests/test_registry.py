"""
场景注册表测试

@author Ysf
@date 2026-10-16
"""

import pytest

from lorentz_cli.scenarios import (
    Scenario,
    ScenarioRegistry,
    ScenarioResult,
    UnknownScenarioError,
)
from lorentz_cli.scenarios.point_gluing import PointGluingScenario

SCENARIOS = {
    "lsc-failure-point-gluing",
    "vertical-line-gluing",
    "orientation-reversal",
    "reshetnyak-flat",
    "flat-curvature-bounds",
}


class TestScenarioRegistry:
    """注册与创建"""

    def test_all_registered(self):
        assert SCENARIOS <= set(ScenarioRegistry.list_scenarios())

    def test_list_is_sorted(self):
        names = ScenarioRegistry.list_scenarios()
        assert names == sorted(names)

    def test_describe(self):
        descriptions = ScenarioRegistry.describe()
        assert set(descriptions) == set(ScenarioRegistry.list_scenarios())
        assert all(descriptions.values())

    def test_get(self):
        assert ScenarioRegistry.get("lsc-failure-point-gluing") is PointGluingScenario
        assert ScenarioRegistry.get("missing") is None

    def test_create(self, fast_config):
        scenario = ScenarioRegistry.create("lsc-failure-point-gluing", fast_config, seed=5)
        assert isinstance(scenario, PointGluingScenario)
        assert scenario.seed == 5
        assert scenario.jobs == 1

    def test_unknown(self, fast_config):
        with pytest.raises(UnknownScenarioError, match="vertical-line-gluing"):
            ScenarioRegistry.create("no-such-scenario", fast_config, seed=0)

    def test_duplicate_name(self):
        """同名注册另一个类时报错"""
        with pytest.raises(ValueError):

            @ScenarioRegistry.register("lsc-failure-point-gluing")
            class Impostor(Scenario):
                description = "重复"

                def run(self) -> ScenarioResult:
                    raise NotImplementedError

    def test_reregister_same_class(self):
        ScenarioRegistry.register("lsc-failure-point-gluing")(PointGluingScenario)
        assert ScenarioRegistry.get("lsc-failure-point-gluing") is PointGluingScenario


class TestScenarioResult:
    """场景结果"""

    def test_exit_code(self):
        ok = ScenarioResult(name="s", parameters={}, verdict="v", expected=True)
        bad = ScenarioResult(name="s", parameters={}, verdict="v", expected=False)
        assert ok.exit_code == 0
        assert bad.exit_code == 2

    def test_to_dict_omits_reports(self):
        result = ScenarioResult(
            name="s",
            parameters={"seed": 0},
            verdict="v",
            expected=True,
            numbers={"tau": 1.0},
            reports={"big": {"rows": [1, 2, 3]}},
        )
        data = result.to_dict()
        assert data["scenario"] == "s"
        assert data["numbers"] == {"tau": 1.0}
        assert "reports" not in data
