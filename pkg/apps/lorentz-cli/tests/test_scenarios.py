"""
场景测试（快速配置档）

@author Ysf
@date 2026-10-16
"""

import json

import pytest

from lorentz_cli.scenarios import ScenarioRegistry
from lorentz_core.spacefile import to_json


def run_scenario(name, config, seed=0):
    return ScenarioRegistry.create(name, config, seed).run()


class TestPointGluing:
    """两点粘合的 lsc 失效"""

    def test_lsc_fails(self, fast_config):
        result = run_scenario("lsc-failure-point-gluing", fast_config)
        assert result.expected
        assert result.verdict == "lsc fails"
        numbers = result.numbers
        # τ̃(p,q) = τ(y,q) = 1，ε-球内 J⁻(x) 之外的点 τ̃ = 0
        assert numbers["tau"] == pytest.approx(1.0)
        assert numbers["neighbour_tau"] == 0.0
        assert numbers["defect"] > numbers["margin"] * numbers["sampling_modulus"]

    def test_witness_report(self, fast_config):
        result = run_scenario("lsc-failure-point-gluing", fast_config)
        witness = result.reports["witness"]["witness"]
        assert witness["kind"] == "chain"
        assert witness["length"] == pytest.approx(1.0)


class TestVerticalLine:
    """沿竖直线粘合"""

    def test_pre_length_space(self, fast_config):
        result = run_scenario("vertical-line-gluing", fast_config)
        assert result.expected
        assert result.numbers["axiom_errors"] == 0
        assert result.numbers["isolation_failures"] == []
        assert result.numbers["infinite_pairs"] == 0
        assert result.reports["validation"]["success"] is True


class TestOrientationReversal:
    """反转定向"""

    def test_square_and_plane(self, fast_config):
        result = run_scenario("orientation-reversal", fast_config)
        assert result.expected
        square, plane = result.numbers["square"], result.numbers["plane"]
        assert square["causal_compatible"] is False
        assert square["neighbour_tau"] == 0.0
        assert square["tau"] > 0
        assert plane["seam_all_infinite"] is True
        assert plane["certificate_verified"] is True
        assert plane["chronological"] is False

    def test_plane_certificate_report(self, fast_config):
        result = run_scenario("orientation-reversal", fast_config)
        assert result.reports["plane_certificate"]["witness"]["kind"] == "cycle"


class TestFlatGluing:
    """半平面粘合"""

    def test_flat(self, fast_config):
        result = run_scenario("reshetnyak-flat", fast_config)
        assert result.expected
        for variant in ("line", "strip"):
            numbers = result.numbers[variant]
            assert numbers["oracle_max_error"] <= 1e-9
            assert numbers["same_side_max_error"] <= 1e-9
            assert numbers["seam_crossing_triangles"] > 0
            assert numbers["curvature_passed"] is True
        assert result.numbers["strip"]["strip_width"] == fast_config.scenarios.reshetnyak.strip_width


class TestFlatCurvature:
    """平坦样本的曲率界"""

    def test_bounds(self, fast_config):
        result = run_scenario("flat-curvature-bounds", fast_config)
        assert result.expected
        assert result.numbers["K=0"]["passed"] is True
        assert result.numbers["K=-1"]["passed"] is True
        assert result.numbers["K=1"]["passed"] is False
        # K = -1 上界的缺陷单侧非负
        assert result.numbers["K=-1"]["min_defect"] >= -fast_config.tolerances.pipeline
        assert result.numbers["K=1"]["min_defect"] < 0
        assert result.numbers["lower-K=1"]["passed"] is True
        assert result.numbers["lower-K=1"]["max_defect"] <= fast_config.tolerances.pipeline


class TestReproducibility:
    """种子与输出"""

    @pytest.mark.parametrize("name", ["lsc-failure-point-gluing", "flat-curvature-bounds"])
    def test_byte_identical(self, fast_config, name):
        first = run_scenario(name, fast_config, seed=11)
        second = run_scenario(name, fast_config, seed=11)
        assert to_json(first.to_dict()) == to_json(second.to_dict())
        assert to_json(first.reports) == to_json(second.reports)

    def test_out_directory(self, run_cli, tmp_path):
        """报告只写在 --out 目录内"""
        out = tmp_path / "reports"
        code, _, data = run_cli("scenario", "run", "lsc-failure-point-gluing", "--out", out)
        assert code == 0
        assert data["expected"] is True
        written = sorted(p for p in tmp_path.rglob("*") if p.is_file())
        assert written
        assert all(p.parent == out for p in written)
        assert {str(p) for p in written} == set(data["artifacts"])
        summary = json.loads((out / "lsc-failure-point-gluing.json").read_text(encoding="utf-8"))
        assert summary["verdict"] == "lsc fails"

    def test_run_from_cli(self, run_cli):
        code, _, data = run_cli("scenario", "run", "vertical-line-gluing", "--seed", "4")
        assert code == 0
        assert data["parameters"]["seed"] == 4
        assert data["parameters"]["profile"] == "fast"
