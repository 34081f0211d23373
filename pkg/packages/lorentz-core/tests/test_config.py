"""
运行配置模块单元测试

@author Ysf
@date 2026-10-16
"""

import pytest

from lorentz_core.config import (
    PROFILE_ENV,
    SEED_ENV,
    ConfigError,
    ConfigLoader,
    LorentzConfig,
    ToleranceConfig,
)


@pytest.fixture(autouse=True)
def clean_loader(monkeypatch):
    """每个测试前后重置加载器状态与环境变量"""
    monkeypatch.delenv(PROFILE_ENV, raising=False)
    monkeypatch.delenv(SEED_ENV, raising=False)
    ConfigLoader.set_custom_dir(None)
    ConfigLoader.set_cache_enabled(True)
    yield
    ConfigLoader.set_custom_dir(None)
    ConfigLoader.refresh_cache()


class TestConfigLoader:
    """配置加载器测试"""

    def test_list_profiles(self):
        profiles = ConfigLoader.list_profiles()
        assert "default" in profiles
        assert "fast" in profiles

    def test_load_default(self):
        """默认配置档与容差阶梯"""
        config = ConfigLoader.load()

        assert isinstance(config, LorentzConfig)
        assert config.name == "default"
        assert config.tolerances.membership == 1e-12
        assert config.tolerances.metric == 1e-9
        assert config.tolerances.composed == 1e-8
        assert config.tolerances.pipeline == 1e-7
        assert config.tolerances.sturm == 1e-6
        assert config.sampling.grid_size == 41
        assert config.sampling.detour_grid == 100
        assert config.scenarios.lsc_failure.x == (0.0, 1.0)
        assert config.scenarios.lsc_failure.y == (0.0, 2.0)

    def test_load_fast(self):
        """快速配置档缩小规模，未给出的部分取默认值"""
        config = ConfigLoader.load("fast")
        default = ConfigLoader.load("default")

        assert config.sampling.grid_size < default.sampling.grid_size
        assert config.sampling.triangles < default.sampling.triangles
        assert config.tolerances == default.tolerances
        assert config.scenarios == default.scenarios

    def test_profile_from_env(self, monkeypatch):
        monkeypatch.setenv(PROFILE_ENV, "fast")
        assert ConfigLoader.load().name == "fast"

    def test_load_nonexistent_profile(self):
        with pytest.raises(ConfigError) as exc_info:
            ConfigLoader.load("nonexistent_profile")
        assert "找不到配置档" in str(exc_info.value)

    def test_cache_behavior(self):
        ConfigLoader.refresh_cache()
        config1 = ConfigLoader.load("default")
        config2 = ConfigLoader.load("default")
        assert config1 is config2

        ConfigLoader.refresh_cache()
        assert ConfigLoader.load("default") is not config1

    def test_disable_cache(self):
        ConfigLoader.set_cache_enabled(False)
        assert ConfigLoader.load("default") is not ConfigLoader.load("default")

    def test_custom_dir_overrides_defaults(self, tmp_path):
        """自定义目录中的同名配置档优先"""
        (tmp_path / "default.yaml").write_text("sampling:\n  grid_size: 9\n", encoding="utf-8")
        (tmp_path / "tiny.yml").write_text("sampling:\n  triangles: 3\n", encoding="utf-8")
        ConfigLoader.set_custom_dir(tmp_path)

        assert ConfigLoader.load("default").sampling.grid_size == 9
        assert ConfigLoader.load("tiny").sampling.triangles == 3
        assert "tiny" in ConfigLoader.list_profiles()
        assert ConfigLoader.get_config_path("tiny") == tmp_path / "tiny.yml"

    def test_invalid_yaml(self, tmp_path):
        (tmp_path / "broken.yaml").write_text("sampling: [unclosed\n", encoding="utf-8")
        ConfigLoader.set_custom_dir(tmp_path)
        with pytest.raises(ConfigError, match="YAML 解析错误"):
            ConfigLoader.load("broken")

    def test_root_must_be_mapping(self, tmp_path):
        (tmp_path / "listy.yaml").write_text("- 1\n- 2\n", encoding="utf-8")
        ConfigLoader.set_custom_dir(tmp_path)
        with pytest.raises(ConfigError, match="根节点必须是字典"):
            ConfigLoader.load("listy")

    def test_validation_error(self, tmp_path):
        (tmp_path / "bad.yaml").write_text("sampling:\n  grid_size: 1\n", encoding="utf-8")
        ConfigLoader.set_custom_dir(tmp_path)
        with pytest.raises(ConfigError, match="配置验证失败"):
            ConfigLoader.load("bad")


class TestSeedResolution:
    """随机种子优先级测试"""

    def test_explicit_wins(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "11")
        config = ConfigLoader.load()
        assert ConfigLoader.resolve_seed(config, 5) == 5

    def test_env_over_profile(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "11")
        assert ConfigLoader.resolve_seed(ConfigLoader.load()) == 11

    def test_profile_fallback(self):
        config = ConfigLoader.load()
        assert ConfigLoader.resolve_seed(config) == config.sampling.seed

    def test_bad_env_seed(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "seven")
        with pytest.raises(ConfigError, match=SEED_ENV):
            ConfigLoader.resolve_seed(ConfigLoader.load())


class TestConfigSchema:
    """配置 Schema 测试"""

    def test_validate_config_ok(self):
        assert ConfigLoader.validate_config({"name": "x"}) == []

    def test_validate_config_errors(self):
        errors = ConfigLoader.validate_config({"name": "x", "sampling": {"triangles": 0}})
        assert any(e.startswith("sampling.triangles") for e in errors)

    def test_missing_name(self):
        errors = ConfigLoader.validate_config({})
        assert any(e.startswith("name") for e in errors)

    def test_tolerance_ladder_order(self):
        with pytest.raises(ValueError):
            ToleranceConfig(metric=1e-6, composed=1e-8)

    def test_negative_tolerance(self):
        errors = ConfigLoader.validate_config({"name": "x", "tolerances": {"sturm": -1.0}})
        assert any(e.startswith("tolerances.sturm") for e in errors)
