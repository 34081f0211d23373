"""
运行配置加载器

从 YAML 配置档加载容差与采样配置，环境变量提供默认档与默认种子。

@author Ysf
@date 2026-10-16
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import ValidationError

from .schema import LorentzConfig

logger = logging.getLogger(__name__)

PROFILE_ENV = "LORENTZ_GLUE_PROFILE"
SEED_ENV = "LORENTZ_GLUE_SEED"
LOG_LEVEL_ENV = "LORENTZ_GLUE_LOG_LEVEL"

DEFAULT_PROFILE = "default"


class ConfigError(Exception):
    """配置错误异常"""

    pass


class ConfigLoader:
    """
    运行配置加载器

    支持从以下来源加载配置档：
    1. 内置默认配置档 (defaults/)
    2. 用户自定义配置目录

    使用示例:
        # 加载默认配置档（或 LORENTZ_GLUE_PROFILE 指定的配置档）
        config = ConfigLoader.load()

        # 加载快速配置档
        config = ConfigLoader.load("fast")

        # 列出可用配置档
        profiles = ConfigLoader.list_profiles()
    """

    # 默认配置目录（相对于本文件）
    _defaults_dir: Path = Path(__file__).parent / "defaults"

    # 用户自定义配置目录
    _custom_dir: Optional[Path] = None

    # 配置缓存
    _cache: Dict[str, LorentzConfig] = {}

    # 是否启用缓存
    _cache_enabled: bool = True

    @classmethod
    def set_custom_dir(cls, path: Optional[str | Path]) -> None:
        """
        设置用户自定义配置目录

        Args:
            path: 配置目录路径，None 表示取消
        """
        cls._custom_dir = Path(path) if path is not None else None
        cls.refresh_cache()

    @classmethod
    def set_cache_enabled(cls, enabled: bool) -> None:
        cls._cache_enabled = enabled
        if not enabled:
            cls._cache.clear()

    @classmethod
    def refresh_cache(cls) -> None:
        """清除配置缓存"""
        cls._cache.clear()

    @classmethod
    def default_profile(cls) -> str:
        """环境变量 LORENTZ_GLUE_PROFILE 指定的配置档，未设置时为 default"""
        return os.environ.get(PROFILE_ENV) or DEFAULT_PROFILE

    @classmethod
    def load(cls, profile: Optional[str] = None) -> LorentzConfig:
        """
        加载配置档

        优先级：
        1. 缓存
        2. 用户自定义配置目录
        3. 内置默认配置

        Args:
            profile: 配置档名称，None 时取 default_profile()

        Returns:
            LorentzConfig: 配置对象

        Raises:
            ConfigError: 配置文件不存在或格式错误
        """
        name = profile or cls.default_profile()
        if cls._cache_enabled and name in cls._cache:
            return cls._cache[name]

        data = cls._load_yaml(name)
        data.setdefault("name", name)
        try:
            config = LorentzConfig(**data)
        except ValidationError as e:
            raise ConfigError(f"配置验证失败 [{name}]: {e}") from e

        if cls._cache_enabled:
            cls._cache[name] = config
        logger.debug("已加载配置档 %s", name)
        return config

    @classmethod
    def list_profiles(cls) -> List[str]:
        """列出所有可用的配置档名称"""
        profiles = set()
        for directory in (cls._defaults_dir, cls._custom_dir):
            if directory is None or not directory.exists():
                continue
            for pattern in ("*.yaml", "*.yml"):
                profiles.update(f.stem for f in directory.glob(pattern))
        return sorted(profiles)

    @classmethod
    def resolve_seed(cls, config: LorentzConfig, explicit: Optional[int] = None) -> int:
        """
        确定随机种子

        优先级：显式参数 > LORENTZ_GLUE_SEED > 配置档中的 sampling.seed

        Raises:
            ConfigError: 环境变量不是整数
        """
        if explicit is not None:
            return explicit
        raw = os.environ.get(SEED_ENV)
        if raw is None or raw.strip() == "":
            return config.sampling.seed
        try:
            return int(raw)
        except ValueError as e:
            raise ConfigError(f"{SEED_ENV} 必须是整数: {raw!r}") from e

    @classmethod
    def _load_yaml(cls, profile: str) -> Dict[str, Any]:
        """
        从文件加载 YAML 配置

        Raises:
            ConfigError: 文件不存在或格式错误
        """
        config_path = cls._find_config_file(profile)
        if config_path is None:
            raise ConfigError(f"找不到配置档: {profile}")

        try:
            with open(config_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError(f"YAML 解析错误 [{profile}]: {e}") from e
        except OSError as e:
            raise ConfigError(f"读取配置文件失败 [{profile}]: {e}") from e

        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigError(f"配置文件格式错误 [{profile}]: 根节点必须是字典")
        return data

    @classmethod
    def _find_config_file(cls, profile: str) -> Optional[Path]:
        """自定义目录优先，其次内置默认配置"""
        for directory in (cls._custom_dir, cls._defaults_dir):
            if directory is None or not directory.exists():
                continue
            for ext in (".yaml", ".yml"):
                path = directory / f"{profile}{ext}"
                if path.exists():
                    return path
        return None

    @classmethod
    def validate_config(cls, config_data: Dict[str, Any]) -> List[str]:
        """
        验证配置数据，返回错误列表

        Args:
            config_data: 配置字典

        Returns:
            List[str]: 错误信息列表，空列表表示验证通过
        """
        errors = []
        try:
            LorentzConfig(**config_data)
        except ValidationError as e:
            for error in e.errors():
                loc = ".".join(str(x) for x in error["loc"])
                errors.append(f"{loc}: {error['msg']}")
        return errors

    @classmethod
    def get_config_path(cls, profile: str) -> Optional[Path]:
        return cls._find_config_file(profile)
