"""
场景注册表

@author Ysf
@date 2026-10-16
"""

from typing import Dict, List, Optional, Type

from lorentz_core.config import LorentzConfig

from .base import Scenario


class ScenarioError(Exception):
    """场景错误基类"""

    pass


class UnknownScenarioError(ScenarioError):
    """未注册的场景名"""

    pass


class ScenarioRegistry:
    """
    场景注册表（类级别装饰器模式）

    示例:
        @ScenarioRegistry.register("my-scenario")
        class MyScenario(Scenario):
            ...
    """

    _scenario_classes: Dict[str, Type[Scenario]] = {}

    @classmethod
    def register(cls, name: str):
        """
        注册场景装饰器

        Args:
            name: 场景名称，同时写入类属性 name

        Raises:
            ValueError: 名称已被其他类占用
        """

        def decorator(scenario_class: Type[Scenario]) -> Type[Scenario]:
            existing = cls._scenario_classes.get(name)
            if existing is not None and existing is not scenario_class:
                raise ValueError(f"场景名已注册: {name}")
            scenario_class.name = name
            cls._scenario_classes[name] = scenario_class
            return scenario_class

        return decorator

    @classmethod
    def get(cls, name: str) -> Optional[Type[Scenario]]:
        return cls._scenario_classes.get(name)

    @classmethod
    def list_scenarios(cls) -> List[str]:
        """按名称排序的场景列表"""
        return sorted(cls._scenario_classes)

    @classmethod
    def describe(cls) -> Dict[str, str]:
        return {name: cls._scenario_classes[name].description for name in cls.list_scenarios()}

    @classmethod
    def create(cls, name: str, config: LorentzConfig, seed: int, jobs: int = 1) -> Scenario:
        """
        实例化场景

        Raises:
            UnknownScenarioError: 名称未注册
        """
        scenario_class = cls.get(name)
        if scenario_class is None:
            raise UnknownScenarioError(
                f"未知场景: {name}，可用场景: {', '.join(cls.list_scenarios())}"
            )
        return scenario_class(config, seed, jobs)
