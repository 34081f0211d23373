"""
场景基类

@author Ysf
@date 2026-10-16
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar, Dict, List

from lorentz_core.config import LorentzConfig

logger = logging.getLogger(__name__)


@dataclass
class ScenarioResult:
    """
    场景运行结果

    Attributes:
        name: 场景名称
        parameters: 种子、样本规模与容差
        verdict: 结论描述
        expected: 结论是否与预期一致
        numbers: 关键数值
        reports: 附带的 JSON 报告，键为报告名
        artifacts: 已写出的报告路径
    """

    name: str
    parameters: Dict[str, Any]
    verdict: str
    expected: bool
    numbers: Dict[str, Any] = field(default_factory=dict)
    reports: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    artifacts: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.expected else 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.name,
            "parameters": self.parameters,
            "verdict": self.verdict,
            "expected": self.expected,
            "numbers": self.numbers,
            "artifacts": list(self.artifacts),
        }


class Scenario(ABC):
    """
    可复现的场景

    子类用 @ScenarioRegistry.register(name) 注册，只读取配置档中的参数，
    同一种子下的数值逐位一致。
    """

    name: ClassVar[str] = ""
    description: ClassVar[str] = ""

    def __init__(self, config: LorentzConfig, seed: int, jobs: int = 1):
        self.config = config
        self.seed = seed
        self.jobs = jobs

    @abstractmethod
    def run(self) -> ScenarioResult:
        ...

    def base_parameters(self) -> Dict[str, Any]:
        """所有场景共有的参数"""
        return {
            "profile": self.config.name,
            "seed": self.seed,
            "tolerances": self.config.tolerances.model_dump(),
        }

    def finish(self, verdict: str, expected: bool, **kwargs: Any) -> ScenarioResult:
        level = logging.INFO if expected else logging.WARNING
        logger.log(level, "场景 %s: %s (符合预期: %s)", self.name, verdict, expected)
        return ScenarioResult(name=self.name, verdict=verdict, expected=expected, **kwargs)
