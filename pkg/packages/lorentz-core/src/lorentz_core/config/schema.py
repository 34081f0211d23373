"""
运行配置 Schema 定义

使用 Pydantic 定义容差、采样规模与场景几何参数，用于验证 YAML 配置文件。

@author Ysf
@date 2026-10-16
"""

from typing import Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from ..model import COMPOSED_TOL, MEMBERSHIP_TOL, METRIC_TOL, PIPELINE_TOL

Coord = Tuple[float, float]


class ToleranceConfig(BaseModel):
    """数值容差阶梯"""

    membership: float = Field(MEMBERSHIP_TOL, gt=0, description="模型空间成员判定")
    metric: float = Field(METRIC_TOL, gt=0, description="单步度量运算")
    composed: float = Field(COMPOSED_TOL, gt=0, description="复合运算（角、Alexandrov 不等式）")
    pipeline: float = Field(PIPELINE_TOL, gt=0, description="完整流水线（曲率判定）")
    sturm: float = Field(1e-6, gt=0, description="离散 Sturm 比较")

    @model_validator(mode="after")
    def _ordered(self) -> "ToleranceConfig":
        ladder = [self.membership, self.metric, self.composed, self.pipeline]
        if ladder != sorted(ladder):
            raise ValueError("容差必须满足 membership ≤ metric ≤ composed ≤ pipeline")
        return self


class SamplingConfig(BaseModel):
    """采样规模"""

    seed: int = Field(0, description="默认随机种子")
    grid_size: int = Field(41, ge=3, description="连续场景矩形网格每边点数")
    validation_grid_size: int = Field(11, ge=3, description="需要完整公理验证的网格每边点数")
    triangles: int = Field(500, ge=1, description="曲率判定抽取的三角形数")
    pairs_per_triangle: int = Field(36, ge=1, description="每个三角形的边点对数")
    detour_grid: int = Field(100, ge=3, description="绕行函数的参数网格长度")
    oracle_pairs: int = Field(10_000, ge=1, description="与平面闭式 τ 比对的跨侧点对数")
    jobs: int = Field(1, ge=1, description="批处理并行度")


class LscFailureScenario(BaseModel):
    """两点粘合（lsc 失效）"""

    x: Coord = Field((0.0, 1.0), description="第一份平面中的粘合点 (t, s)")
    y: Coord = Field((0.0, 2.0), description="第二份平面中的粘合点 (t, s)")
    p: Coord = Field((-0.5, 0.5), description="∂J⁻(x) 上的点")
    q: Coord = Field((1.0, 2.0), description="I⁺(y) 中的点")
    half_width: float = Field(1.0, gt=0, description="以粘合点为中心的采样矩形半宽")
    margin: float = Field(3.0, ge=1.0, description="缺陷须超过采样模的倍数")


class VerticalLineScenario(BaseModel):
    """沿竖直线粘合"""

    first_line: float = Field(1.0, description="第一份平面中的粘合线 s = first_line")
    second_line: float = Field(2.0, description="第二份平面中的粘合线 s = second_line")
    half_width: float = Field(1.0, gt=0, description="采样矩形半宽")


class OrientationReversalScenario(BaseModel):
    """反转时间定向后粘合"""

    square_side: float = Field(1.0, gt=0, description="闭正方形边长")
    p_fraction: Coord = Field((0.75, 0.25), description="X1 中 ∂J⁻(a¹) 上的点，以边长为单位")
    q_fraction: Coord = Field((0.25, 0.75), description="反向 X2 中 I⁺(a²) 内的点，以边长为单位")
    plane_half_width: float = Field(1.0, gt=0, description="全平面变体的采样半宽")
    margin: float = Field(3.0, ge=1.0, description="缺陷须超过采样模的倍数")


class ReshetnyakScenario(BaseModel):
    """平坦半平面粘合"""

    strip_width: float = Field(0.5, ge=0, description="粘合带变体的带宽")
    extent: float = Field(2.0, gt=0, description="采样矩形半宽")


class ScenarioConfig(BaseModel):
    """各场景的几何参数"""

    lsc_failure: LscFailureScenario = Field(default_factory=LscFailureScenario)
    vertical_line: VerticalLineScenario = Field(default_factory=VerticalLineScenario)
    orientation_reversal: OrientationReversalScenario = Field(default_factory=OrientationReversalScenario)
    reshetnyak: ReshetnyakScenario = Field(default_factory=ReshetnyakScenario)


class LorentzConfig(BaseModel):
    """
    完整运行配置

    对应 defaults/ 下的一个 YAML 配置档
    """

    name: str = Field(..., description="配置档名称")
    description: Optional[str] = Field(None, description="配置档说明")
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    scenarios: ScenarioConfig = Field(default_factory=ScenarioConfig)
