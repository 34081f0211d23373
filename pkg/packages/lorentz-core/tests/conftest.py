"""
Lorentz Core 测试配置

@author Ysf
@date 2026-10-16
"""

import numpy as np
import pytest

from lorentz_core.amalgamation import GluingSpec
from lorentz_core.model import get_model
from lorentz_core.space import FiniteLorentzSpace, diamond_sample, minkowski_grid


@pytest.fixture
def rng():
    """固定种子的随机数生成器"""
    return np.random.default_rng(20261016)


@pytest.fixture
def flat():
    """Minkowski 平面"""
    return get_model(0.0)


@pytest.fixture
def diamond64() -> FiniteLorentzSpace:
    """Minkowski 平面因果菱形中的 64 点样本"""
    return diamond_sample(get_model(0.0), n=64, seed=7)


@pytest.fixture
def small_grid() -> FiniteLorentzSpace:
    """[0,2]×[-1,1] 上 5×5 网格"""
    return minkowski_grid(t_range=(0.0, 2.0), x_range=(-1.0, 1.0), shape=(5, 5))


@pytest.fixture
def chain_space() -> FiniteLorentzSpace:
    """三点 x ≤ y ≤ z，τ(x,y)=τ(y,z)=1，τ(x,z)=2.5"""
    return FiniteLorentzSpace.from_relations(
        ["x", "y", "z"],
        tau={("x", "y"): 1.0, ("y", "z"): 1.0, ("x", "z"): 2.5},
        causal=[("x", "y"), ("y", "z"), ("x", "z")],
    )


@pytest.fixture
def seam_spec() -> GluingSpec:
    """X1: x ≤ a, τ=1；X2: a ≤ y, τ=2；粘合 a ∼ a"""
    x1 = FiniteLorentzSpace.from_relations(["x", "a"], tau={("x", "a"): 1.0}, causal=[("x", "a")])
    x2 = FiniteLorentzSpace.from_relations(["a", "y"], tau={("a", "y"): 2.0}, causal=[("a", "y")])
    return GluingSpec(x1, x2, (("a", "a"),))


@pytest.fixture
def cycle_spec() -> GluingSpec:
    """X1: a ≤ b，X2: b ≤ a，τ 均为 1；粘合 a ∼ a, b ∼ b，存在正环"""
    x1 = FiniteLorentzSpace.from_relations(["a", "b"], tau={("a", "b"): 1.0}, causal=[("a", "b")])
    x2 = FiniteLorentzSpace.from_relations(["a", "b"], tau={("b", "a"): 1.0}, causal=[("b", "a")])
    return GluingSpec(x1, x2, (("a", "a"), ("b", "b")))
