"""
有限空间测试

@author Ysf
@date 2026-10-16
"""

import math

import numpy as np
import pytest

from lorentz_core.model import get_model, tau_K
from lorentz_core.space import (
    CurveDirection,
    DiscreteCausalCurve,
    FiniteLorentzSpace,
    MalformedSpace,
    NotCausal,
    UnknownPoint,
    isolation_report,
    line_sample,
    lsc_defect,
    realizing_points,
    restrict_space,
    sample_model_points,
    sampling_modulus,
    tau_length,
    validate_space,
)


def with_matrices(space: FiniteLorentzSpace, **changes) -> FiniteLorentzSpace:
    """复制空间并替换部分矩阵"""
    fields = {name: np.array(getattr(space, name)) for name in ("d", "chron", "causal", "tau")}
    fields.update(changes)
    return FiniteLorentzSpace(points=space.points, **fields)


class TestConstruction:
    """构造测试"""

    def test_from_relations(self, chain_space):
        assert chain_space.size == 3
        assert chain_space.tau_of("x", "z") == 2.5
        assert chain_space.leq("x", "x")
        assert chain_space.ll("x", "y")
        assert not chain_space.ll("y", "x")
        assert chain_space.d_of("x", "y") == 1.0

    def test_duplicate_ids(self):
        with pytest.raises(MalformedSpace):
            FiniteLorentzSpace.from_relations(["a", "a"], tau={}, causal=[])

    def test_shape_mismatch(self):
        with pytest.raises(MalformedSpace):
            FiniteLorentzSpace(("a",), np.zeros((2, 2)), np.zeros((1, 1), bool), np.ones((1, 1), bool), np.zeros((1, 1)))

    def test_unknown_point(self, chain_space):
        with pytest.raises(UnknownPoint):
            chain_space.index("w")
        with pytest.raises(UnknownPoint):
            FiniteLorentzSpace.from_relations(["a"], tau={("a", "b"): 1.0}, causal=[])

    def test_matrices_are_read_only(self, chain_space):
        with pytest.raises(ValueError):
            chain_space.tau[0, 1] = 5.0

    def test_sampled_tau_matches_model(self, rng):
        for K in (-1.0, 0.0, 1.0):
            model = get_model(K)
            pts = [model.chart(*rng.uniform(-0.5, 0.5, size=2)) for _ in range(12)]
            space = sample_model_points(model, pts)
            for i, p in enumerate(pts):
                for j, q in enumerate(pts):
                    assert space.tau[i, j] == pytest.approx(tau_K(K, p, q), abs=1e-12)

    def test_nearest(self, small_grid):
        assert small_grid.nearest((0.0, -1.0)) == "g0_0"
        assert small_grid.nearest((2.0, 1.0)) == "g4_4"


class TestValidateSpace:
    """公理验证测试"""

    def test_one_point(self):
        space = FiniteLorentzSpace.from_relations(["o"], tau={}, causal=[])
        assert validate_space(space).success

    def test_valid_chain(self, chain_space):
        assert validate_space(chain_space).success

    def test_reverse_triangle_violation(self):
        space = FiniteLorentzSpace.from_relations(
            ["x", "y", "z"],
            tau={("x", "y"): 1.0, ("y", "z"): 1.0, ("x", "z"): 1.5},
            causal=[("x", "y"), ("y", "z"), ("x", "z")],
        )
        result = validate_space(space)
        assert not result.success
        assert result.axioms() == ["reverse_triangle"]
        assert result.errors[0].witness == ("x", "y", "z")

    def test_minkowski_diamond(self, diamond64):
        result = validate_space(diamond64)
        assert result.success, result.errors[:3]

    def test_grid(self, small_grid):
        assert validate_space(small_grid).success

    def test_injected_tau_without_chron(self, small_grid):
        tau = np.array(small_grid.tau)
        i, j = small_grid.index("g0_0"), small_grid.index("g0_4")
        tau[i, j] = 0.3
        assert "tau_chron" in validate_space(with_matrices(small_grid, tau=tau)).axioms()

    def test_injected_broken_transitivity(self, small_grid):
        chron = np.array(small_grid.chron)
        i, j = small_grid.index("g0_2"), small_grid.index("g4_2")
        chron[i, j] = False
        result = validate_space(with_matrices(small_grid, chron=chron))
        assert "≪_transitive" in result.axioms()
        assert "tau_chron" in result.axioms()

    def test_injected_asymmetric_metric(self, small_grid):
        d = np.array(small_grid.d)
        d[0, 1] += 0.5
        assert "metric_symmetry" in validate_space(with_matrices(small_grid, d=d)).axioms()

    def test_injected_non_reflexive(self, chain_space):
        causal = np.array(chain_space.causal)
        causal[1, 1] = False
        assert "causal_reflexive" in validate_space(with_matrices(chain_space, causal=causal)).axioms()

    def test_infinite_tau_absorbs(self):
        space = FiniteLorentzSpace.from_relations(
            ["x", "y", "z"],
            tau={("x", "y"): math.inf, ("y", "z"): 1.0, ("x", "z"): math.inf},
            causal=[("x", "y"), ("y", "z"), ("x", "z")],
        )
        result = validate_space(space)
        assert result.success
        assert result.warnings


class TestTauLength:
    """τ-长度测试"""

    def test_single_segment(self, chain_space):
        assert tau_length(chain_space, DiscreteCausalCurve(("x", "y"))) == 1.0

    def test_straight_and_broken(self, flat):
        pts = [flat.chart(0, 0), flat.chart(1, 0), flat.chart(2, 0), flat.chart(1, 0.5)]
        space = sample_model_points(flat, pts, ["a", "b", "c", "k"])
        assert tau_length(space, DiscreteCausalCurve(("a", "b", "c"), timelike=True)) == pytest.approx(2.0)
        assert tau_length(space, DiscreteCausalCurve(("a", "k", "c"))) == pytest.approx(2 * math.sqrt(0.75))

    def test_past_direction(self, chain_space):
        curve = DiscreteCausalCurve(("z", "y", "x"), direction=CurveDirection.PAST)
        assert tau_length(chain_space, curve) == 2.0

    def test_not_causal(self, chain_space):
        with pytest.raises(NotCausal):
            tau_length(chain_space, DiscreteCausalCurve(("y", "x")))

    def test_coarsening_increases_and_bounded(self, flat):
        space = line_sample(flat, (0.0, 0.0), (2.0, 0.6), 9)
        ids = [f"l{i}" for i in range(9)]
        full = tau_length(space, DiscreteCausalCurve(tuple(ids)))
        coarse = tau_length(space, DiscreteCausalCurve(tuple(ids[::2])))
        assert full <= coarse + 1e-12
        assert coarse <= space.tau_of("l0", "l8") + 1e-12

    def test_realizing_points_on_segment(self, flat):
        space = line_sample(flat, (0.0, 0.0), (2.0, 0.0), 5)
        assert realizing_points(space, "l0", "l4") == ["l0", "l1", "l2", "l3", "l4"]


class TestLscDefect:
    """下半连续缺陷测试"""

    def test_zero_scale(self, small_grid):
        assert all(value == 0.0 for _, value in lsc_defect(small_grid, 0.0))

    def test_continuous_sample_bounded_by_modulus(self, diamond64):
        for eps in (0.1, 0.3):
            modulus = sampling_modulus(diamond64, eps)
            for _, value in lsc_defect(diamond64, eps):
                assert -1e-12 <= value <= modulus + 1e-12

    def test_selected_pairs(self, small_grid):
        out = lsc_defect(small_grid, 0.6, pairs=[("g0_2", "g4_2")])
        assert len(out) == 1
        (pair, value), = out
        assert pair == ("g0_2", "g4_2")
        assert value > 0


class TestIsolation:
    """非类时局部孤立测试"""

    def test_timelike_geodesic_passes(self, flat):
        space = line_sample(flat, (0.0, 0.0), (2.0, 0.0), 11)
        report = isolation_report(space, space.points, [0.25, 1.0])
        assert report.passes(0.25)
        assert report.passes(1.0)
        assert not report.passes(0.1)
        assert report.entries["l0"].future_witness[0.25] == "l1"

    def test_spacelike_pair_fails(self, small_grid):
        report = isolation_report(small_grid, ["g0_0", "g0_4"], [0.5, 5.0])
        assert not report.passes(5.0)
        assert set(report.failures(5.0)) == {"g0_0", "g0_4"}

    def test_empty_future_is_vacuous(self, small_grid):
        top = [f"g4_{j}" for j in range(5)]
        report = isolation_report(small_grid, top, [1.0])
        assert report.passes_future(1.0)
        assert not report.entries["g4_0"].has_future


class TestRestrictSpace:
    """子空间限制测试"""

    def test_identity(self, small_grid):
        sub = restrict_space(small_grid, small_grid.points)
        assert sub.points == small_grid.points
        assert np.array_equal(sub.tau, small_grid.tau)

    def test_single_point(self, small_grid):
        sub = restrict_space(small_grid, ["g2_2"])
        assert sub.size == 1
        assert validate_space(sub).success

    def test_spacelike_line(self, small_grid):
        row = [f"g0_{j}" for j in range(5)]
        sub = restrict_space(small_grid, row)
        assert not sub.chron.any()
        assert np.all(sub.tau == 0.0)
        assert validate_space(sub).success

    def test_preserves_validity(self, diamond64, rng):
        subset = list(rng.choice(diamond64.points, size=20, replace=False))
        sub = restrict_space(diamond64, subset)
        assert validate_space(sub).success
        assert sub.coords is not None
