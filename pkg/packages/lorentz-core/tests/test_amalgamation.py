"""
粘合构造测试

@author Ysf
@date 2026-10-16
"""

import math

import numpy as np
import pytest

from lorentz_core.amalgamation import (
    Chain,
    CycleCertificate,
    DiamondCase,
    GluedHalfPlanes,
    GluingSpec,
    HypothesesNotMet,
    InvalidChain,
    NotABijection,
    NotChronological,
    TooLarge,
    UnboundedSeparation,
    brute_force_quotient_distance,
    brute_force_quotient_tau,
    build_quotient,
    causal_diamond,
    check_map_properties,
    disjoint_union,
    normalize_chain,
    short_form_tau,
    timelike_chain_witness,
)
from lorentz_core.model import get_model
from lorentz_core.space import (
    FiniteLorentzSpace,
    line_sample,
    minkowski_grid,
    sample_model_points,
    validate_space,
)


def random_spec(seed: int) -> GluingSpec:
    """两个随机 Minkowski 样本之间的随机粘合，总点数不超过 10"""
    rng = np.random.default_rng(seed)
    flat = get_model(0.0)
    n1, n2 = (int(v) for v in rng.integers(2, 6, size=2))
    x1 = sample_model_points(flat, [flat.chart(*rng.uniform(-1, 1, size=2)) for _ in range(n1)], [f"a{i}" for i in range(n1)])
    x2 = sample_model_points(flat, [flat.chart(*rng.uniform(-1, 1, size=2)) for _ in range(n2)], [f"b{i}" for i in range(n2)])
    k = int(rng.integers(0, min(n1, n2) + 1))
    left = [str(p) for p in rng.choice(x1.points, size=k, replace=False)]
    right = [str(p) for p in rng.choice(x2.points, size=k, replace=False)]
    return GluingSpec(x1, x2, tuple(zip(left, right)))


def reversed_squares() -> GluingSpec:
    """两个闭正方形沿竖边粘合，时间方向相反：X1 右边 (t,1) ↦ X2 左边 (1-t,0)"""
    x1 = minkowski_grid((0.0, 1.0), (0.0, 1.0), (3, 3))
    x2 = minkowski_grid((0.0, 1.0), (0.0, 1.0), (3, 3))
    pairs = tuple((f"g{i}_2", f"g{2 - i}_0") for i in (2, 1, 0))
    return GluingSpec(x1, x2, pairs)


class TestDisjointUnion:
    """不相交并测试"""

    def test_empty_second_space(self, chain_space):
        union = disjoint_union(chain_space, FiniteLorentzSpace.empty())
        assert union.points == ("1.x", "1.y", "1.z")
        assert np.array_equal(union.tau, chain_space.tau)
        assert np.array_equal(union.causal, chain_space.causal)

    def test_two_points(self):
        one = FiniteLorentzSpace.from_relations(["o"], tau={}, causal=[])
        union = disjoint_union(one, one)
        assert union.d[0, 1] == math.inf
        assert union.tau[0, 1] == 0.0
        assert validate_space(union).success

    def test_minkowski_blocks(self):
        flat = get_model(0.0)
        a = line_sample(flat, (0.0, 0.0), (2.0, 0.3), 32)
        b = line_sample(flat, (0.0, 1.0), (2.0, 1.2), 32)
        union = disjoint_union(a, b)
        assert not union.chron[:32, 32:].any()
        assert np.all(union.tau[:32, 32:] == 0.0)
        assert validate_space(union).success


class TestMapProperties:
    """粘合映射性质测试"""

    def test_identity_gluing(self, small_grid):
        spec = GluingSpec(small_grid, small_grid, tuple((p, p) for p in small_grid.points))
        report = check_map_properties(spec)
        assert not report.failures()
        assert report.passed("signed_distance_preserving")
        assert all(report.inverse.values())
        assert report.lipschitz_constant == pytest.approx(1.0)

    def test_null_to_spacelike(self, flat):
        null = line_sample(flat, (0.0, 0.0), (1.0, 1.0), 5)
        spacelike = line_sample(flat, (0.0, 0.0), (0.0, 1.0), 5)
        spec = GluingSpec(null, spacelike, tuple((p, p) for p in null.points))
        report = check_map_properties(spec)
        assert report.passed("tau_preserving")
        assert report.passed("ll_preserving")
        assert not report.passed("leq_preserving")
        assert report.checks["leq_preserving"].witness[:2] == ("l0", "l1")
        assert report.inverse["leq_preserving"] is False

    def test_reversed_squares(self):
        report = check_map_properties(reversed_squares())
        check = report.checks["causal_compatible"]
        assert check.passed is False
        assert check.witness == ("g2_2", "g0_0")

    def test_declared_failure_is_warning(self, flat):
        null = line_sample(flat, (0.0, 0.0), (1.0, 1.0), 3)
        spacelike = line_sample(flat, (0.0, 0.0), (0.0, 1.0), 3)
        spec = GluingSpec(null, spacelike, tuple((p, p) for p in null.points))
        spec = GluingSpec(spec.x1, spec.x2, spec.pairs, spec.declared.model_copy(update={"leq_preserving": True}))
        assert check_map_properties(spec).warnings
        assert build_quotient(spec).warnings

    def test_not_a_bijection(self, chain_space):
        with pytest.raises(NotABijection):
            check_map_properties(GluingSpec(chain_space, chain_space, (("x", "x"), ("y", "x"))))
        with pytest.raises(NotABijection):
            build_quotient(GluingSpec(chain_space, chain_space, (("x", "w"),)))

    def test_lipschitz_scale(self, flat):
        a = line_sample(flat, (0.0, 0.0), (0.0, 1.0), 5)
        b = line_sample(flat, (0.0, 0.0), (0.0, 2.0), 5)
        report = check_map_properties(GluingSpec(a, b, tuple((p, p) for p in a.points)), scale=0.3)
        assert report.lipschitz_constant == pytest.approx(2.0)
        assert report.passed("bi_lipschitz")


class TestBuildQuotient:
    """商空间构造测试"""

    def test_no_identification(self, chain_space, small_grid):
        spec = GluingSpec(chain_space, small_grid)
        q = build_quotient(spec)
        union = disjoint_union(chain_space, small_grid)
        assert q.labels == union.points
        assert np.array_equal(q.tilde_tau, union.tau)
        np.testing.assert_allclose(q.tilde_d, union.d, atol=1e-12)

    def test_cross_seam(self, seam_spec):
        q = build_quotient(seam_spec)
        assert q.labels == ("1.x", "1.a~2.a", "2.y")
        assert q.tau("1.x", "2.y") == pytest.approx(3.0)
        assert q.ll("1.x", "2.y")
        assert q.d("1.x", "2.y") == pytest.approx(2.0)
        chain = q.witness("1.x", "2.y")
        assert isinstance(chain, Chain)
        assert chain.pairs == (("1.x", "1.a"), ("2.a", "2.y"))
        assert chain.length == pytest.approx(3.0)

    def test_member_lookup(self, seam_spec):
        q = build_quotient(seam_spec)
        assert q.label_of("2.a") == "1.a~2.a"
        assert q.tau("1.a", "2.y") == q.tau("2.a", "2.y") == 2.0

    def test_positive_cycle(self, cycle_spec):
        q = build_quotient(cycle_spec)
        assert np.all(np.isinf(q.tilde_tau))
        cert = q.witness("1.a~2.a", "1.b~2.b")
        assert isinstance(cert, CycleCertificate)
        assert cert.weight == pytest.approx(2.0)
        assert cert.verify(cycle_spec)

    def test_forged_certificate_rejected(self, cycle_spec):
        forged = CycleCertificate(("1.b", "1.a", "2.a", "2.b", "1.b"), 2.0)
        assert not forged.verify(cycle_spec)

    def test_no_chain_witness(self, seam_spec):
        assert build_quotient(seam_spec).witness("2.y", "1.x") is None

    @pytest.mark.parametrize("seed", range(10))
    def test_quotient_is_causal_space(self, seed):
        spec = random_spec(seed)
        q = build_quotient(spec)
        result = validate_space(q.as_space())
        causal_axioms = {"causal_reflexive", "≤_transitive", "≪_transitive", "chron_in_causal", "reverse_triangle", "tau_chron"}
        assert not causal_axioms & set(result.axioms())

    @pytest.mark.parametrize("seed", range(10))
    def test_monotone_over_base(self, seed):
        spec = random_spec(seed)
        q = build_quotient(spec)
        union = spec.index.union
        for i, u in enumerate(union.points):
            for j, v in enumerate(union.points):
                assert q.tau(u, v) >= union.tau[i, j] - 1e-12
                if union.causal[i, j]:
                    assert q.leq(u, v)

    def test_metric_positive_on_half_planes(self):
        spec = GluedHalfPlanes(0.0).to_spec((0.0, 1.0), (-1.0, 1.0), (3, 5))
        q = build_quotient(spec)
        off = ~np.eye(q.size, dtype=bool)
        assert np.all(q.tilde_d[off] > 0)


class TestBruteForceOracle:
    """穷举预言机测试"""

    def test_seam_example(self, seam_spec):
        result = brute_force_quotient_tau(seam_spec)
        assert result.tau[0, 2] == pytest.approx(3.0)
        assert not result.unbounded

    def test_no_identification(self, chain_space):
        spec = GluingSpec(chain_space, chain_space)
        result = brute_force_quotient_tau(spec)
        assert np.array_equal(result.tau, disjoint_union(chain_space, chain_space).tau)

    def test_cycle_growth(self, cycle_spec):
        result = brute_force_quotient_tau(cycle_spec)
        assert result.unbounded
        assert np.all(np.isinf(result.tau))

    def test_too_large(self, small_grid, chain_space):
        with pytest.raises(TooLarge):
            brute_force_quotient_tau(GluingSpec(small_grid, chain_space))

    def test_unrelated_pairs_zero(self, seam_spec):
        """因果无关的类之间 τ̃ = 0，而不是 ∞"""
        result = brute_force_quotient_tau(seam_spec)
        assert result.tau[2, 0] == 0.0
        assert not result.reach[2, 0]
        assert not np.any(np.isinf(result.tau))

    def test_unrelated_points_beside_cycle(self, cycle_spec):
        """正环之外的孤立点与环上的类之间 τ̃ = 0"""
        x1 = cycle_spec.x1
        x2 = FiniteLorentzSpace.from_relations(
            ["a", "b", "c"], tau={("b", "a"): 1.0}, causal=[("b", "a")]
        )
        result = brute_force_quotient_tau(GluingSpec(x1, x2, (("a", "a"), ("b", "b"))))
        q = build_quotient(GluingSpec(x1, x2, (("a", "a"), ("b", "b"))))
        assert result.unbounded
        lone = [i for i, label in enumerate(q.labels) if label == "2.c"][0]
        others = [i for i in range(len(q.labels)) if i != lone]
        assert np.all(result.tau[lone, others] == 0.0)
        assert np.all(result.tau[others, lone] == 0.0)
        assert np.all(np.isinf(result.tau[np.ix_(others, others)]))
        np.testing.assert_array_equal(q.tilde_tau, result.tau)

    @pytest.mark.parametrize("seed", range(200))
    def test_matches_compiler(self, seed):
        spec = random_spec(seed)
        q = build_quotient(spec)
        result = brute_force_quotient_tau(spec)
        np.testing.assert_allclose(q.tilde_tau, result.tau, atol=1e-9)
        assert np.array_equal(q.tilde_causal, result.reach)
        np.testing.assert_allclose(q.tilde_d, brute_force_quotient_distance(spec), atol=1e-9)


class TestChains:
    """链规范化与类时链测试"""

    def test_normal_chain_unchanged(self, seam_spec):
        chain = Chain("1.x", "2.y", (("1.x", "1.a"), ("2.a", "2.y")), 3.0)
        assert normalize_chain(seam_spec, chain) == chain

    def test_merge_trivial_link(self, chain_space):
        spec = GluingSpec(chain_space, FiniteLorentzSpace.empty())
        chain = Chain("1.x", "1.z", (("1.x", "1.y"), ("1.y", "1.z")), 2.0)
        out = normalize_chain(spec, chain)
        assert out.pairs == (("1.x", "1.z"),)
        assert out.length == pytest.approx(2.5)
        assert normalize_chain(spec, out) == out

    def test_pin_start(self, seam_spec):
        chain = Chain("2.a", "2.y", (("1.a", "1.a"), ("2.a", "2.y")), 2.0)
        start_pinned = Chain("1.a", "2.y", (("2.a", "2.y"),), 2.0)
        out = normalize_chain(seam_spec, start_pinned)
        assert out.pairs == (("1.a", "1.a"), ("2.a", "2.y"))
        assert out.length == pytest.approx(2.0)
        assert normalize_chain(seam_spec, chain).length == pytest.approx(2.0)

    def test_invalid_chain(self, seam_spec):
        with pytest.raises(InvalidChain):
            normalize_chain(seam_spec, Chain("1.x", "2.y", (("1.x", "1.a"), ("2.y", "2.a")), 0.0))
        with pytest.raises(InvalidChain):
            normalize_chain(seam_spec, Chain("1.x", "2.y", (), 0.0))

    def test_timelike_single_space(self, chain_space):
        spec = GluingSpec(chain_space, FiniteLorentzSpace.empty())
        q = build_quotient(spec)
        result = timelike_chain_witness(q, spec, "1.x", "1.y")
        assert result.chain.pairs == (("1.x", "1.y"),)
        assert result.gap == 0.0

    def test_timelike_cross_seam(self, seam_spec):
        q = build_quotient(seam_spec)
        result = timelike_chain_witness(q, seam_spec, "1.x", "2.y")
        assert result.chain.pairs == (("1.x", "1.a"), ("2.a", "2.y"))
        assert result.gap == pytest.approx(0.0)
        union = seam_spec.index.union
        assert all(union.ll(a, b) for a, b in result.chain.pairs)

    def test_not_chronological(self, seam_spec):
        q = build_quotient(seam_spec)
        with pytest.raises(NotChronological):
            timelike_chain_witness(q, seam_spec, "2.y", "1.x")

    def test_unbounded(self, cycle_spec):
        q = build_quotient(cycle_spec)
        with pytest.raises(UnboundedSeparation):
            timelike_chain_witness(q, cycle_spec, "1.a", "1.b")


class TestShortForm:
    """短形式测试"""

    def test_seam_example(self, seam_spec):
        result = short_form_tau(seam_spec, "1.x", "2.y")
        assert result.value == pytest.approx(3.0)
        assert result.seam_class == "1.a~2.a"

    def test_empty_intersection(self):
        x1 = FiniteLorentzSpace.from_relations(["w", "a"], tau={}, causal=[])
        x2 = FiniteLorentzSpace.from_relations(["a", "y"], tau={("a", "y"): 2.0}, causal=[("a", "y")])
        result = short_form_tau(GluingSpec(x1, x2, (("a", "a"),)), "1.w", "2.y")
        assert result.value == 0.0
        assert result.seam_class is None

    def test_hypotheses_not_met(self, cycle_spec):
        with pytest.raises(HypothesesNotMet):
            short_form_tau(cycle_spec, "1.a", "2.b")

    def test_continuum_half_planes(self):
        value, seam = GluedHalfPlanes().short_form_tau((0.0, -1.0), (3.0, 1.0))
        assert value == pytest.approx(math.sqrt(5.0), abs=1e-12)
        assert seam == pytest.approx((1.5, 0.0))

    def test_matches_quotient_on_sample(self):
        spec = GluedHalfPlanes(0.0).to_spec((0.0, 2.0), (-1.0, 1.0), (5, 5))
        q = build_quotient(spec)
        report = check_map_properties(spec)
        left = [f"1.{p}" for p in spec.x1.points if p not in spec.seam1]
        right = [f"2.{p}" for p in spec.x2.points if p not in spec.seam2]
        for x in left:
            for y in right:
                assert short_form_tau(spec, x, y, report).value == pytest.approx(q.tau(x, y), abs=1e-9)


class TestCausalDiamond:
    """因果菱形测试"""

    def test_trivial_seam_class(self, seam_spec):
        q = build_quotient(seam_spec)
        report = causal_diamond(q, "1.a~2.a", "1.a~2.a")
        assert report.diamond == ["1.a~2.a"]
        assert report.case == DiamondCase.SEAM
        assert report.holds

    def test_interior_pair(self):
        spec = GluedHalfPlanes(0.0).to_spec((0.0, 2.0), (-1.0, 1.0), (5, 5))
        q = build_quotient(spec)
        report = causal_diamond(q, "1.g0_0", "1.g2_0")
        assert report.case == DiamondCase.INTERIOR
        assert report.holds
        assert set(report.diamond) == {"1.g0_0", "1.g1_0", "1.g1_1", "1.g2_0"}

    def test_seam_to_seam_on_grid(self):
        spec = GluedHalfPlanes(0.0).to_spec((0.0, 2.25), (-1.0, 1.25), (10, 10))
        assert spec.x1.size + spec.x2.size - len(spec.pairs) == 100
        q = build_quotient(spec)
        report = causal_diamond(q, "1.g0_4~2.g0_4", "1.g9_4~2.g9_4")
        assert report.case == DiamondCase.SEAM
        assert report.leq_preserving
        assert report.holds
        assert len(report.diamond) > 10

    def test_cross_pair_has_no_claim(self, seam_spec):
        report = causal_diamond(build_quotient(seam_spec), "1.x", "2.y")
        assert report.case == DiamondCase.NONE
        assert report.holds is None
        assert set(report.diamond) == {"1.x", "1.a~2.a", "2.y"}


class TestGluedHalfPlanes:
    """粘合半平面测试"""

    @pytest.mark.parametrize("width", [0.0, 0.5])
    def test_quotient_matches_plane(self, width):
        """有限采样的商空间：同侧类对 τ̃ 等于平面 τ，跨侧不超过平面 τ"""
        glued = GluedHalfPlanes(width)
        spec = glued.to_spec((-1.0, 1.0), (-1.0, 1.0), (9, 9))
        q = build_quotient(spec)

        coords = []
        for members in q.classes:
            side, pid = members[0].split(".", 1)
            space = spec.x1 if side == "1" else spec.x2
            coords.append(space.coord_of(pid).ambient_coords)
        plane = get_model(0.0).pairwise(np.array(coords, dtype=float))[0]

        sides = [{m.split(".", 1)[0] for m in members} for members in q.classes]
        same = np.array([[bool(a & b) for b in sides] for a in sides])
        diff = q.tilde_tau - plane
        assert np.abs(diff[same]).max() <= 1e-9
        assert diff[~same].max() <= 1e-9
        # 跨侧的类时对经接缝得到正的 τ̃
        assert (q.tilde_tau[~same] > 0).any()
        assert (plane[same] > 0).any()

    def test_sheets(self):
        glued = GluedHalfPlanes(0.5)
        assert glued.sheet((0.0, -0.1)) == 1
        assert glued.sheet((0.0, 0.3)) == 0
        assert glued.sheet((0.0, 0.6)) == 2

    def test_segment_passes_through_seam(self):
        glued = GluedHalfPlanes()
        p, q = (0.0, -1.0), (3.0, 1.0)
        assert glued.segment_point(p, q, 0.5) == pytest.approx((1.5, 0.0))
        assert glued.segment_point(p, q, 0.0) == pytest.approx(p)
        assert glued.segment_point(p, q, 1.0) == pytest.approx(q)

    def test_negative_width(self):
        with pytest.raises(ValueError):
            GluedHalfPlanes(-1.0)
