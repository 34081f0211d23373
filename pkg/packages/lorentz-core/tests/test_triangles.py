"""
模型三角形与单调性测试

@author Ysf
@date 2026-10-16
"""

import math

import numpy as np
import pytest

from lorentz_core.model import (
    GridTooCoarse,
    ReverseTriangleViolated,
    SideLengths,
    SizeBoundViolated,
    SturmNotApplicable,
    UnrealizableTriple,
    get_model,
    hinge_behaviour_probe,
    hinge_monotonicity_probe,
    law_of_cosines_third_side,
    realize_adjacent_vertex,
    realize_signed_triangle,
    realize_triangle,
    size_bounds_check,
    sturm_check,
)

CURVATURES = [-1.0, 0.0, 1.0]


def measured_hinge_third_side(K: float, a: float, b: float, omega: float) -> float:
    """在中间顶点处显式构造铰链并测量两端点间的 τ"""
    model = get_model(K)
    y = model.origin()
    x = model.exp(y, a * model.boost(y, omega / 2.0, future=False))
    z = model.exp(y, b * model.boost(y, -omega / 2.0, future=True))
    return model.tau(x, z)


class TestLawOfCosines:
    """余弦定律测试"""

    @pytest.mark.parametrize("K", CURVATURES)
    def test_collinear(self, K):
        assert law_of_cosines_third_side(K, 0.4, 0.7, 0.0) == pytest.approx(1.1, abs=1e-12)

    def test_flat_oracle(self):
        # 过去腿 boost +0.5，未来腿 boost -0.5，夹角 1
        x = np.array([-math.cosh(0.5), -math.sinh(0.5)])
        z = np.array([math.cosh(0.5), -math.sinh(0.5)])
        d = z - x
        oracle = math.sqrt(d[0] ** 2 - d[1] ** 2)
        assert law_of_cosines_third_side(0.0, 1.0, 1.0, 1.0) == pytest.approx(oracle, abs=1e-9)

    @pytest.mark.parametrize("K", CURVATURES)
    def test_matches_realize_and_measure(self, K, rng):
        for _ in range(100):
            a, b = rng.uniform(0.05, 0.6, size=2)
            omega = rng.uniform(0.0, 1.2)
            expected = measured_hinge_third_side(K, a, b, omega)
            assert law_of_cosines_third_side(K, a, b, omega) == pytest.approx(expected, abs=1e-9)

    def test_increasing_in_angle(self):
        assert law_of_cosines_third_side(0.0, 1.0, 1.0, 1.5) > law_of_cosines_third_side(0.0, 1.0, 1.0, 1.0)

    def test_anti_de_sitter_bound(self):
        with pytest.raises(SizeBoundViolated):
            law_of_cosines_third_side(-1.0, 1.5, 1.5, 0.5)


class TestRealizeTriangle:
    """比较三角形实现测试"""

    def test_flat_example(self):
        x, y, z = realize_triangle(0.0, SideLengths(1.0, 1.0, 3.0))
        assert x.ambient_coords == (0.0, 0.0)
        assert z.ambient_coords == (3.0, 0.0)
        assert y.ambient_coords == pytest.approx((1.5, math.sqrt(1.25)), abs=1e-12)

    def test_flat_degenerate(self):
        _, y, _ = realize_triangle(0.0, SideLengths(1.0, 1.0, 2.0))
        assert y.ambient_coords == pytest.approx((1.0, 0.0), abs=1e-12)

    def test_de_sitter_example(self):
        model = get_model(1.0)
        x, y, z = realize_triangle(1.0, SideLengths(0.2, 0.2, 0.5))
        assert model.tau(x, y) == pytest.approx(0.2, abs=1e-9)
        assert model.tau(y, z) == pytest.approx(0.2, abs=1e-9)
        assert model.tau(x, z) == pytest.approx(0.5, abs=1e-9)

    @pytest.mark.parametrize("K", CURVATURES)
    def test_round_trip(self, K):
        rng = np.random.default_rng(1000 + int(K))
        model = get_model(K)
        for _ in range(1000):
            a, b = rng.uniform(0.01, 1.2, size=2)
            c = a + b + rng.uniform(0.0, 0.6)
            x, y, z = realize_triangle(K, SideLengths(a, b, c))
            assert model.tau(x, y) == pytest.approx(a, abs=1e-9)
            assert model.tau(y, z) == pytest.approx(b, abs=1e-9)
            assert model.tau(x, z) == pytest.approx(c, abs=1e-9)
            assert y.ambient_coords[-1] >= -1e-12

    @pytest.mark.parametrize("K", CURVATURES)
    def test_null_short_sides(self, K):
        model = get_model(K)
        x, y, z = realize_triangle(K, SideLengths(0.0, 0.6, 1.0))
        assert model.tau(x, y) == pytest.approx(0.0, abs=1e-9)
        assert model.causal(x, y)
        assert model.tau(y, z) == pytest.approx(0.6, abs=1e-9)
        x, y, z = realize_triangle(K, SideLengths(0.6, 0.0, 1.0))
        assert model.tau(x, y) == pytest.approx(0.6, abs=1e-9)
        assert model.tau(y, z) == pytest.approx(0.0, abs=1e-9)
        assert model.causal(y, z)

    def test_deterministic(self):
        first = realize_triangle(1.0, SideLengths(0.3, 0.4, 0.9))
        second = realize_triangle(1.0, SideLengths(0.3, 0.4, 0.9))
        assert first == second

    def test_errors(self):
        with pytest.raises(ReverseTriangleViolated):
            realize_triangle(0.0, SideLengths(1.0, 1.0, 1.5))
        with pytest.raises(SizeBoundViolated):
            realize_triangle(1.0, SideLengths(1.0, 1.0, 3.2))


class TestSizeBounds:
    """尺寸界测试"""

    def test_flat_has_no_bound(self):
        assert size_bounds_check(0.0, SideLengths(10.0, 20.0, 100.0))

    def test_de_sitter_diameter(self):
        assert not size_bounds_check(1.0, SideLengths(1.0, 1.0, 3.2))
        assert size_bounds_check(1.0, SideLengths(1.0, 1.0, 3.0))

    def test_reverse_inequality(self):
        assert not size_bounds_check(0.0, SideLengths(1.0, 1.0, 1.9))
        assert size_bounds_check(0.0, SideLengths(1.0, 1.0, 2.0))


class TestSignedRealization:
    """带符号三角形实现测试"""

    @pytest.mark.parametrize("K", CURVATURES)
    def test_reproduces_signed_distances(self, K, rng):
        model = get_model(K)
        for _ in range(50):
            a, b = rng.uniform(0.1, 0.8, size=2)
            c = a + b + rng.uniform(0.01, 0.5)
            spacelike = rng.uniform(0.05, 0.6)
            for sides in ((-a, -b, -c), (-a, spacelike, -c)):
                try:
                    p, q, r = realize_signed_triangle(K, *sides)
                except UnrealizableTriple:
                    continue
                assert model.signed_distance(p, q).value == pytest.approx(sides[0], abs=1e-9)
                assert model.signed_distance(q, r).value == pytest.approx(sides[1], abs=1e-9)
                assert model.signed_distance(p, r).value == pytest.approx(sides[2], abs=1e-9)
                assert model.tau(p, q) > 0

    def test_null_side(self):
        model = get_model(0.0)
        p, q, r = realize_signed_triangle(0.0, -1.0, 0.0, -2.0)
        assert model.signed_distance(q, r).value == pytest.approx(0.0, abs=1e-9)

    def test_unrealizable(self):
        # 三条类时边违反反向三角不等式，Gram 矩阵有两个负特征值
        with pytest.raises(UnrealizableTriple):
            realize_signed_triangle(0.0, -1.0, -1.0, -1.0)


class TestAdjacentVertex:
    """相邻顶点放置测试"""

    def test_flat_quadrilateral(self, flat):
        x, p, y, z = flat.point(0.0, 0.0), flat.point(1.8, 0.1), flat.point(2.8, 0.8), flat.point(4.0, 0.0)
        got = realize_adjacent_vertex(0.0, p, y, -flat.tau(p, z), -flat.tau(y, z), opposite_to=x)
        np.testing.assert_allclose(got.vec, z.vec, atol=1e-9)

    @pytest.mark.parametrize("K", [-1.0, 1.0])
    def test_curved_reproduces_distances(self, K):
        model = get_model(K)
        x, y, z = realize_triangle(K, SideLengths(0.3, 0.4, 0.8))
        w = realize_adjacent_vertex(K, x, z, -0.45, -0.3, opposite_to=y)
        assert model.signed_distance(x, w).value == pytest.approx(-0.45, abs=1e-9)
        assert model.signed_distance(z, w).value == pytest.approx(-0.3, abs=1e-9)
        assert model.orientation(x, z, w) * model.orientation(x, z, y) < 0

    def test_null_line_single_solution(self, flat):
        a, b, c = flat.point(0.0, 0.0), flat.point(1.0, 1.0), flat.point(2.0, 0.5)
        got = realize_adjacent_vertex(
            0.0, a, b, flat.signed_distance(a, c), flat.signed_distance(b, c), opposite_to=flat.point(0.0, 1.0)
        )
        np.testing.assert_allclose(got.vec, c.vec, atol=1e-9)

    def test_reference_on_line(self, flat):
        a, b = flat.point(0.0, 0.0), flat.point(2.0, 0.0)
        with pytest.raises(UnrealizableTriple):
            realize_adjacent_vertex(0.0, a, b, -1.0, -1.0, opposite_to=flat.point(1.0, 0.0))

    @pytest.mark.parametrize("K", CURVATURES)
    def test_recovers_vertex_off_origin(self, K):
        """a、b 远离原点时，由两段有号距离恢复参照点对侧的原顶点"""
        model = get_model(K)
        rng = np.random.default_rng(71 + int(K))
        checked = 0
        for _ in range(100):
            a, b, c, ref = (model.chart(*rng.uniform(-0.4, 0.4, size=2)) for _ in range(4))
            if abs(model.signed_distance(a, b).value) < 0.05:
                continue
            side_c, side_ref = model.orientation(a, b, c), model.orientation(a, b, ref)
            if abs(side_c) < 1e-3 or abs(side_ref) < 1e-3 or side_c * side_ref > 0:
                continue
            got = realize_adjacent_vertex(
                K, a, b, model.signed_distance(a, c), model.signed_distance(b, c), opposite_to=ref
            )
            np.testing.assert_allclose(got.vec, c.vec, atol=1e-7)
            checked += 1
        assert checked > 10


class TestHingeProbe:
    """铰链引理探针测试"""

    def test_constant_grid(self):
        report = hinge_monotonicity_probe(0.0, (-1.0, -1.0), [-2.5] * 5)
        assert len(set(np.round(report.angle_pqr, 12))) == 1
        assert report.holds

    def test_flat_example(self):
        grid = list(np.linspace(-2.1, -3.0, 10))
        report = hinge_monotonicity_probe(0.0, (-1.0, -1.0), grid)
        assert report.grid[0] == pytest.approx(-3.0)
        # 沿 |pr|± 升序 ∠pqr 严格减小，∠qpr 严格增大
        assert np.all(np.diff(report.angle_pqr) < 0)
        assert np.all(np.diff(report.angle_qpr) > 0)
        assert report.holds

    @pytest.mark.parametrize("K", CURVATURES)
    def test_seeded_hinges(self, K):
        rng = np.random.default_rng(200 + int(K))
        for _ in range(200):
            a, b = rng.uniform(0.1, 0.8, size=2)
            grid = -(a + b + np.linspace(0.01, 1.0, 12))
            report = hinge_monotonicity_probe(K, (-a, -b), list(grid))
            assert report.holds, (K, a, b)

    @pytest.mark.parametrize("K", CURVATURES)
    def test_hinge_behaviour(self, K):
        rng = np.random.default_rng(300 + int(K))
        for _ in range(200):
            b = rng.uniform(0.05, 0.3)
            omega = rng.uniform(0.1, 0.8)
            report = hinge_behaviour_probe(K, b, omega, list(np.linspace(1.0, 2.0, 9)))
            assert report.non_decreasing

    def test_behaviour_rejects_non_triangle(self):
        with pytest.raises(UnrealizableTriple):
            hinge_behaviour_probe(0.0, 1.0, 1.0, [0.5])


class TestSturmCheck:
    """离散 Sturm 检查测试"""

    def test_zero_function(self):
        t = np.linspace(0.0, 1.0, 20)
        assert sturm_check(0.0, list(zip(t, np.zeros_like(t))))

    def test_concave_parabola(self):
        t = np.linspace(0.0, 1.0, 50)
        assert sturm_check(0.0, list(zip(t, t * (1.0 - t))))

    def test_convex_parabola_not_applicable(self):
        t = np.linspace(0.0, 1.0, 50)
        with pytest.raises(SturmNotApplicable):
            sturm_check(0.0, list(zip(t, -t * (1.0 - t))))

    def test_sine_with_positive_k(self):
        t = np.linspace(0.0, math.pi - 0.2, 60)
        assert sturm_check(0.9, list(zip(t, np.sin(t))))

    def test_interval_too_long(self):
        t = np.linspace(0.0, 3.5, 60)
        with pytest.raises(SturmNotApplicable):
            sturm_check(1.0, list(zip(t, np.zeros_like(t))))

    def test_too_coarse(self):
        with pytest.raises(GridTooCoarse):
            sturm_check(0.0, [(0.0, 0.0), (0.5, 0.1), (1.0, 0.0)])
