"""
宽透镜判定测试

@author Ysf
@date 2026-10-16
"""

import math

import pytest

from lorentz_cli.lens import Lens, lens_membership, wide_tau
from lorentz_core.amalgamation import NotChronological


class TestWideTau:
    """η⁺ 时间分离"""

    def test_time_axis(self):
        """沿时间轴 τ^{η⁺} 是 Minkowski 值的两倍"""
        assert wide_tau((0.0, 0.0), (1.0, 0.0)) == pytest.approx(2.0)

    def test_wider_cone(self):
        """Minkowski 类空但 η⁺ 类时"""
        assert wide_tau((0.0, 0.0), (0.3, 0.5)) == pytest.approx(math.sqrt(0.36 - 0.25))

    def test_past_is_zero(self):
        assert wide_tau((1.0, 0.0), (0.0, 0.0)) == 0.0

    def test_too_few_coordinates(self):
        with pytest.raises(ValueError):
            wide_tau((0.0,), (1.0,))


class TestLens:
    """透镜成员判定"""

    @pytest.mark.parametrize("omega", [0.0, 0.5, 1.0, 2.5])
    @pytest.mark.parametrize("leg", [0.1, 1.0, 3.0])
    def test_origin_is_member(self, omega, leg):
        """对称端点的透镜总是包含原点"""
        lens = Lens.symmetric(omega, leg)
        assert lens.contains((0.0, 0.0))

    def test_origin_member_in_three_dimensions(self):
        lens = Lens.symmetric(1.0, 1.0, dim=3)
        assert len(lens.b_minus) == 3
        assert lens.contains((0.0, 0.0, 0.0))

    def test_symmetric_endpoints(self):
        """[b₋, b₊] 平行于时间轴，两段 Minkowski 长度均为 leg"""
        lens = Lens.symmetric(1.2, 2.0)
        (t0, s0), (t1, s1) = lens.b_minus, lens.b_plus
        assert s0 == pytest.approx(s1)
        assert t1 == pytest.approx(-t0)
        assert math.sqrt(t1 * t1 - s1 * s1) == pytest.approx(2.0)

    def test_endpoint_is_not_member(self):
        lens = Lens.symmetric(0.0, 1.0)
        assert not lens.contains(lens.b_minus)
        assert not lens.contains(lens.b_plus)

    def test_far_point(self):
        lens = Lens.symmetric(0.0, 1.0)
        assert not lens.contains((0.0, 10.0))

    def test_radius_excludes(self):
        """透镜内的点在欧氏球外时判为不属于"""
        assert Lens.symmetric(0.0, 1.0).contains((0.2, 0.0))
        assert not Lens.symmetric(0.0, 1.0, radius=0.1).contains((0.2, 0.0))

    def test_not_chronological(self):
        with pytest.raises(NotChronological):
            Lens((0.0, 0.0), (0.1, 1.0))

    def test_wide_cone_endpoints_accepted(self):
        lens = Lens((0.0, 0.0), (0.3, 0.5))
        assert lens.R == pytest.approx(math.sqrt(0.11))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            Lens((0.0, 0.0), (1.0, 0.0, 0.0))
        lens = Lens.symmetric(0.0, 1.0)
        with pytest.raises(ValueError):
            lens.contains((0.0, 0.0, 0.0))

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            Lens.symmetric(-1.0, 1.0)
        with pytest.raises(ValueError):
            Lens.symmetric(0.0, 1.0, radius=0.0)

    def test_report(self):
        report = Lens.symmetric(0.0, 1.0).report((0.0, 0.0))
        assert report["member"] is True
        assert report["R"] == pytest.approx(4.0)
        assert report["tau_from_b_minus"] == pytest.approx(2.0)
        assert report["tau_to_b_plus"] == pytest.approx(2.0)


class TestLensMembership:
    """函数式入口"""

    def test_member(self):
        assert lens_membership([-1.0, 0.0], [1.0, 0.0], [0.0, 0.0])

    def test_not_chronological(self):
        with pytest.raises(NotChronological):
            lens_membership([0.0, 0.0], [0.1, 1.0], [0.05, 0.0])
